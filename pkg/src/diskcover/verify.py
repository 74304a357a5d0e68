"""Independent certificate verification.

Re-checks a homeomorph certificate from first principles using only the
hypergraph core and the complex classifier; nothing from the search
modules is consulted. Checks run in a fixed order:

a. every disk triangle is an edge of H;
b. every disk classifies as a boundary-inducing disk whose boundary is
   exactly its assigned 4-cycle;
c. any two disks intersect exactly in the 1-complex shared by their
   boundary cycles (common vertices and common edges, no triangles),
   which forces pairwise disjoint interiors avoiding all cycles;
d. the target pattern: for a complete-hypergraph target the embedding
   must be injective, carry the pattern edges into the skeleton, and
   the cycle list must be the image of the pattern's special 4-cycles
   in order; for surface targets the union of all disks must classify
   as the right closed surface by (Euler characteristic, orientability).

A malformed certificate (wrong counts, missing embedding labels) raises
:class:`CertificateError` instead of producing a failed report.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .certificates import KTT, PROJECTIVE_PLANE, SPHERE, TORUS, HomeomorphCertificate
from .complexes import (
    CLOSED_SURFACE,
    DISK,
    TwoComplex,
    boundary,
    classify,
    complex_intersection,
    cycle_complex,
    intersect_subcomplexes,
    is_boundary_inducing,
)
from .gamma import gamma, role_name
from .hypergraph import Hypergraph3, skeleton


class CertificateError(ValueError):
    """Raised for structurally malformed certificates (not failed checks)."""


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str


@dataclass(frozen=True)
class VerificationReport:
    passed: bool
    checks: tuple[CheckResult, ...]
    target_confirmed: bool

    def as_dict(self) -> dict:
        return {
            "passed": self.passed,
            "target_confirmed": self.target_confirmed,
            "checks": [
                {"name": c.name, "passed": c.passed, "detail": c.detail}
                for c in self.checks
            ],
        }


_SURFACE_SIGNATURE = {
    TORUS: (0, True),
    PROJECTIVE_PLANE: (1, False),
    SPHERE: (2, True),
}


def _cycle_edge_set(cycle) -> frozenset[tuple[int, int]]:
    return frozenset(
        tuple(sorted((cycle[i], cycle[(i + 1) % 4]))) for i in range(4))


def _check_triangles(H: Hypergraph3, cert) -> CheckResult:
    stray = [
        t for d in cert.disks for t in sorted(d.triangles) if t not in H.edges
    ]
    if stray:
        return CheckResult(
            "disk-triangles-in-hypergraph", False,
            f"{len(stray)} disk triangle(s) not edges of H, first {stray[0]}")
    return CheckResult("disk-triangles-in-hypergraph", True,
                       f"all {sum(len(d) for d in cert.disks)} triangles present")


def _check_disks(cert) -> CheckResult:
    for i, (cyc, disk) in enumerate(zip(cert.cycles, cert.disks)):
        cls = classify(disk)
        if cls.kind != DISK:
            return CheckResult("disks-bound-cycles", False,
                               f"disk {i} classifies as {cls.kind}")
        if boundary(disk).edges != _cycle_edge_set(cyc):
            return CheckResult("disks-bound-cycles", False,
                               f"disk {i} boundary differs from cycle {cyc}")
        if not is_boundary_inducing(disk):
            return CheckResult("disks-bound-cycles", False,
                               f"disk {i} is not boundary-inducing")
    return CheckResult("disks-bound-cycles", True,
                       f"all {len(cert.disks)} disks boundary-inducing with "
                       "assigned boundaries")


def _check_intersections(cert) -> CheckResult:
    k = len(cert.disks)
    for i in range(k):
        ci = cycle_complex(cert.cycles[i])
        for j in range(i + 1, k):
            expected = intersect_subcomplexes(ci, cycle_complex(cert.cycles[j]))
            actual = complex_intersection(cert.disks[i], cert.disks[j])
            if actual != expected:
                return CheckResult(
                    "pairwise-intersections", False,
                    f"disks {i},{j} intersect beyond their shared boundary")
    return CheckResult("pairwise-intersections", True,
                       f"all {k * (k - 1) // 2} disk pairs clean")


def _check_ktt_pattern(H: Hypergraph3, cert) -> CheckResult:
    name = "pattern-ktt"
    pattern = gamma(cert.t)
    labels = [role_name(r) for r in pattern.roles]
    missing = [lab for lab in labels if lab not in cert.embedding]
    if missing:
        raise CertificateError(
            f"embedding missing pattern labels: {', '.join(missing[:4])}")
    image = [cert.embedding[lab] for lab in labels]
    if len(set(image)) != len(image):
        return CheckResult(name, False, "embedding is not injective")
    skel = skeleton(H)
    for a, b in sorted(pattern.edges):
        if not skel.has_edge(image[a], image[b]):
            return CheckResult(
                name, False,
                f"pattern edge {labels[a]}-{labels[b]} missing from skeleton")
    expected_cycles = tuple(
        (image[a], image[b], image[c], image[d])
        for a, b, c, d in pattern.special_cycles)
    if cert.cycles != expected_cycles:
        return CheckResult(name, False,
                           "cycle list is not the image of the special 4-cycles")
    return CheckResult(
        name, True,
        f"injective embedding of {len(labels)} pattern vertices, "
        f"{len(expected_cycles)} special cycles matched")


def _check_surface(cert) -> CheckResult:
    name = f"pattern-{cert.target}"
    union = TwoComplex(t for d in cert.disks for t in d.triangles)
    cls = classify(union)
    want_euler, want_orient = _SURFACE_SIGNATURE[cert.target]
    if cls.kind != CLOSED_SURFACE:
        return CheckResult(name, False, f"disk union classifies as {cls.kind}")
    if cls.euler != want_euler or cls.orientable is not want_orient:
        return CheckResult(
            name, False,
            f"closed surface with euler {cls.euler}, orientable "
            f"{cls.orientable}; wanted {want_euler}, {want_orient}")
    return CheckResult(name, True,
                       f"closed surface, euler {cls.euler}, "
                       f"orientable {cls.orientable}")


def verify_certificate(H: Hypergraph3,
                       cert: HomeomorphCertificate) -> VerificationReport:
    """Re-verify a certificate against H; see module docstring for checks."""
    if len(cert.cycles) != len(cert.disks):
        raise CertificateError("cycle and disk counts differ")
    if not cert.disks:
        raise CertificateError("certificate carries no disks")
    if cert.target == KTT:
        expected = 3 * comb(cert.t, 3)
        if len(cert.cycles) != expected:
            raise CertificateError(
                f"ktt target t={cert.t} needs {expected} cycles, "
                f"got {len(cert.cycles)}")
    for c in cert.cycles:
        if len(set(c)) != 4:
            raise CertificateError(f"cycle {c} has repeated vertices")
        if any(not 0 <= v < H.n for v in c):
            raise CertificateError(f"cycle {c} leaves the vertex range")

    checks = [_check_triangles(H, cert), _check_disks(cert),
              _check_intersections(cert)]
    if cert.target == KTT:
        pattern_check = _check_ktt_pattern(H, cert)
    else:
        pattern_check = _check_surface(cert)
    checks.append(pattern_check)
    passed = all(c.passed for c in checks)
    return VerificationReport(passed, tuple(checks), pattern_check.passed)
