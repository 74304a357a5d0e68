"""Disk coverability and path admissibility: estimators, oracles, audits.

Definitions implemented here, stated over a 3-uniform hypergraph H with
skeleton S(H) and a sampling pair (p, epsilon):

* A 4-cycle C = v w v' w' in S(H) is (p, epsilon)-disk-coverable when a
  p-random vertex subset U contains the interior of some
  boundary-inducing disk of H with boundary C, with probability at
  least 1 - epsilon.
* A length-2 path w u w' in a graph G is (p, epsilon)-admissible when a
  p-random U (drawn from V(G) minus u) contains the internal vertices
  of some length >= 2 path from w to w', with probability at least
  1 - epsilon.

Both events are monotone in U, which the exact oracles exploit: they
walk the subset lattice once, branching vertex by vertex, and prune a
branch as soon as the event is decided with the vertices chosen so far
(success with only the included ones, or failure even if every
undecided vertex were included). Probabilities and the audited weighted
sums are kept in exact `fractions.Fraction` arithmetic; the inequalities
they feed are strict and must not be flipped by rounding. Monte Carlo
estimates are ordinary floats.

Pair statistics: psi(v, v') is the fraction of common-neighbour pairs
{w, w'} whose 4-cycle v w v' w' fails the coverability test (0 when the
codegree is 0), and phi sums the three pair values of a triple divided
by the triple codegree, with the same 0 convention.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Callable, Iterable, Sequence

from .complexes import DISK, TwoComplex, boundary, classify, is_boundary_inducing
from .hypergraph import (
    Hypergraph3,
    SkeletonGraph,
    common_neighborhood,
    iter_p2s,
    link_intersection,
    skeleton,
)
from .rng import mix64, trial_masks

PYRAMID_ONLY = "pyramid-only"
EXHAUSTIVE_SMALL = "exhaustive-small"

# stream tags keep the admissibility and coverability samplers on
# disjoint Philox streams even under identical seeds
_STREAM_ADMISSIBLE = 0xAD
_STREAM_COVER = 0xC0

_EXACT_LIMIT = 25


def as_fraction(x) -> Fraction:
    """Exact Fraction from int, float, str, or Fraction input."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, str)):
        return Fraction(x)
    if isinstance(x, float):
        return Fraction(x)
    raise TypeError(f"cannot interpret {x!r} as a fraction")


@dataclass(frozen=True)
class EstimatorParams:
    """Sampling parameters shared by the Monte Carlo estimators."""

    p: float = 0.5
    epsilon: float = 0.1
    trials: int = 256
    seed: int = 0
    strategy: str = PYRAMID_ONLY
    max_interior: int = 3

    def __post_init__(self):
        if not 0 < self.p < 1:
            raise ValueError("p must lie strictly between 0 and 1")
        if not 0 < self.epsilon < 1:
            raise ValueError("epsilon must lie strictly between 0 and 1")
        if self.trials < 1:
            raise ValueError("trials must be positive")
        if self.strategy not in (PYRAMID_ONLY, EXHAUSTIVE_SMALL):
            raise ValueError(f"unknown strategy {self.strategy!r}")
        if self.max_interior < 1:
            raise ValueError("max_interior must be at least 1")


@dataclass(frozen=True)
class CoverabilityEstimate:
    successes: int
    trials: int
    estimate: float
    decided_coverable: bool

    @classmethod
    def from_counts(cls, successes: int, trials: int,
                    epsilon: float) -> "CoverabilityEstimate":
        est = successes / trials
        return cls(successes, trials, est, est >= 1 - epsilon)


@dataclass(frozen=True)
class PairStats:
    """xi non-coverable 4-cycles out of codeg*(codeg-1)/2; psi = xi/codeg."""

    xi: int
    codeg: int
    psi: Fraction


@dataclass(frozen=True)
class P2Audit:
    """Weighted count of length-2 paths not lying on any cycle >= 4."""

    weighted_sum: Fraction
    bound: Fraction
    holds: bool
    inadmissible: tuple[tuple[int, int, int], ...]


@dataclass(frozen=True)
class WeightedAudit:
    """Weighted count of (p, epsilon)-inadmissible length-2 paths."""

    weighted_sum: Fraction
    bound: Fraction
    holds: bool
    inadmissible: tuple[tuple[int, int, int], ...] = field(default=())


# ---------------------------------------------------------------------------
# pyramid disks


def pyramid_disk(v: int, vp: int, path: Sequence[int]) -> TwoComplex:
    """The disk {v w_i w_{i+1}} + {v' w_i w_{i+1}} over path w_0..w_k.

    Its boundary is the 4-cycle v w_0 v' w_k, and it is boundary-inducing
    exactly when the path has length k >= 2 (for k = 1 the skeleton edge
    w_0 w_1 is a chord of the boundary).
    """
    seq = list(path)
    if v == vp:
        raise ValueError("pyramid apexes must be distinct")
    if len(seq) < 2:
        raise ValueError("pyramid path needs length at least 1")
    if len(set(seq)) != len(seq):
        raise ValueError("pyramid path must be simple")
    if v in seq or vp in seq:
        raise ValueError("pyramid path must avoid both apexes")
    tris = []
    for a, b in zip(seq, seq[1:]):
        tris.append((v, a, b))
        tris.append((vp, a, b))
    return TwoComplex(tris)


# ---------------------------------------------------------------------------
# bitmask path events


def _mask_path_event(adj: dict[int, int], a: int, b: int, interior: int) -> bool:
    """Is there a length >= 2 path a..b with internal vertices in `interior`?

    Equivalent to a-b connectivity in the graph induced on
    interior + {a, b} with the direct edge ab removed; a shortest walk
    there is a simple path with at least one internal vertex.
    """
    if a not in adj or b not in adj:
        return False
    abit, bbit = 1 << a, 1 << b
    allowed = interior | abit | bbit
    reached = abit
    frontier = abit
    while frontier:
        step = 0
        f = frontier
        while f:
            low = f & -f
            f ^= low
            vtx = low.bit_length() - 1
            row = adj[vtx]
            if vtx == a:
                row &= ~bbit
            elif vtx == b:
                row &= ~abit
            step |= row
        frontier = step & allowed & ~reached
        if frontier & bbit:
            return True
        reached |= frontier
    return False


def _li_event(li: SkeletonGraph, a: int, b: int, umask: int) -> bool:
    """Pyramid event: path a..b in a link intersection, internals in U."""
    interior = umask & li.vertex_mask() & ~((1 << a) | (1 << b))
    return _mask_path_event(li.adj_mask, a, b, interior)


# ---------------------------------------------------------------------------
# exact probabilities for monotone events


def _monotone_probability(universe: Sequence[int],
                          event: Callable[[int], bool],
                          p) -> Fraction:
    """Pr[event(U)] for U a p-random subset of `universe`.

    `event` takes an inclusion bitmask and must be monotone (adding
    vertices never destroys it). Branches the subset lattice one vertex
    at a time, closing a branch as soon as the event is decided.
    """
    pf = as_fraction(p)
    qf = 1 - pf
    order = sorted(universe)
    full = 0
    for v in order:
        full |= 1 << v

    def rec(idx: int, included: int, undecided: int, weight: Fraction) -> Fraction:
        if event(included):
            return weight
        if not event(included | undecided):
            return Fraction(0)
        bit = 1 << order[idx]
        rest = undecided & ~bit
        return (rec(idx + 1, included | bit, rest, weight * pf)
                + rec(idx + 1, included, rest, weight * qf))

    return rec(0, 0, full, Fraction(1))


# ---------------------------------------------------------------------------
# admissibility of length-2 paths


def _check_p2(G: SkeletonGraph, w: int, u: int, wp: int) -> None:
    if w == wp:
        raise ValueError("endpoints of the length-2 path must differ")
    for x in (w, u, wp):
        if x not in G.vertices:
            raise ValueError(f"vertex {x} not in graph")
    if not (G.has_edge(w, u) and G.has_edge(u, wp)):
        raise ValueError(f"{w}-{u}-{wp} is not a path in the graph")


def _admissible_universe(G: SkeletonGraph, w: int, u: int, wp: int) -> list[int]:
    # only vertices that can appear inside a w..w' path matter; u is
    # excluded from U by definition and w, w' are endpoints either way
    return [x for x in G.vertices if x not in (u, w, wp)]


def sample_admissibility(G: SkeletonGraph, w: int, u: int, wp: int,
                         params: EstimatorParams) -> CoverabilityEstimate:
    """Monte Carlo estimate that the path w u w' is (p, epsilon)-admissible.

    Each trial draws U from V(G) minus u with inclusion probability p and
    succeeds when some simple w..w' path of length >= 2 has all internal
    vertices inside U. Deterministic in (params.seed, trials) and in the
    path's vertex labels; trials may be evaluated in any order.
    """
    _check_p2(G, w, u, wp)
    universe = _admissible_universe(G, w, u, wp)
    umask_all = 0
    for x in universe:
        umask_all |= 1 << x
    width = max(G.vertices) + 1
    masks = trial_masks(params.seed, (_STREAM_ADMISSIBLE, w, u, wp),
                        params.trials, width, params.p)
    hits = 0
    for m in masks:
        if _mask_path_event(G.adj_mask, w, wp, m & umask_all):
            hits += 1
    return CoverabilityEstimate.from_counts(hits, params.trials, params.epsilon)


def exact_admissibility(G: SkeletonGraph, w: int, u: int, wp: int,
                        p) -> Fraction:
    """Exact probability of the admissibility event, by lattice walk."""
    _check_p2(G, w, u, wp)
    if G.n > _EXACT_LIMIT:
        raise ValueError(f"exact oracle limited to {_EXACT_LIMIT} vertices")
    universe = _admissible_universe(G, w, u, wp)

    def event(mask: int) -> bool:
        return _mask_path_event(G.adj_mask, w, wp, mask)

    return _monotone_probability(universe, event, p)


def admissibility_probabilities(G: SkeletonGraph, p) -> dict[tuple[int, int, int], Fraction]:
    """Exact admissibility probability for every unlabeled length-2 path."""
    if G.n > _EXACT_LIMIT:
        raise ValueError(f"exact oracle limited to {_EXACT_LIMIT} vertices")
    out: dict[tuple[int, int, int], Fraction] = {}
    for x, y, z in iter_p2s(G):
        out[(x, y, z)] = exact_admissibility(G, x, y, z, p)
    return out


# ---------------------------------------------------------------------------
# disk coverability


def _check_four_cycle(skel: SkeletonGraph, cycle: Sequence[int]) -> tuple[int, int, int, int]:
    cyc = tuple(cycle)
    if len(cyc) != 4 or len(set(cyc)) != 4:
        raise ValueError("boundary cycle must list four distinct vertices")
    for x in cyc:
        if x not in skel.vertices:
            raise ValueError(f"vertex {x} not in the skeleton")
    for a, b in zip(cyc, cyc[1:] + cyc[:1]):
        if not skel.has_edge(a, b):
            raise ValueError(f"cycle edge {a}-{b} missing from the skeleton")
    return cyc


class _DiskSearcher:
    """Exhaustive search for boundary-inducing disks over one 4-cycle.

    Candidate triangles are those of H inside the allowed vertex pool
    that do not span an opposite pair of the cycle (such a triangle
    would put a chord into the disk skeleton). The search grows a
    partial complex across its smallest open edge, so every disk with at
    most `max_interior` interior vertices is reached exactly once.
    """

    def __init__(self, H: Hypergraph3, cycle: Sequence[int], max_interior: int):
        self.cycle = tuple(cycle)
        a, b, c, d = self.cycle
        self.cycle_set = frozenset(self.cycle)
        self.cycle_edges = frozenset(
            tuple(sorted(e)) for e in ((a, b), (b, c), (c, d), (d, a)))
        opposite = ({a, c}, {b, d})
        cands = []
        for t in sorted(H.edges):
            on_cycle = self.cycle_set.intersection(t)
            if len(on_cycle) > 2 or on_cycle in opposite:
                continue
            cands.append(t)
        self.by_edge: dict[tuple[int, int], list[tuple[int, int, int]]] = {}
        for t in cands:
            x, y, z = t
            for e in ((x, y), (x, z), (y, z)):
                self.by_edge.setdefault(e, []).append(t)
        self.max_tris = 2 * (max_interior + 1)
        self.max_interior = max_interior

    def find(self, allowed_interior: int) -> TwoComplex | None:
        """First boundary-inducing disk whose interior bits all lie in the mask."""
        start = min(self.cycle_edges)

        def rec(used: list, inc: dict, interior: frozenset) -> TwoComplex | None:
            open_edges = [e for e, k in inc.items()
                          if k == 1 and e not in self.cycle_edges]
            if not open_edges:
                if any(inc.get(e, 0) != 1 for e in self.cycle_edges):
                    return None
                X = TwoComplex(used)
                cls = classify(X)
                if cls.kind != DISK:
                    return None
                if boundary(X).edges != self.cycle_edges:
                    return None
                return X if is_boundary_inducing(X) else None
            e = min(open_edges)
            for t in self.by_edge.get(e, ()):
                if t in used:
                    continue
                if len(used) + 1 > self.max_tris:
                    continue
                new_int = [x for x in t
                           if x not in self.cycle_set and x not in interior]
                if any(not (allowed_interior >> x) & 1 for x in new_int):
                    continue
                if len(interior) + len(new_int) > self.max_interior:
                    continue
                x, y, z = t
                edges = ((x, y), (x, z), (y, z))
                bad = False
                for f in edges:
                    k = inc.get(f, 0) + 1
                    if k > 2 or (f in self.cycle_edges and k > 1):
                        bad = True
                        break
                if bad:
                    continue
                inc2 = dict(inc)
                for f in edges:
                    inc2[f] = inc2.get(f, 0) + 1
                found = rec(used + [t], inc2, interior | frozenset(new_int))
                if found is not None:
                    return found
            return None

        for t in self.by_edge.get(start, ()):
            new_int = [x for x in t if x not in self.cycle_set]
            if any(not (allowed_interior >> x) & 1 for x in new_int):
                continue
            if len(new_int) > self.max_interior:
                continue
            x, y, z = t
            inc = {}
            for f in ((x, y), (x, z), (y, z)):
                inc[f] = 1
            found = rec([t], inc, frozenset(new_int))
            if found is not None:
                return found
        return None


def find_boundary_inducing_disk(H: Hypergraph3, cycle: Sequence[int],
                                allowed_interior: Iterable[int] | None = None,
                                max_interior: int = 3) -> TwoComplex | None:
    """A boundary-inducing disk of H with the given 4-cycle boundary, or None.

    Searches exhaustively over disks with at most `max_interior` interior
    vertices, optionally restricted to a pool of allowed interior
    vertices. Intended as a small-instance oracle.
    """
    searcher = _DiskSearcher(H, cycle, max_interior)
    if allowed_interior is None:
        mask = (1 << H.n) - 1
    else:
        mask = 0
        for v in allowed_interior:
            mask |= 1 << v
    return searcher.find(mask)


def _coverability_event(H: Hypergraph3, cycle: tuple[int, int, int, int],
                        strategy: str, max_interior: int) -> Callable[[int], bool]:
    """Build the per-sample success predicate for one boundary cycle.

    PyramidOnly tries both opposite-apex choices of the 4-cycle; the
    exhaustive strategy additionally searches all small disks.
    """
    v, w, vp, wp = cycle
    li_apex = link_intersection(H, v, vp)
    li_side = link_intersection(H, w, wp)

    def pyramid_event(umask: int) -> bool:
        return (_li_event(li_apex, w, wp, umask)
                or _li_event(li_side, v, vp, umask))

    if strategy == PYRAMID_ONLY:
        return pyramid_event
    searcher = _DiskSearcher(H, cycle, max_interior)

    def exhaustive_event(umask: int) -> bool:
        if pyramid_event(umask):
            return True
        return searcher.find(umask) is not None

    return exhaustive_event


def sample_disk_coverability(H: Hypergraph3, cycle: Sequence[int],
                             params: EstimatorParams,
                             skel: SkeletonGraph | None = None) -> CoverabilityEstimate:
    """Monte Carlo test that the 4-cycle is (p, epsilon)-disk-coverable.

    Per trial a p-random U of V(H) is drawn and the trial succeeds when
    some boundary-inducing disk with this boundary has its interior
    inside U. The search family is set by params.strategy. Deterministic
    in (seed, trials, cycle labels); independent of evaluation order.
    """
    skel = skel if skel is not None else skeleton(H)
    cyc = _check_four_cycle(skel, cycle)
    event = _coverability_event(H, cyc, params.strategy, params.max_interior)
    masks = trial_masks(params.seed, (_STREAM_COVER, *cyc),
                        params.trials, max(H.n, 1), params.p)
    hits = sum(1 for m in masks if event(m))
    return CoverabilityEstimate.from_counts(hits, params.trials, params.epsilon)


def exact_disk_coverability(H: Hypergraph3, cycle: Sequence[int], p,
                            strategy: str = PYRAMID_ONLY,
                            max_interior: int = 3) -> Fraction:
    """Exact coverability probability by monotone lattice walk (n <= 25)."""
    if H.n > _EXACT_LIMIT:
        raise ValueError(f"exact oracle limited to {_EXACT_LIMIT} vertices")
    cyc = _check_four_cycle(skeleton(H), cycle)
    event = _coverability_event(H, cyc, strategy, max_interior)
    universe = [x for x in H.vertices if x not in cyc]
    return _monotone_probability(universe, event, p)


# ---------------------------------------------------------------------------
# weighted inadmissibility audits


def _components_and_bridges(G: SkeletonGraph, drop: int):
    """Component ids and bridge edges of G minus one vertex."""
    comp: dict[int, int] = {}
    disc: dict[int, int] = {}
    low: dict[int, int] = {}
    bridges: set[tuple[int, int]] = set()
    timer = 0
    cid = 0
    verts = [v for v in sorted(G.vertices) if v != drop]
    for root in verts:
        if root in disc:
            continue
        disc[root] = low[root] = timer
        timer += 1
        comp[root] = cid
        stack = [(root, -1, iter(sorted(G.adj[root])))]
        while stack:
            v, parent, it = stack[-1]
            advanced = False
            for w in it:
                if w == drop:
                    continue
                if w not in disc:
                    disc[w] = low[w] = timer
                    timer += 1
                    comp[w] = cid
                    stack.append((w, v, iter(sorted(G.adj[w]))))
                    advanced = True
                    break
                if w != parent:
                    low[v] = min(low[v], disc[w])
            if not advanced:
                stack.pop()
                if stack:
                    pv = stack[-1][0]
                    low[pv] = min(low[pv], low[v])
                    if low[v] > disc[pv]:
                        bridges.add((min(pv, v), max(pv, v)))
        cid += 1
    return comp, bridges


def inadmissible_p2_audit(G: SkeletonGraph) -> P2Audit:
    """Audit the p = 1 inadmissibility bound: sum of 1/deg(y) < 3n/2.

    A length-2 path x y z is inadmissible here when x and z are not
    joined by any path of length >= 2 avoiding y, i.e. they are
    disconnected in G - y once the direct edge xz is removed. That holds
    exactly when they sit in different components of G - y, or the edge
    xz exists and is a bridge of G - y.
    """
    bad: list[tuple[int, int, int]] = []
    total = Fraction(0)
    for y in sorted(G.vertices):
        ns = sorted(G.adj[y])
        if len(ns) < 2:
            continue
        comp, bridges = _components_and_bridges(G, y)
        w = Fraction(1, G.degree(y))
        for x, z in combinations(ns, 2):
            if comp[x] != comp[z] or (x, z) in bridges:
                bad.append((x, y, z))
                total += w
    bound = Fraction(3 * G.n, 2)
    return P2Audit(total, bound, total < bound, tuple(sorted(bad)))


def weighted_inadmissibility_audit(G: SkeletonGraph, p, epsilon,
                                   probabilities: dict | None = None) -> WeightedAudit:
    """Audit the (p, epsilon) bound: sum of 1/deg(y) < 3n/(2 p^2 epsilon).

    A path is counted when its exact admissibility probability is below
    1 - epsilon. Probabilities may be supplied (keyed by (x, y, z) with
    x < z) to share subset-enumeration work across epsilon values.
    """
    if G.n > _EXACT_LIMIT:
        raise ValueError(f"exact audit limited to {_EXACT_LIMIT} vertices")
    pf = as_fraction(p)
    ef = as_fraction(epsilon)
    if probabilities is None:
        probabilities = admissibility_probabilities(G, pf)
    threshold = 1 - ef
    total = Fraction(0)
    bad = []
    for (x, y, z), prob in probabilities.items():
        if prob < threshold:
            bad.append((x, y, z))
            total += Fraction(1, G.degree(y))
    bound = Fraction(3 * G.n) / (2 * pf * pf * ef)
    return WeightedAudit(total, bound, total < bound, tuple(sorted(bad)))


# ---------------------------------------------------------------------------
# pair and triple statistics


def pair_psi(H: Hypergraph3, G: SkeletonGraph, v: int, vp: int,
             params: EstimatorParams) -> PairStats:
    """xi and psi = xi/codeg for a vertex pair of G against H.

    Runs the coverability test for every unordered pair {w, w'} of
    common neighbours; a 4-cycle with an edge missing from S(H) counts
    as non-coverable outright (no disk of H can have that boundary).
    """
    if v == vp:
        raise ValueError("pair statistics need two distinct vertices")
    skel = skeleton(H)
    common = sorted(common_neighborhood(G, (v, vp)))
    xi = 0
    for w, wp in combinations(common, 2):
        cyc = (v, w, vp, wp)
        ok_edges = all(skel.has_edge(a, b)
                       for a, b in zip(cyc, cyc[1:] + cyc[:1]))
        if not ok_edges:
            xi += 1
            continue
        est = sample_disk_coverability(H, cyc, params, skel=skel)
        if not est.decided_coverable:
            xi += 1
    codeg = len(common)
    psi = Fraction(xi, codeg) if codeg else Fraction(0)
    return PairStats(xi, codeg, psi)


def triple_phi(s12: PairStats, s13: PairStats, s23: PairStats,
               codeg3: int) -> Fraction:
    """phi of a triple: (psi12 + psi13 + psi23) / codeg3, or 0 when codeg3 = 0."""
    if codeg3 < 0:
        raise ValueError("triple codegree cannot be negative")
    if codeg3 == 0:
        return Fraction(0)
    return (s12.psi + s13.psi + s23.psi) / codeg3
