"""Threshold sweeps and corpus-scale inadmissibility audits.

Both entry points emit CSV with fixed headers so downstream tooling can
concatenate runs. All randomness is derived from the caller's seed via
the counter-based scheme in :mod:`diskcover.rng`, so a sweep produces
byte-identical output no matter how many worker processes it uses.
"""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, replace
from fractions import Fraction
from math import sqrt
from typing import Iterable, Iterator

from .certificates import (KTT, PROJECTIVE_PLANE, SPHERE, TORUS,
                           HomeomorphCertificate)
from .coverability import (as_fraction, inadmissible_p2_audit,
                           admissibility_probabilities,
                           weighted_inadmissibility_audit)
from .generators import random_hypergraph
from .hypergraph import SkeletonGraph
from .rng import mix64
from .search import (SearchParams, find_k_t_homeomorph,
                     find_projective_plane, find_sphere, find_torus)

__all__ = [
    "SweepRow",
    "SWEEP_HEADER",
    "AUDIT_HEADER",
    "threshold_sweep",
    "sweep_csv",
    "audit_corpus",
]

SWEEP_HEADER = "n,c,p,trial,target,found,stage,seconds"
AUDIT_HEADER = "graph_id,n,p,epsilon,weighted_sum,bound,holds"

_FINDERS = {
    KTT: find_k_t_homeomorph,
    TORUS: find_torus,
    PROJECTIVE_PLANE: find_projective_plane,
    SPHERE: find_sphere,
}


@dataclass(frozen=True)
class SweepRow:
    """One finder run on one random hypergraph.

    p is the triple density c/sqrt(n) clamped to 1. stage is "done"
    when the finder produced a verified certificate, otherwise the
    stage it gave up in. seconds is 0.0 unless timing was requested
    (wall-clock noise would break reproducible output).
    """

    n: int
    c: float
    p: float
    trial: int
    target: str
    found: bool
    stage: str
    seconds: float


def _sweep_cell(args) -> SweepRow:
    target, n, c, trial, seed, timing, params = args
    p = min(1.0, c / sqrt(n))
    # the cell seed deliberately ignores c: at a fixed (n, trial) the
    # random hypergraphs are then nested across the c grid (a triple
    # kept at one density stays kept at every higher density), which
    # keeps empirical found-rates monotone up to search noise
    hseed = mix64(seed, n, trial)
    H = random_hypergraph(n, p, seed=hseed)
    t0 = time.perf_counter() if timing else 0.0
    result = _FINDERS[target](H, replace(params, seed=hseed))
    secs = time.perf_counter() - t0 if timing else 0.0
    found = isinstance(result, HomeomorphCertificate)
    stage = "done" if found else result.stage
    return SweepRow(n, c, p, trial, target, found, stage, secs)


def threshold_sweep(target: str, n_values: Iterable[int],
                    c_values: Iterable[float], trials: int, seed: int, *,
                    params: SearchParams | None = None, jobs: int = 1,
                    timing: bool = False) -> list[SweepRow]:
    """Run a target finder over a (n, c) grid of random hypergraphs.

    Each cell draws `trials` independent hypergraphs at density
    c/sqrt(n) and records whether the finder succeeded. Rows come back
    sorted by (n, c, trial) regardless of execution order; with
    jobs > 1 cells run in worker processes.
    """
    if target not in _FINDERS:
        raise ValueError(f"unknown sweep target {target!r}")
    if trials < 1:
        raise ValueError("trials must be positive")
    if params is None:
        params = SearchParams()
    tasks = [(target, n, c, trial, seed, timing, params)
             for n in sorted(set(n_values))
             for c in sorted(set(c_values))
             for trial in range(trials)]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as ex:
            return list(ex.map(_sweep_cell, tasks, chunksize=1))
    return [_sweep_cell(t) for t in tasks]


def _fmt_float(x: float) -> str:
    return format(x, ".6g")


def sweep_csv(rows: Iterable[SweepRow]) -> str:
    lines = [SWEEP_HEADER]
    for r in rows:
        lines.append(",".join((
            str(r.n), _fmt_float(r.c), _fmt_float(r.p), str(r.trial),
            r.target, "true" if r.found else "false", r.stage,
            f"{r.seconds:.3f}",
        )))
    return "\n".join(lines) + "\n"


def _frac_str(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


_WEIGHTED_LIMIT = 14


def audit_corpus(graphs: Iterable[tuple[str, SkeletonGraph | None]],
                 grid: Iterable[tuple[object, object]] | None = None,
                 ) -> Iterator[str]:
    """Audit a corpus of graphs; yields CSV lines (header first).

    Every readable graph gets a structural row: the unweighted bound
    3n/2 for the sum of 1/deg(y) over inadmissible P2s, reported as the
    (p, epsilon) = (1, 1) edge of the general bound. Graphs with
    n <= 14 additionally get one weighted row per (p, epsilon) grid
    point, computed with exact rational arithmetic. A graph paired
    with None (e.g. an unreadable file) yields an error row.
    """
    if grid is None:
        grid = ((Fraction(1, 2), Fraction(1, 10)),)
    pts = [(as_fraction(p), as_fraction(e)) for p, e in grid]
    by_p: dict[Fraction, list[Fraction]] = {}
    for p, e in pts:
        by_p.setdefault(p, []).append(e)

    yield AUDIT_HEADER
    one = Fraction(1)
    for gid, G in graphs:
        if G is None:
            yield f"{gid},,,,,,error"
            continue
        audit = inadmissible_p2_audit(G)
        yield ",".join((gid, str(G.n), _frac_str(one), _frac_str(one),
                        _frac_str(audit.weighted_sum),
                        _frac_str(audit.bound),
                        "true" if audit.holds else "false"))
        if G.n > _WEIGHTED_LIMIT:
            continue
        for p, eps_list in by_p.items():
            probs = admissibility_probabilities(G, p)
            for eps in eps_list:
                w = weighted_inadmissibility_audit(G, p, eps,
                                                   probabilities=probs)
                yield ",".join((gid, str(G.n), _frac_str(p),
                                _frac_str(eps), _frac_str(w.weighted_sum),
                                _frac_str(w.bound),
                                "true" if w.holds else "false"))
