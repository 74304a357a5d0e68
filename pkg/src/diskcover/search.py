"""Randomized searches for homeomorphs, emitting verified certificates.

Four finders share one pipeline shape: pick an ambient link structure,
pick core vertices by dependent random choice, assemble boundary
4-cycles, then glue one pyramid disk per cycle with pairwise disjoint
interiors. Every stage has a bounded retry budget keyed off the params
seed, so a run is a pure function of (H, params); failures are returned
as stage-tagged values, never raised. A finder only returns a
certificate after the independent verifier has passed it.

The searches are best-effort on arbitrary input. The density
assumptions behind the existence proofs are asymptotic and are not
enforced; on thin inputs the stage tags say where the pipeline died.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import comb

from .certificates import (
    KTT,
    PROJECTIVE_PLANE,
    SPHERE,
    TORUS,
    HomeomorphCertificate,
)
from .complexes import TwoComplex
from .coverability import (
    PYRAMID_ONLY,
    EstimatorParams,
    _check_four_cycle,
    pyramid_disk,
    sample_admissibility,
    sample_disk_coverability,
)
from .gamma import gamma, role_name
from .hypergraph import (
    Hypergraph3,
    SkeletonGraph,
    codegree,
    common_neighborhood,
    link,
    link_intersection,
    skeleton,
)
from .rng import generator
from .verify import verify_certificate

_S_LINK = 0x51
_S_CORE = 0x52
_S_PATTERN = 0x53
_S_HUB = 0x54
_S_SPHERE = 0x55
_S_GLUE = 0x56

_SURFACE_P = 1 / 18
_SURFACE_EPS = 1 / 163


@dataclass(frozen=True)
class SearchParams:
    """Knobs for the homeomorph searches.

    p and epsilon default per target when left None: t^-3 and 2 t^-6
    for the complete-pattern search, 1/18 and 1/163 for the surface
    builders. Those defaults are calibrated for asymptotic inputs;
    desk-scale instances usually want larger values. max_retries is the
    per-stage budget for the expensive stages; pattern_retries bounds
    the whole-assignment redraw loop, whose collision rejections cost
    almost nothing, so it is much larger; glue_retries is the inner
    budget of fresh random partitions inside a single gluing call.
    """

    t: int = 4
    p: float | None = None
    epsilon: float | None = None
    r: int = 2
    trials: int = 64
    seed: int = 0
    max_retries: int = 10
    pattern_retries: int = 200
    link_sample: int = 16
    pair_sample: int = 20
    phi_threshold: float = 0.5
    glue_retries: int = 256
    strategy: str = PYRAMID_ONLY
    max_interior: int = 3

    def __post_init__(self):
        if self.t < 3:
            raise ValueError("target clique size must be at least 3")
        if self.r < 0:
            raise ValueError("codegree floor r cannot be negative")
        if (self.max_retries < 1 or self.glue_retries < 1
                or self.pattern_retries < 1):
            raise ValueError("retry budgets must be positive")
        if self.trials < 1:
            raise ValueError("trials must be positive")

    def resolved(self, target: str) -> tuple[float, float]:
        if target == KTT:
            pd, ed = self.t ** -3, 2 * self.t ** -6
        else:
            pd, ed = _SURFACE_P, _SURFACE_EPS
        return (self.p if self.p is not None else pd,
                self.epsilon if self.epsilon is not None else ed)

    def estimator(self, target: str) -> EstimatorParams:
        p, eps = self.resolved(target)
        return EstimatorParams(p=p, epsilon=eps, trials=self.trials,
                               seed=self.seed, strategy=self.strategy,
                               max_interior=self.max_interior)


@dataclass(frozen=True)
class SearchFailure:
    target: str
    stage: str
    detail: str
    retries: int


@dataclass(frozen=True)
class GlueFailure:
    """Per-cycle diagnostics from an exhausted gluing budget."""

    retries: int
    cycle_failures: tuple[int, ...]
    detail: str


def _mask_shortest_path(adj: dict[int, int], a: int, b: int,
                        interior: int) -> list[int] | None:
    """Shortest a..b path of length >= 2 with internal vertices in the mask.

    Breadth-first over bitmask adjacency with the direct edge ab
    removed; frontier vertices expand in ascending order so the chosen
    path is deterministic.
    """
    if a not in adj or b not in adj:
        return None
    abit, bbit = 1 << a, 1 << b
    allowed = (interior & ~abit & ~bbit) | bbit
    parent: dict[int, int] = {a: -1}
    frontier = [a]
    while frontier:
        nxt = []
        for v in frontier:
            row = adj[v]
            if v == a:
                row &= ~bbit
            row &= allowed
            f = row
            while f:
                low = f & -f
                f ^= low
                w = low.bit_length() - 1
                if w in parent:
                    continue
                parent[w] = v
                if w == b:
                    path = [b]
                    while path[-1] != a:
                        path.append(parent[path[-1]])
                    path.reverse()
                    return path
                nxt.append(w)
        frontier = nxt
    return None


def _cycle_pyramid(H: Hypergraph3, cyc: tuple[int, int, int, int],
                   lis: tuple[SkeletonGraph, SkeletonGraph],
                   part_mask: int) -> TwoComplex | None:
    """A pyramid disk over one 4-cycle with interior inside the part mask."""
    a, b, c, d = cyc
    for (v, vp, w, wp), li in zip(((a, c, b, d), (b, d, a, c)), lis):
        interior = part_mask & li.vertex_mask()
        path = _mask_shortest_path(li.adj_mask, w, wp, interior)
        if path is not None:
            return pyramid_disk(v, vp, path)
    return None


def glue_disks(H: Hypergraph3, cycles, params: SearchParams,
               skel: SkeletonGraph | None = None):
    """One interior-disjoint pyramid disk per cycle, or a GlueFailure.

    Each attempt shuffles the vertices outside all cycles and splits
    them into len(cycles) nearly equal parts, then looks for a pyramid
    path per cycle with interior confined to its own part (both
    opposite-apex options are tried). Parts are disjoint and avoid
    every cycle vertex, which is what the verifier's intersection check
    needs. Attempts are keyed by (seed, attempt index) and the first
    success by index wins, independent of execution order.
    """
    skel = skel if skel is not None else skeleton(H)
    cycs = [_check_four_cycle(skel, c) for c in cycles]
    if not cycs:
        return []
    k = len(cycs)
    W = {v for c in cycs for v in c}
    free = sorted(v for v in H.vertices if v not in W)
    lis = [
        (link_intersection(H, c[0], c[2]), link_intersection(H, c[1], c[3]))
        for c in cycs
    ]

    free_mask = 0
    for v in free:
        free_mask |= 1 << v
    hopeless = [i for i in range(k)
                if _cycle_pyramid(H, cycs[i], lis[i], free_mask) is None]
    if hopeless:
        counts = tuple(1 if i in hopeless else 0 for i in range(k))
        return GlueFailure(
            0, counts,
            f"cycle(s) {hopeless} admit no pyramid disk even with every "
            "free vertex available")
    if len(free) < k:
        return GlueFailure(
            0, tuple(0 for _ in range(k)),
            f"{len(free)} free vertices cannot give {k} disjoint interiors")

    fail_counts = [0] * k
    base, extra = divmod(len(free), k)
    for attempt in range(params.glue_retries):
        gen = generator(params.seed, _S_GLUE, attempt)
        order = [free[i] for i in gen.permutation(len(free))]
        disks: list[TwoComplex] = []
        pos = 0
        failed = -1
        for i in range(k):
            size = base + (1 if i < extra else 0)
            part_mask = 0
            for v in order[pos:pos + size]:
                part_mask |= 1 << v
            pos += size
            disk = _cycle_pyramid(H, cycs[i], lis[i], part_mask)
            if disk is None:
                failed = i
                break
            disks.append(disk)
        if failed < 0:
            return disks
        fail_counts[failed] += 1
    return GlueFailure(params.glue_retries, tuple(fail_counts),
                       "partition budget exhausted")


# ---------------------------------------------------------------------------
# complete-pattern search


def _pick_distinct(gen, pool: list[int], count: int) -> list[int] | None:
    if len(pool) < count:
        return None
    idx = gen.permutation(len(pool))[:count]
    return [pool[i] for i in idx]


def _sampled_psi(H: Hypergraph3, skel: SkeletonGraph, G: SkeletonGraph,
                 v: int, vp: int, est: EstimatorParams,
                 budget: int, gen) -> Fraction:
    """Estimate of psi(v, v') from a bounded sample of common-neighbour pairs."""
    common = sorted(common_neighborhood(G, (v, vp)))
    codeg = len(common)
    if codeg < 2:
        return Fraction(0)
    pairs = list(combinations(common, 2))
    if len(pairs) > budget:
        idx = gen.permutation(len(pairs))[:budget]
        pairs = [pairs[i] for i in sorted(idx)]
    bad = 0
    for w, wp in pairs:
        cyc = (v, w, vp, wp)
        if not all(skel.has_edge(x, y) for x, y in zip(cyc, cyc[1:] + cyc[:1])):
            bad += 1
            continue
        if not sample_disk_coverability(H, cyc, est, skel=skel).decided_coverable:
            bad += 1
    xi_hat = Fraction(bad, len(pairs)) * comb(codeg, 2)
    return xi_hat / codeg


def find_k_t_homeomorph(H: Hypergraph3, params: SearchParams):
    """Search H for a homeomorph of the complete 3-uniform pattern on t vertices.

    Pipeline: (1) pick the link vertex u whose link graph has the most
    edges among a random sample; (2) dependent random choice inside
    G = H_u: draw w, then t core vertices from N(w), accepting when all
    triple codegrees clear r and the sampled phi sum stays below the
    threshold; (3) draw a pattern vertex for every pair and triple from
    the corresponding common neighbourhoods, rejecting collisions and
    any special 4-cycle that fails the coverability test; (4) glue one
    disk per special cycle and verify.
    """
    t = params.t
    est = params.estimator(KTT)
    pattern = gamma(t)

    # stage 1: link selection over a sample of candidate vertices
    if H.n == 0 or not H.edges:
        return SearchFailure(KTT, "link-selection", "hypergraph has no edges", 0)
    gen = generator(params.seed, _S_LINK)
    cand = sorted({int(x) for x in gen.integers(0, H.n, size=params.link_sample)})
    best_u, best_G, best_e = -1, None, -1
    for u in cand:
        Gu = link(H, u)
        if len(Gu.edges) > best_e:
            best_u, best_G, best_e = u, Gu, len(Gu.edges)
    if best_e <= 0:
        return SearchFailure(KTT, "link-selection",
                             "every sampled link graph is empty",
                             params.link_sample)
    u, G = best_u, best_G
    skel = skeleton(H)

    # stage 2: dependent random choice of the t core vertices
    core: list[int] | None = None
    candidates = sorted(v for v in G.vertices if G.degree(v) > 0)
    for retry in range(params.max_retries):
        gen = generator(params.seed, _S_CORE, retry)
        if not candidates:
            break
        w0 = candidates[int(gen.integers(0, len(candidates)))]
        W = sorted(G.adj[w0])
        vs = _pick_distinct(gen, W, t)
        if vs is None:
            continue
        if any(codegree(G, triple) <= params.r
               for triple in combinations(vs, 3)):
            continue
        psis = {
            frozenset(pair): _sampled_psi(H, skel, G, pair[0], pair[1], est,
                                          params.pair_sample, gen)
            for pair in combinations(vs, 2)
        }
        phi_sum = Fraction(0)
        for i, j, k in combinations(range(t), 3):
            c3 = codegree(G, (vs[i], vs[j], vs[k]))
            trio = (psis[frozenset((vs[i], vs[j]))]
                    + psis[frozenset((vs[i], vs[k]))]
                    + psis[frozenset((vs[j], vs[k]))])
            phi_sum += trio / c3 if c3 else Fraction(0)
        if phi_sum < Fraction(params.phi_threshold):
            core = vs
            break
    if core is None:
        return SearchFailure(KTT, "core-vertices",
                             "no accepted core draw (codegree floor or phi "
                             "threshold)", params.max_retries)

    # stage 3: pattern vertices for pairs and triples, with coverability
    embedding: dict[str, int] | None = None
    cycles: tuple[tuple[int, int, int, int], ...] | None = None
    used_retries = 0
    for retry in range(params.pattern_retries):
        gen = generator(params.seed, _S_PATTERN, retry)
        image: dict[tuple[int, ...], int] = {(i,): core[i] for i in range(t)}
        ok = True
        for pair in combinations(range(t), 2):
            pool = sorted(common_neighborhood(G, (core[pair[0]], core[pair[1]])))
            if not pool:
                ok = False
                break
            image[pair] = pool[int(gen.integers(0, len(pool)))]
        if ok:
            for trip in combinations(range(t), 3):
                pool = sorted(common_neighborhood(
                    G, (core[trip[0]], core[trip[1]], core[trip[2]])))
                if not pool:
                    ok = False
                    break
                image[trip] = pool[int(gen.integers(0, len(pool)))]
        if not ok:
            continue
        values = [image[r] for r in pattern.roles]
        if len(set(values)) != len(values):
            continue
        cand_cycles = tuple(
            (values[a], values[b], values[c], values[d])
            for a, b, c, d in pattern.special_cycles)
        if all(sample_disk_coverability(H, cyc, est, skel=skel).decided_coverable
               for cyc in cand_cycles):
            embedding = {role_name(r): image[r] for r in pattern.roles}
            cycles = cand_cycles
            used_retries = retry
            break
    if embedding is None or cycles is None:
        return SearchFailure(KTT, "pattern-vertices",
                             "pattern draws kept colliding or failing the "
                             "coverability test", params.pattern_retries)

    # stage 4: glue and verify
    glued = glue_disks(H, cycles, params, skel=skel)
    if isinstance(glued, GlueFailure):
        return SearchFailure(KTT, "glue", glued.detail, glued.retries)
    cert = HomeomorphCertificate(target=KTT, t=t, embedding=embedding,
                                 cycles=cycles, disks=tuple(glued),
                                 seed=params.seed, retries=used_retries)
    report = verify_certificate(H, cert)
    if not report.passed:
        failed = [c.name for c in report.checks if not c.passed]
        return SearchFailure(KTT, "verify",
                             f"verifier rejected: {', '.join(failed)}",
                             used_retries)
    return cert


# ---------------------------------------------------------------------------
# surface builders


def _torus_cycles(u, up, v, w):
    w1, w2, w3, w4, w5, w6 = w
    return (
        (up, w1, v, w5),
        (u, w1, up, w2),
        (up, w2, v, w3),
        (u, w3, v, w5),
        (u, w3, up, w4),
        (u, w1, v, w4),
        (u, w5, up, w6),
        (up, w4, v, w6),
        (u, w2, v, w6),
    )


def _rp2_cycles(u, up, v, w):
    # quadrangulation of the projective plane: six quads on u, u', v,
    # w1..w4, each of the twelve edges shared by exactly two of them
    w1, w2, w3, w4 = w
    return (
        (u, w1, v, w3),
        (up, w2, v, w3),
        (u, w3, up, w4),
        (u, w1, up, w2),
        (u, w2, v, w4),
        (up, w1, v, w4),
    )


_SURFACE_RECIPES = {
    TORUS: (6, ((0, 1), (2, 3), (4, 5)), _torus_cycles),
    PROJECTIVE_PLANE: (4, ((0, 1), (2, 3)), _rp2_cycles),
}


def _find_surface(H: Hypergraph3, params: SearchParams, target: str):
    hub_degree, hub_paths, cycle_fn = _SURFACE_RECIPES[target]
    est = params.estimator(target)

    # stage 1: apex pair maximizing the common-link edge count
    if H.n < hub_degree + 3 or not H.edges:
        return SearchFailure(target, "apex-selection",
                             "hypergraph too small or empty", 0)
    gen = generator(params.seed, _S_LINK)
    pairs = set()
    draws = gen.integers(0, H.n, size=(params.link_sample, 2))
    for a, b in draws:
        if a != b:
            pairs.add((min(int(a), int(b)), max(int(a), int(b))))
    best, best_e = None, -1
    for a, b in sorted(pairs):
        li = link_intersection(H, a, b)
        if len(li.edges) > best_e:
            best, best_e = (a, b, li), len(li.edges)
    if best is None or best_e <= 0:
        return SearchFailure(target, "apex-selection",
                             "no sampled apex pair has a common link edge",
                             params.link_sample)
    u, up, G = best

    # stage 2: hub vertex with admissible spoke paths
    hub = None
    candidates = sorted(v for v in G.vertices if G.degree(v) >= hub_degree)
    used_retries = 0
    for retry in range(params.max_retries):
        if not candidates:
            break
        gen = generator(params.seed, _S_HUB, retry)
        v = candidates[int(gen.integers(0, len(candidates)))]
        ws = _pick_distinct(gen, sorted(G.adj[v]), hub_degree)
        if ws is None:
            continue
        if all(sample_admissibility(G, ws[i], v, ws[j], est).decided_coverable
               for i, j in hub_paths):
            hub = (v, ws)
            used_retries = retry
            break
    if hub is None:
        return SearchFailure(target, "hub-selection",
                             f"no hub with {hub_degree} neighbours and "
                             "admissible spoke paths", params.max_retries)
    v, ws = hub

    # stages 3-4: assemble the fixed cycle list and glue
    cycles = cycle_fn(u, up, v, ws)
    glued = glue_disks(H, cycles, params)
    if isinstance(glued, GlueFailure):
        return SearchFailure(target, "glue", glued.detail, glued.retries)

    embedding = {"u": u, "u'": up, "v": v}
    embedding.update({f"w{i + 1}": ws[i] for i in range(hub_degree)})
    cert = HomeomorphCertificate(target=target, t=None, embedding=embedding,
                                 cycles=tuple(cycles), disks=tuple(glued),
                                 seed=params.seed, retries=used_retries)
    report = verify_certificate(H, cert)
    if not report.passed:
        failed = [c.name for c in report.checks if not c.passed]
        return SearchFailure(target, "verify",
                             f"verifier rejected: {', '.join(failed)}",
                             used_retries)
    return cert


def find_torus(H: Hypergraph3, params: SearchParams):
    """Build a torus homeomorph: 9 disks over the 9 fixed 4-cycles."""
    return _find_surface(H, params, TORUS)


def find_projective_plane(H: Hypergraph3, params: SearchParams):
    """Build a projective-plane homeomorph: 6 disks over 6 fixed 4-cycles."""
    return _find_surface(H, params, PROJECTIVE_PLANE)


def find_sphere(H: Hypergraph3, params: SearchParams):
    """Find a 4-cycle bounding two interior-disjoint disks (a 2-sphere).

    No coverability estimation is involved: candidate cycles go
    straight to the gluer, which needs two pyramid disks over disjoint
    vertex pools. Used by the threshold sweeps.
    """
    skel = skeleton(H)
    if H.n < 6:
        return SearchFailure(SPHERE, "cycle-selection",
                             "need at least 6 vertices", 0)
    stage = "cycle-selection"
    detail = "no 4-cycle with two spare common neighbours"
    for retry in range(params.max_retries):
        gen = generator(params.seed, _S_SPHERE, retry)
        draws = gen.integers(0, H.n, size=(params.link_sample, 2))
        best = None
        best_c = 1
        for a, c in draws:
            a, c = int(a), int(c)
            if a == c:
                continue
            common = common_neighborhood(skel, (a, c))
            if len(common) > best_c:
                best, best_c = (a, c, sorted(common)), len(common)
        if best is None:
            continue
        a, c, common = best
        bd = _pick_distinct(gen, common, 2)
        if bd is None:
            continue
        cycle = (a, bd[0], c, bd[1])
        stage = "glue"
        glued = glue_disks(H, [cycle, cycle], params, skel=skel)
        if isinstance(glued, GlueFailure):
            detail = glued.detail
            continue
        cert = HomeomorphCertificate(
            target=SPHERE, t=None,
            embedding={"a": cycle[0], "b": cycle[1], "c": cycle[2],
                       "d": cycle[3]},
            cycles=(cycle, cycle), disks=tuple(glued),
            seed=params.seed, retries=retry)
        report = verify_certificate(H, cert)
        if report.passed:
            return cert
        stage, detail = "verify", "verifier rejected the glued pair"
    return SearchFailure(SPHERE, stage, detail, params.max_retries)
