"""Brute-force oracles for the test suite.

Everything here is implemented directly from the definitions, sharing no
code with the library: subset enumeration for probabilities, DFS path
enumeration for pyramid events, 2^F orientation search, and so on. Slow
on purpose; only run on small instances.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations


def subsets(pool):
    pool = list(pool)
    for r in range(len(pool) + 1):
        yield from (frozenset(c) for c in combinations(pool, r))


def _adj_from_pairs(pairs):
    adj = {}
    for a, b in pairs:
        adj.setdefault(a, set()).add(b)
        adj.setdefault(b, set()).add(a)
    return adj


def reachable(pairs, src, dst, allowed):
    """BFS connectivity over the given edge pairs restricted to `allowed`."""
    adj = _adj_from_pairs(pairs)
    seen = {src}
    queue = [src]
    while queue:
        x = queue.pop()
        if x == dst:
            return True
        for y in adj.get(x, ()):
            if y in allowed and y not in seen:
                seen.add(y)
                queue.append(y)
    return dst in seen


def admissibility_event(edge_pairs, w, u, wp, U):
    """Does some w..wp path of length >= 2 avoid u with interior in U?"""
    pairs = [e for e in edge_pairs
             if u not in e and set(e) != {w, wp}]
    allowed = (set(U) | {w, wp}) - {u}
    return reachable(pairs, w, wp, allowed)


def exact_admissibility(G_edges, n, w, u, wp, p) -> Fraction:
    """Literal enumeration over all U subsets of V minus {u}."""
    p = Fraction(p)
    total = Fraction(0)
    others = [v for v in range(n) if v != u]
    for U in subsets(others):
        if admissibility_event(G_edges, w, u, wp, U):
            total += p ** len(U) * (1 - p) ** (len(others) - len(U))
    return total


def _li_pairs(triples, v, vp):
    """Edge pairs of the link intersection, straight from the definition."""
    ts = {frozenset(t) for t in triples}
    verts = {x for t in triples for x in t} - {v, vp}
    out = []
    for w, wp in combinations(sorted(verts), 2):
        if frozenset((v, w, wp)) in ts and frozenset((vp, w, wp)) in ts:
            out.append((w, wp))
    return out


def _simple_paths_interior_in(pairs, src, dst, allowed_interior):
    """Yield interiors of simple src..dst paths of length >= 2 by DFS."""
    adj = _adj_from_pairs(pairs)
    stack = [(src, (src,))]
    while stack:
        x, path = stack.pop()
        for y in adj.get(x, ()):
            if y in path:
                continue
            if y == dst:
                if len(path) >= 2:
                    yield frozenset(path[1:])
                continue
            if y in allowed_interior:
                stack.append((y, path + (y,)))


def pyramid_event(triples, cycle, U) -> bool:
    """Is some pyramid disk over `cycle` available with interior inside U?"""
    a, b, c, d = cycle
    for (v, vp, w, wp) in ((a, c, b, d), (b, d, a, c)):
        pairs = _li_pairs(triples, v, vp)
        allowed = set(U) - set(cycle)
        for interior in _simple_paths_interior_in(pairs, w, wp, allowed):
            return True
    return False


def exact_pyramid_coverability(triples, n, cycle, p) -> Fraction:
    p = Fraction(p)
    total = Fraction(0)
    for U in subsets(range(n)):
        if pyramid_event(triples, cycle, U):
            total += p ** len(U) * (1 - p) ** (n - len(U))
    return total


def p2_inadmissible(G_edges, x, y, z) -> bool:
    """No cycle of length >= 4 through x-y-z: x, z separated in (G-y)-xz."""
    pairs = [e for e in G_edges if y not in e and set(e) != {x, z}]
    verts = {v for e in G_edges for v in e} - {y}
    return not reachable(pairs, x, z, verts)


def unweighted_audit_sum(G_edges, n) -> Fraction:
    adj = _adj_from_pairs(G_edges)
    total = Fraction(0)
    for y in range(n):
        nbrs = sorted(adj.get(y, ()))
        for x, z in combinations(nbrs, 2):
            if p2_inadmissible(G_edges, x, y, z):
                total += Fraction(1, len(nbrs))
    return total


def orientable_by_enumeration(triangles) -> bool:
    """Try all 2^F orientation choices; true iff some choice is coherent."""
    tris = [tuple(t) for t in triangles]
    f = len(tris)
    for bits in range(1 << f):
        ok = True
        seen = {}
        for i, t in enumerate(tris):
            a, b, c = t
            cyc = (a, b, c) if not (bits >> i) & 1 else (a, c, b)
            for k in range(3):
                e = (cyc[k], cyc[(k + 1) % 3])
                key = frozenset(e)
                if key in seen:
                    if seen[key] == e:
                        ok = False
                        break
                else:
                    seen[key] = e
            if not ok:
                break
        if ok:
            return True
    return False


def surface_conditions(triangles):
    """Independent re-check of the surface conditions; returns a dict."""
    tris = [frozenset(t) for t in triangles]
    verts = sorted({v for t in tris for v in t})
    inc = {}
    for t in tris:
        for e in combinations(sorted(t), 2):
            inc[e] = inc.get(e, 0) + 1
    edges = sorted(inc)

    def link_ok(v):
        # multigraph of opposite edges; single path or cycle iff connected
        # with every degree <= 2 and 0 or 2 odd-degree vertices
        opp = [tuple(sorted(t - {v})) for t in tris if v in t]
        if not opp:
            return False
        deg = {}
        for a, b in opp:
            deg[a] = deg.get(a, 0) + 1
            deg[b] = deg.get(b, 0) + 1
        if any(d > 2 for d in deg.values()):
            return False
        seen = set()
        stack = [opp[0][0]]
        adj = _adj_from_pairs(opp)
        while stack:
            x = stack.pop()
            if x in seen:
                continue
            seen.add(x)
            stack.extend(adj.get(x, ()))
        if len(seen) != len(deg):
            return False
        odd = sum(1 for d in deg.values() if d == 1)
        return odd in (0, 2)

    connected = bool(tris)
    if tris:
        seen = set()
        stack = [next(iter(tris[0]))]
        adj = _adj_from_pairs(edges)
        while stack:
            x = stack.pop()
            if x in seen:
                continue
            seen.add(x)
            stack.extend(adj.get(x, ()))
        connected = len(seen) == len(verts)
    return {
        "euler": len(verts) - len(edges) + len(tris),
        "connected": connected,
        "max_incidence": max(inc.values(), default=0),
        "boundary_edges": [e for e in edges if inc[e] == 1],
        "links_ok": all(link_ok(v) for v in verts),
    }
