"""Command-line interface.

One subcommand per operation so every piece is invocable for demos and
scripted experiments. Exit codes: 0 on success (found/verified/holds),
1 for negative results (no disk, not coverable, verification failed,
audit violation), 2 for usage errors including unreadable or malformed
input files.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import replace
from fractions import Fraction

from .certificates import (TARGETS, HomeomorphCertificate, parse_certificate,
                           serialize_certificate)
from .complexes import classify
from .coverability import (EXHAUSTIVE_SMALL, PYRAMID_ONLY, EstimatorParams,
                           as_fraction, exact_admissibility,
                           exact_disk_coverability,
                           find_boundary_inducing_disk, sample_admissibility,
                           sample_disk_coverability)
from .generators import (clique_pendant_graph, complete_hypergraph,
                         random_hypergraph)
from .hypergraph import link, skeleton
from .io import (classification_dict, parse_complex, parse_graph, parse_h3,
                 read_text, serialize_complex, serialize_graph, serialize_h3)
from .search import (SearchParams, find_k_t_homeomorph,
                     find_projective_plane, find_sphere, find_torus)
from .experiments import audit_corpus, sweep_csv, threshold_sweep
from .verify import CertificateError, verify_certificate

_FINDERS = {
    "ktt": find_k_t_homeomorph,
    "torus": find_torus,
    "rp2": find_projective_plane,
    "sphere": find_sphere,
}


def _emit(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)


def _fail(msg: str) -> int:
    print(f"error: {msg}", file=sys.stderr)
    return 2


def _label_index(labels) -> dict[str, int]:
    return {lab: i for i, lab in enumerate(labels)}


def _resolve(names: str, index: dict[str, int], count: int) -> list[int]:
    parts = names.split(",")
    if len(parts) != count:
        raise ValueError(f"expected {count} comma-separated labels, got {len(parts)}")
    out = []
    for lab in parts:
        lab = lab.strip()
        if lab in index:
            out.append(index[lab])
        elif lab.isdigit() and int(lab) < len(index):
            out.append(int(lab))
        else:
            raise ValueError(f"unknown vertex {lab!r}")
    return out


def _h3_index(H) -> dict[str, int]:
    return {H.label_of(v): v for v in H.vertices}


def _estimator(args, strategy: str | None = None) -> EstimatorParams:
    kw = dict(p=float(as_fraction(args.p)),
              epsilon=float(as_fraction(args.epsilon)),
              trials=args.trials, seed=args.seed)
    if strategy is not None:
        kw.update(strategy=strategy, max_interior=args.max_interior)
    return EstimatorParams(**kw)


def _graph_labels(G, H) -> list[str]:
    return [H.label_of(v) for v in sorted(G.vertices)]


def _cmd_skeleton(args) -> int:
    H = parse_h3(read_text(args.file))
    G = skeleton(H)
    if args.format == "json":
        doc = {"vertices": _graph_labels(G, H),
               "edges": sorted([H.label_of(a), H.label_of(b)]
                               for a, b in G.edges)}
        _emit(json.dumps(doc, indent=2) + "\n", args.out)
    else:
        _emit(serialize_graph(G, labels=_graph_labels(G, H)), args.out)
    return 0


def _cmd_link(args) -> int:
    H = parse_h3(read_text(args.file))
    try:
        (u,) = _resolve(args.vertex, _h3_index(H), 1)
    except ValueError as exc:
        return _fail(str(exc))
    L = link(H, u)
    _emit(serialize_graph(L, labels=_graph_labels(L, H)), args.out)
    return 0


def _cmd_classify(args) -> int:
    X, labels = parse_complex(read_text(args.file))
    c = classify(X)
    if args.format == "json":
        _emit(json.dumps(classification_dict(c), indent=2) + "\n", args.out)
    else:
        _emit(f"kind: {c.kind}\neuler: {c.euler}\norientable: {c.orientable}\n"
              f"boundary_components: {c.boundary_components}\n", args.out)
    return 0


def _cmd_check_disk(args) -> int:
    H = parse_h3(read_text(args.file))
    try:
        cycle = _resolve(args.cycle, _h3_index(H), 4)
    except ValueError as exc:
        return _fail(str(exc))
    disk = find_boundary_inducing_disk(H, cycle, max_interior=args.max_interior)
    if disk is None:
        print("no boundary-inducing disk within the interior budget",
              file=sys.stderr)
        return 1
    _emit(serialize_complex(disk, labels={v: H.label_of(v) for v in H.vertices}),
          args.out)
    return 0


def _cmd_coverability(args) -> int:
    H = parse_h3(read_text(args.file))
    try:
        cycle = _resolve(args.cycle, _h3_index(H), 4)
    except ValueError as exc:
        return _fail(str(exc))
    strategy = EXHAUSTIVE_SMALL if args.exhaustive else PYRAMID_ONLY
    eps = as_fraction(args.epsilon)
    if args.exact:
        prob = exact_disk_coverability(H, cycle, as_fraction(args.p),
                                       strategy=strategy,
                                       max_interior=args.max_interior)
        decided = prob >= 1 - eps
        doc = {"probability": f"{prob.numerator}/{prob.denominator}",
               "decided_coverable": decided}
    else:
        est = sample_disk_coverability(H, cycle, _estimator(args, strategy))
        decided = est.decided_coverable
        doc = {"estimate": est.estimate, "successes": est.successes,
               "trials": est.trials, "decided_coverable": decided}
    if args.format == "json":
        _emit(json.dumps(doc, indent=2) + "\n", args.out)
    else:
        _emit("".join(f"{k}: {v}\n" for k, v in doc.items()), args.out)
    return 0 if decided else 1


def _cmd_admissibility(args) -> int:
    G, labels = parse_graph(read_text(args.file))
    try:
        w, u, wp = _resolve(args.p2, _label_index(labels), 3)
    except ValueError as exc:
        return _fail(str(exc))
    eps = as_fraction(args.epsilon)
    if args.exact:
        prob = exact_admissibility(G, w, u, wp, as_fraction(args.p))
        decided = prob >= 1 - eps
        doc = {"probability": f"{prob.numerator}/{prob.denominator}",
               "decided_admissible": decided}
    else:
        est = sample_admissibility(G, w, u, wp, _estimator(args))
        decided = est.decided_coverable
        doc = {"estimate": est.estimate, "successes": est.successes,
               "trials": est.trials, "decided_admissible": decided}
    if args.format == "json":
        _emit(json.dumps(doc, indent=2) + "\n", args.out)
    else:
        _emit("".join(f"{k}: {v}\n" for k, v in doc.items()), args.out)
    return 0 if decided else 1


def _cmd_audit(args) -> int:
    graphs = []
    for path in args.files:
        try:
            G, _ = parse_graph(read_text(path))
            graphs.append((path, G))
        except (OSError, ValueError):
            graphs.append((path, None))
    grid = None
    if args.p is not None or args.epsilon is not None:
        grid = [(as_fraction(args.p or "1/2"),
                 as_fraction(args.epsilon or "1/10"))]
    lines = list(audit_corpus(graphs, grid=grid))
    _emit("\n".join(lines) + "\n", args.out)
    ok = all(line.endswith(",true") for line in lines[1:])
    return 0 if ok else 1


def _search_params(args) -> SearchParams:
    params = SearchParams(t=args.t, trials=args.trials, seed=args.seed,
                          max_retries=args.retries)
    if args.p is not None:
        params = replace(params, p=float(as_fraction(args.p)))
    if args.epsilon is not None:
        params = replace(params, epsilon=float(as_fraction(args.epsilon)))
    if args.exhaustive:
        params = replace(params, strategy=EXHAUSTIVE_SMALL)
    return params


def _cmd_find(args) -> int:
    H = parse_h3(read_text(args.file))
    result = _FINDERS[args.target](H, _search_params(args))
    if not isinstance(result, HomeomorphCertificate):
        print(f"not found: stage={result.stage} ({result.detail})",
              file=sys.stderr)
        return 1
    report = verify_certificate(H, result)
    _emit(serialize_certificate(result, report=report.as_dict()), args.out)
    if args.out is not None:
        print(f"found {args.target}; certificate written to {args.out}")
    return 0


def _cmd_verify(args) -> int:
    H = parse_h3(read_text(args.hfile))
    try:
        cert = parse_certificate(read_text(args.certfile))
        report = verify_certificate(H, cert)
    except (CertificateError, ValueError) as exc:
        return _fail(f"malformed certificate: {exc}")
    if args.format == "json":
        _emit(json.dumps(report.as_dict(), indent=2) + "\n", args.out)
    else:
        lines = []
        for chk in report.checks:
            mark = "ok" if chk.passed else "FAIL"
            lines.append(f"[{mark}] {chk.name}: {chk.detail}")
        lines.append("verified" if report.passed else "verification failed")
        _emit("\n".join(lines) + "\n", args.out)
    return 0 if report.passed else 1


def _cmd_gen(args) -> int:
    if args.model == "gnp3":
        if args.p is None:
            return _fail("--p is required for model gnp3")
        H = random_hypergraph(args.n, float(as_fraction(args.p)), args.seed)
        _emit(serialize_h3(H), args.out)
    elif args.model == "complete":
        _emit(serialize_h3(complete_hypergraph(args.n)), args.out)
    else:
        try:
            G = clique_pendant_graph(args.n)
        except ValueError as exc:
            return _fail(str(exc))
        _emit(serialize_graph(G), args.out)
    return 0


def _cmd_sweep(args) -> int:
    try:
        n_values = [int(x) for x in args.n.split(",")]
        c_values = [float(x) for x in args.c.split(",")]
    except ValueError as exc:
        return _fail(str(exc))
    params = SearchParams(t=args.t)
    rows = threshold_sweep(args.target, n_values, c_values, args.trials,
                           args.seed, params=params, jobs=args.jobs,
                           timing=args.timing)
    _emit(sweep_csv(rows), args.out)
    return 0


def _add_common(sp, *, fmt=True, seed=False, estimator=False) -> None:
    if fmt:
        sp.add_argument("--format", choices=("text", "json"), default="text")
    sp.add_argument("--out", default=None, help="write output to this file")
    if seed:
        sp.add_argument("--seed", type=int, default=0)
    if estimator:
        sp.add_argument("--p", default="0.5",
                        help="inclusion probability (float or fraction)")
        sp.add_argument("--epsilon", default="0.1",
                        help="failure budget (float or fraction)")
        sp.add_argument("--trials", type=int, default=256)
        sp.add_argument("--exact", action="store_true",
                        help="exact rational probability instead of sampling")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="diskcover",
        description="Disk coverability and homeomorph search in "
                    "3-uniform hypergraphs.")
    sub = ap.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("skeleton", help="1-skeleton of a hypergraph")
    sp.add_argument("file")
    _add_common(sp)
    sp.set_defaults(fn=_cmd_skeleton)

    sp = sub.add_parser("link", help="link graph of one vertex")
    sp.add_argument("file")
    sp.add_argument("vertex")
    _add_common(sp, fmt=False)
    sp.set_defaults(fn=_cmd_link)

    sp = sub.add_parser("classify", help="classify a triangle complex")
    sp.add_argument("file")
    _add_common(sp)
    sp.set_defaults(fn=_cmd_classify)

    sp = sub.add_parser("check-disk",
                        help="search a boundary-inducing disk for a 4-cycle")
    sp.add_argument("file")
    sp.add_argument("--cycle", required=True, help="four labels, comma-separated")
    sp.add_argument("--max-interior", type=int, default=3)
    _add_common(sp, fmt=False)
    sp.set_defaults(fn=_cmd_check_disk)

    sp = sub.add_parser("coverability",
                        help="(p, epsilon)-coverability of a 4-cycle")
    sp.add_argument("file")
    sp.add_argument("--cycle", required=True)
    sp.add_argument("--max-interior", type=int, default=3)
    sp.add_argument("--exhaustive", action="store_true",
                    help="search beyond pyramid disks")
    _add_common(sp, seed=True, estimator=True)
    sp.set_defaults(fn=_cmd_coverability)

    sp = sub.add_parser("admissibility",
                        help="(p, epsilon)-admissibility of a length-2 path")
    sp.add_argument("file", help="graph file, two labels per line")
    sp.add_argument("--p2", required=True,
                    help="path w,u,w' as three labels, comma-separated")
    _add_common(sp, seed=True, estimator=True)
    sp.set_defaults(fn=_cmd_admissibility)

    sp = sub.add_parser("audit", help="inadmissibility audits over graph files")
    sp.add_argument("files", nargs="+")
    sp.add_argument("--p", default=None)
    sp.add_argument("--epsilon", default=None)
    sp.add_argument("--out", default=None)
    sp.set_defaults(fn=_cmd_audit)

    sp = sub.add_parser("find", help="search a homeomorph and emit a certificate")
    sp.add_argument("file")
    sp.add_argument("--target", required=True, choices=sorted(TARGETS))
    sp.add_argument("--t", type=int, default=4)
    sp.add_argument("--p", default=None)
    sp.add_argument("--epsilon", default=None)
    sp.add_argument("--trials", type=int, default=64)
    sp.add_argument("--retries", type=int, default=10)
    sp.add_argument("--exhaustive", action="store_true")
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--out", default=None)
    sp.set_defaults(fn=_cmd_find)

    sp = sub.add_parser("verify", help="re-verify a certificate from scratch")
    sp.add_argument("hfile")
    sp.add_argument("certfile")
    _add_common(sp)
    sp.set_defaults(fn=_cmd_verify)

    sp = sub.add_parser("gen", help="write a generated instance")
    sp.add_argument("--model", required=True,
                    choices=("gnp3", "clique-pendant", "complete"))
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--p", default=None)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--out", default=None)
    sp.set_defaults(fn=_cmd_gen)

    sp = sub.add_parser("sweep", help="threshold sweep over (n, c) cells")
    sp.add_argument("--target", required=True, choices=sorted(TARGETS))
    sp.add_argument("--n", required=True, help="comma-separated vertex counts")
    sp.add_argument("--c", required=True,
                    help="comma-separated density coefficients (p = c/sqrt(n))")
    sp.add_argument("--t", type=int, default=4)
    sp.add_argument("--trials", type=int, default=8)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--jobs", type=int, default=1)
    sp.add_argument("--timing", action="store_true",
                    help="record wall-clock seconds (breaks byte reproducibility)")
    sp.add_argument("--out", default=None)
    sp.set_defaults(fn=_cmd_sweep)

    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except (OSError, ValueError) as exc:
        return _fail(str(exc))


if __name__ == "__main__":
    sys.exit(main())
