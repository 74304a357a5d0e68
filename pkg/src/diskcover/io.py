"""Text formats for hypergraphs, graphs, and triangle complexes.

The ".h3" format is line-oriented: one triple per line as three
whitespace-separated labels, with '#' comment lines. A header line

    #vertices: a b c ...

may enumerate vertices explicitly; the vertex set is the union of the
header labels and all labels appearing in triples, which is how isolated
vertices are represented. Parsing assigns dense integer identifiers in
order of first appearance (header first, then triple lines), so a file
always maps to the same internal ids.

Graphs use the same conventions with two labels per line (".g2").
Complexes serialize their triangle lists in the ".h3" line format.
"""

from __future__ import annotations

import json
from typing import IO, Iterable

from .complexes import Classification, TwoComplex
from .hypergraph import Hypergraph3, SkeletonGraph

_VERTEX_HEADER = "#vertices:"


def _parse_lines(text: str, arity: int) -> tuple[list[str], list[tuple[str, ...]]]:
    header: list[str] = []
    rows: list[tuple[str, ...]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            if line.lower().startswith(_VERTEX_HEADER):
                header.extend(line[len(_VERTEX_HEADER):].split())
            continue
        parts = line.split()
        if len(parts) != arity:
            raise ValueError(f"line {lineno}: expected {arity} labels, got {len(parts)}")
        rows.append(tuple(parts))
    return header, rows


def _index_labels(header: list[str], rows: list[tuple[str, ...]]) -> dict[str, int]:
    index: dict[str, int] = {}
    for lab in header:
        index.setdefault(lab, len(index))
    for row in rows:
        for lab in row:
            index.setdefault(lab, len(index))
    return index


def parse_h3(text: str) -> Hypergraph3:
    header, rows = _parse_lines(text, 3)
    index = _index_labels(header, rows)
    triples = [tuple(index[lab] for lab in row) for row in rows]
    labels = tuple(sorted(index, key=index.__getitem__))
    return Hypergraph3(len(index), triples, labels=labels)


def serialize_h3(H: Hypergraph3) -> str:
    # Header always written: it pins isolated vertices and the label->id order,
    # making parse -> serialize -> parse the identity.
    lines = [_VERTEX_HEADER + " " + " ".join(H.label_of(v) for v in H.vertices)]
    for t in sorted(H.edges):
        lines.append(" ".join(H.label_of(v) for v in t))
    return "\n".join(lines) + "\n"


def parse_graph(text: str) -> tuple[SkeletonGraph, tuple[str, ...]]:
    """Parse a two-label-per-line graph file; returns the graph and its labels."""
    header, rows = _parse_lines(text, 2)
    index = _index_labels(header, rows)
    edges = [tuple(index[lab] for lab in row) for row in rows]
    labels = tuple(sorted(index, key=index.__getitem__))
    return SkeletonGraph(range(len(index)), edges), labels


def serialize_graph(G: SkeletonGraph, labels: Iterable[str] | None = None) -> str:
    names = {v: str(v) for v in G.vertices}
    if labels is not None:
        names = dict(zip(sorted(G.vertices), labels))
    lines = [_VERTEX_HEADER + " " + " ".join(names[v] for v in sorted(G.vertices))]
    for a, b in sorted(G.edges):
        lines.append(f"{names[a]} {names[b]}")
    return "\n".join(lines) + "\n"


def parse_complex(text: str) -> tuple[TwoComplex, tuple[str, ...]]:
    header, rows = _parse_lines(text, 3)
    index = _index_labels(header, rows)
    triangles = [tuple(index[lab] for lab in row) for row in rows]
    labels = tuple(sorted(index, key=index.__getitem__))
    return TwoComplex(triangles), labels


def serialize_complex(X: TwoComplex, labels: dict[int, str] | None = None) -> str:
    def name(v: int) -> str:
        return labels[v] if labels else str(v)

    return "\n".join(" ".join(name(v) for v in t) for t in sorted(X.triangles)) + "\n"


def classification_dict(c: Classification) -> dict:
    return {
        "kind": c.kind,
        "euler": c.euler,
        "orientable": c.orientable,
        "boundary_components": c.boundary_components,
    }


def classification_json(c: Classification) -> str:
    return json.dumps(classification_dict(c), indent=2) + "\n"


def read_text(path_or_file: str | IO[str]) -> str:
    if hasattr(path_or_file, "read"):
        return path_or_file.read()
    with open(path_or_file, "r", encoding="utf-8") as fh:
        return fh.read()
