"""Text formats for graphs and facet complexes.

Graph, labelled form::

    vertices: a b c d
    edges: a-b b-c
    c-d

Graph, numeric form (0-based indices, line-compatible with plain edge lists)::

    4
    0 1
    1 2

Facet complex: one facet per line, whitespace-separated vertex labels; vertex
order is order of first appearance.

``#`` starts a comment anywhere on a line.
"""

from __future__ import annotations

import logging

from raagcat.complex import DEFAULT_BUDGET, Graph, SimplicialComplex, from_facets
from raagcat.errors import InputError

log = logging.getLogger("raagcat")


def _lines(text: str) -> list[tuple[int, str]]:
    out = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            out.append((lineno, line))
    return out


def parse_graph(text: str) -> Graph:
    lines = _lines(text)
    if not lines:
        return Graph(())
    if lines[0][1].lower().startswith("vertices:"):
        return _parse_labelled(lines)
    return _parse_numeric(lines)


def _add_edge(edges: set, u: int, v: int, lineno: int, shown: str) -> None:
    if u == v:
        raise InputError(f"self-loop at line {lineno}: {shown}")
    e = (min(u, v), max(u, v))
    if e in edges:
        log.warning("duplicate edge %s at line %d ignored", shown, lineno)
    edges.add(e)


def _parse_numeric(lines: list[tuple[int, str]]) -> Graph:
    lineno, first = lines[0]
    try:
        n = int(first)
    except ValueError:
        raise InputError(f"line {lineno}: expected vertex count, got {first!r}") from None
    if n < 0:
        raise InputError(f"line {lineno}: negative vertex count")
    edges: set[tuple[int, int]] = set()
    for lineno, line in lines[1:]:
        parts = line.split()
        if len(parts) != 2:
            raise InputError(f"line {lineno}: expected 'u v', got {line!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise InputError(f"line {lineno}: non-integer vertex in {line!r}") from None
        for x in (u, v):
            if not 0 <= x < n:
                raise InputError(f"line {lineno}: vertex {x} out of range 0..{n - 1}")
        _add_edge(edges, u, v, lineno, line)
    return Graph(tuple(str(i) for i in range(n)), frozenset(edges))


def _parse_labelled(lines: list[tuple[int, str]]) -> Graph:
    labels: list[str] = []
    edge_tokens: list[tuple[int, str]] = []
    section = None
    for lineno, line in lines:
        low = line.lower()
        if low.startswith("vertices:"):
            if section is not None:
                raise InputError(f"line {lineno}: repeated 'vertices:' section")
            section = "vertices"
            line = line[len("vertices:"):]
        elif low.startswith("edges:"):
            if section != "vertices":
                raise InputError(f"line {lineno}: 'edges:' before 'vertices:'")
            section = "edges"
            line = line[len("edges:"):]
        tokens = line.split()
        if section == "vertices":
            labels.extend(tokens)
        else:
            edge_tokens.extend((lineno, t) for t in tokens)
    for lab in labels:
        if "-" in lab:
            raise InputError(f"vertex label {lab!r} may not contain '-'")
    if len(set(labels)) != len(labels):
        dup = sorted({x for x in labels if labels.count(x) > 1})
        raise InputError(f"duplicate vertex labels {dup}")
    index = {lab: i for i, lab in enumerate(labels)}
    edges: set[tuple[int, int]] = set()
    for lineno, tok in edge_tokens:
        if tok.count("-") != 1:
            raise InputError(f"line {lineno}: expected 'u-v', got {tok!r}")
        a, b = tok.split("-")
        for x in (a, b):
            if x not in index:
                raise InputError(f"line {lineno}: unknown vertex label {x!r}")
        _add_edge(edges, index[a], index[b], lineno, tok)
    return Graph(tuple(labels), frozenset(edges))


def format_graph(g: Graph) -> str:
    """Serialize so that ``parse_graph(format_graph(g)) == g``."""
    if g.vertex_labels == tuple(str(i) for i in range(g.n)):
        body = "".join(f"{u} {v}\n" for u, v in g.sorted_edges())
        return f"{g.n}\n{body}"
    labs = g.vertex_labels
    edges = " ".join(f"{labs[u]}-{labs[v]}" for u, v in g.sorted_edges())
    return f"vertices: {' '.join(labs)}\nedges: {edges}\n"


def parse_facets(text: str, budget: int = DEFAULT_BUDGET) -> SimplicialComplex:
    labels: list[str] = []
    index: dict[str, int] = {}
    facets = []
    for lineno, line in _lines(text):
        tokens = line.split()
        if len(set(tokens)) != len(tokens):
            raise InputError(f"line {lineno}: repeated vertex in facet {line!r}")
        facet = []
        for t in tokens:
            if t not in index:
                index[t] = len(labels)
                labels.append(t)
            facet.append(index[t])
        facets.append(facet)
    return from_facets(labels, facets, budget=budget)


def format_facets(L: SimplicialComplex) -> str:
    return "".join(" ".join(L.labels_of(f)) + "\n" for f in L.facets())
