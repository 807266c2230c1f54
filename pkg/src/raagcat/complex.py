"""Finite simplicial complexes, flag complexes of graphs, and clique enumeration.

Vertices are integer indices into an ordered tuple of string labels.  A simplex
is a strictly increasing tuple of indices; ``()`` is the empty simplex.  All
simplex lists are kept in lexicographic order, so boundary signs and scan
orders are fully determined by the label declaration order.

Subcomplexes keep the ambient label tuple of their parent: deleting vertex 0
from a pentagon leaves a complex whose vertex set is ``{1, 2, 3, 4}`` but whose
``vertex_labels`` still has five entries.
"""

from __future__ import annotations

from bisect import bisect_left
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from typing import Iterable, Iterator, Sequence

from raagcat.errors import InputError, ResourceLimitError

Simplex = tuple[int, ...]

DEFAULT_BUDGET = 5_000_000


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the indices of set bits of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def bits_to_simplex(mask: int) -> Simplex:
    return tuple(iter_bits(mask))


def simplex_to_bits(simplex: Iterable[int]) -> int:
    mask = 0
    for v in simplex:
        mask |= 1 << v
    return mask


@dataclass(frozen=True)
class Graph:
    """Finite simple graph on labelled vertices ``0..n-1``.

    ``edges`` holds each edge once as ``(i, j)`` with ``i < j``.
    """

    vertex_labels: tuple[str, ...]
    edges: frozenset[tuple[int, int]] = field(default_factory=frozenset)

    def __post_init__(self) -> None:
        labels = tuple(str(x) for x in self.vertex_labels)
        if len(set(labels)) != len(labels):
            raise InputError("vertex labels must be distinct")
        n = len(labels)
        normalized = set()
        for e in self.edges:
            u, v = e
            if u == v:
                raise InputError(f"self-loop at vertex {labels[u] if 0 <= u < n else u}")
            if not (0 <= u < n and 0 <= v < n):
                raise InputError(f"edge {e} references an unknown vertex")
            normalized.add((min(u, v), max(u, v)))
        object.__setattr__(self, "vertex_labels", labels)
        object.__setattr__(self, "edges", frozenset(normalized))

    @classmethod
    def from_edges(cls, n_or_labels: int | Sequence[str], edges: Iterable[tuple[int, int]] = ()) -> Graph:
        if isinstance(n_or_labels, int):
            labels = tuple(str(i) for i in range(n_or_labels))
        else:
            labels = tuple(n_or_labels)
        return cls(labels, frozenset(tuple(e) for e in edges))

    @property
    def n(self) -> int:
        return len(self.vertex_labels)

    @cached_property
    def adjacency(self) -> tuple[int, ...]:
        """Neighbourhood bitmask of every vertex."""
        adj = [0] * self.n
        for u, v in self.edges:
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return tuple(adj)

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    def relabel(self, permutation: Sequence[int]) -> Graph:
        """Graph with vertex ``i`` moved to position ``permutation[i]``."""
        labels = [""] * self.n
        for i, p in enumerate(permutation):
            labels[p] = self.vertex_labels[i]
        return Graph(tuple(labels), frozenset((permutation[u], permutation[v]) for u, v in self.edges))


@dataclass(frozen=True)
class SimplicialComplex:
    """Canonical finite simplicial complex.

    ``simplices[k]`` is the lexicographically sorted tuple of ``k``-simplices.
    The tuple never ends in an empty level, so ``len(simplices) - 1`` is the
    dimension.  ``is_flag`` records that the complex was built from a graph
    (or verified to be flag); ``truncated`` that a ``max_dim`` cap dropped
    simplices.
    """

    vertex_labels: tuple[str, ...]
    simplices: tuple[tuple[Simplex, ...], ...]
    is_flag: bool = False
    truncated: bool = False

    @property
    def dim(self) -> int:
        return len(self.simplices) - 1

    @property
    def f_vector(self) -> tuple[int, ...]:
        return tuple(len(level) for level in self.simplices)

    @property
    def is_empty(self) -> bool:
        return not self.simplices

    @property
    def num_simplices(self) -> int:
        return sum(self.f_vector)

    @property
    def vertices(self) -> tuple[int, ...]:
        return tuple(s[0] for s in self.simplices[0]) if self.simplices else ()

    @cached_property
    def vertex_mask(self) -> int:
        return simplex_to_bits(self.vertices)

    @cached_property
    def adjacency(self) -> tuple[int, ...]:
        """Neighbourhood bitmasks in the 1-skeleton, indexed by ambient vertex index."""
        adj = [0] * len(self.vertex_labels)
        if self.dim >= 1:
            for u, v in self.simplices[1]:
                adj[u] |= 1 << v
                adj[v] |= 1 << u
        return tuple(adj)

    def __contains__(self, simplex: Sequence[int]) -> bool:
        s = tuple(simplex)
        k = len(s) - 1
        if k < 0:
            return True
        if k > self.dim:
            return False
        level = self.simplices[k]
        i = bisect_left(level, s)
        return i < len(level) and level[i] == s

    def iter_simplices(self, include_empty: bool = False) -> Iterator[Simplex]:
        """All simplices by dimension, then lexicographically."""
        if include_empty:
            yield ()
        for level in self.simplices:
            yield from level

    def facets(self) -> list[Simplex]:
        """Inclusion-maximal simplices, sorted."""
        out = []
        for k, level in enumerate(self.simplices):
            if k == self.dim:
                out.extend(level)
                continue
            covered = set()
            for s in self.simplices[k + 1]:
                for i in range(len(s)):
                    covered.add(s[:i] + s[i + 1:])
            out.extend(s for s in level if s not in covered)
        return sorted(out)

    def labels_of(self, simplex: Sequence[int]) -> list[str]:
        return [self.vertex_labels[v] for v in simplex]

    def one_skeleton(self) -> Graph:
        """The 1-skeleton as a :class:`Graph` on the vertex set, in ambient order."""
        verts = self.vertices
        index = {v: i for i, v in enumerate(verts)}
        edges = self.simplices[1] if self.dim >= 1 else ()
        return Graph(
            tuple(self.vertex_labels[v] for v in verts),
            frozenset((index[u], index[v]) for u, v in edges),
        )

    def check_face_closure(self) -> bool:
        for k in range(1, len(self.simplices)):
            lower = set(self.simplices[k - 1])
            for s in self.simplices[k]:
                for i in range(len(s)):
                    if s[:i] + s[i + 1:] not in lower:
                        return False
        return True

    def check_flag(self) -> bool:
        """Brute-force check that every clique of the 1-skeleton spans a simplex."""
        all_cliques = enumerate_cliques(self.adjacency, self.vertex_mask)
        return all(c in self for c in all_cliques)


def empty_complex(labels: Sequence[str] = (), is_flag: bool = True) -> SimplicialComplex:
    return SimplicialComplex(tuple(labels), (), is_flag=is_flag)


def _canonical_levels(simplices: Iterable[Simplex]) -> tuple[tuple[Simplex, ...], ...]:
    by_dim: dict[int, set[Simplex]] = {}
    for s in simplices:
        if s:
            by_dim.setdefault(len(s) - 1, set()).add(s)
    if not by_dim:
        return ()
    top = max(by_dim)
    return tuple(tuple(sorted(by_dim.get(k, ()))) for k in range(top + 1))


def from_facets(
    labels: Sequence[str], facets: Iterable[Sequence[int]], budget: int = DEFAULT_BUDGET
) -> SimplicialComplex:
    """Downward closure of a facet list.  The result is tagged non-flag."""
    labels = tuple(labels)
    n = len(labels)
    closure: set[Simplex] = set()
    for facet in facets:
        f = tuple(sorted(facet))
        if len(set(f)) != len(f):
            raise InputError(f"repeated vertex in facet {[labels[v] for v in f]}")
        if any(not 0 <= v < n for v in f):
            raise InputError(f"facet {f} references an unknown vertex")
        if f in closure:
            continue
        for k in range(1, len(f) + 1):
            closure.update(combinations(f, k))
            if len(closure) > budget:
                raise ResourceLimitError(f"facet closure exceeds simplex budget {budget}", budget)
    return SimplicialComplex(labels, _canonical_levels(closure), is_flag=False)


def enumerate_cliques(adjacency: Sequence[int], vertex_mask: int, budget: int = DEFAULT_BUDGET) -> list[Simplex]:
    """Every nonempty clique inside ``vertex_mask``, by size then lexicographically."""
    levels, _ = _clique_levels(adjacency, vertex_mask, None, budget)
    return [s for level in levels for s in level]


def _clique_levels(
    adjacency: Sequence[int], vertex_mask: int, max_dim: int | None, budget: int
) -> tuple[tuple[tuple[Simplex, ...], ...], bool]:
    """Cliques inside ``vertex_mask`` grouped by dimension, plus a truncation flag.

    Cliques are grown from their smallest vertex; extending lexicographically
    sorted level-``k`` cliques in increasing vertex order yields level ``k+1``
    already sorted.
    """
    above = {v: adjacency[v] & vertex_mask & ~((1 << (v + 1)) - 1) for v in iter_bits(vertex_mask)}
    levels: list[tuple[Simplex, ...]] = []
    frontier = [((v,), above[v]) for v in above]
    count = len(frontier)
    if count > budget:
        raise ResourceLimitError(f"flag complex exceeds simplex budget {budget}", budget)
    truncated = False
    while frontier:
        levels.append(tuple(s for s, _ in frontier))
        if max_dim is not None and len(levels) > max_dim:
            truncated = any(cand for _, cand in frontier)
            break
        nxt = []
        for s, cand in frontier:
            for w in iter_bits(cand):
                nxt.append((s + (w,), cand & above[w]))
            if count + len(nxt) > budget:
                raise ResourceLimitError(
                    f"flag complex exceeds simplex budget {budget} (reached dimension {len(levels)})",
                    budget,
                )
        count += len(nxt)
        frontier = nxt
    return tuple(levels), truncated


def flag_complex(g: Graph, max_dim: int | None = None, budget: int = DEFAULT_BUDGET) -> SimplicialComplex:
    """Flag (clique) complex of ``g``, optionally capped at dimension ``max_dim``."""
    if max_dim is not None and max_dim < 0:
        raise InputError("max_dim must be nonnegative")
    levels, truncated = _clique_levels(g.adjacency, (1 << g.n) - 1, max_dim, budget)
    return SimplicialComplex(g.vertex_labels, levels, is_flag=True, truncated=truncated)


def induced_flag_complex(L: SimplicialComplex, vertex_mask: int, budget: int = DEFAULT_BUDGET) -> SimplicialComplex:
    """Flag complex of the 1-skeleton of ``L`` restricted to ``vertex_mask``.

    For flag ``L`` this is the full subcomplex on those vertices.
    """
    levels, _ = _clique_levels(L.adjacency, vertex_mask & L.vertex_mask, None, budget)
    return SimplicialComplex(L.vertex_labels, levels, is_flag=True)


def _check_indices(L: SimplicialComplex, verts: Iterable[int]) -> set[int]:
    n = len(L.vertex_labels)
    out = set()
    for v in verts:
        if not isinstance(v, int) or not 0 <= v < n:
            raise InputError(f"unknown vertex index {v!r}")
        out.add(v)
    return out


def full_subcomplex(L: SimplicialComplex, keep: Iterable[int]) -> SimplicialComplex:
    """All simplices of ``L`` whose vertices lie in ``keep``."""
    keep_set = _check_indices(L, keep)
    levels = []
    for level in L.simplices:
        kept = tuple(s for s in level if all(v in keep_set for v in s))
        if not kept:
            break
        levels.append(kept)
    return SimplicialComplex(L.vertex_labels, tuple(levels), is_flag=L.is_flag, truncated=L.truncated)


def delete_simplex(L: SimplicialComplex, sigma: Sequence[int]) -> SimplicialComplex:
    """Full subcomplex on the vertices not in ``sigma``; ``sigma`` must be a simplex of ``L``."""
    s = tuple(sigma)
    if not s:
        return L
    if tuple(sorted(set(s))) != s or s not in L:
        raise InputError(f"{list(s)} is not a simplex of the complex")
    drop = set(s)
    return full_subcomplex(L, (v for v in range(len(L.vertex_labels)) if v not in drop))


def _disjoint_labels(a: tuple[str, ...], b: tuple[str, ...]) -> tuple[tuple[str, ...], tuple[str, ...]]:
    if not set(a) & set(b):
        return a, b
    tag = 1
    while True:
        a2 = tuple(f"{x}.{tag}" for x in a)
        b2 = tuple(f"{x}.{tag + 1}" for x in b)
        if len(set(a2) | set(b2)) == len(a2) + len(b2):
            return a2, b2
        tag += 2


def join(L1: SimplicialComplex, L2: SimplicialComplex, budget: int = DEFAULT_BUDGET) -> SimplicialComplex:
    """Simplicial join; vertices of ``L2`` are shifted past those of ``L1``.

    Labels are suffixed ``.1``/``.2`` when the two label sets collide.
    """
    total = (L1.num_simplices + 1) * (L2.num_simplices + 1) - 1
    if total > budget:
        raise ResourceLimitError(f"join would have {total} simplices, over budget {budget}", budget)
    labels1, labels2 = _disjoint_labels(L1.vertex_labels, L2.vertex_labels)
    offset = len(labels1)
    by_dim: dict[int, list[Simplex]] = {}
    right = [()] + [tuple(v + offset for v in s) for s in L2.iter_simplices()]
    for s1 in L1.iter_simplices(include_empty=True):
        for s2 in right:
            s = s1 + s2
            if s:
                by_dim.setdefault(len(s) - 1, []).append(s)
    levels = tuple(tuple(sorted(by_dim[k])) for k in range(len(by_dim)))
    return SimplicialComplex(
        labels1 + labels2,
        levels,
        is_flag=L1.is_flag and L2.is_flag,
        truncated=L1.truncated or L2.truncated,
    )


def _bron_kerbosch(adj: Sequence[int], p: int) -> list[int]:
    out: list[int] = []

    def expand(r: int, p: int, x: int) -> None:
        if not p:
            if not x:
                out.append(r)
            return
        pivot = max(iter_bits(p | x), key=lambda u: (p & adj[u]).bit_count())
        for v in iter_bits(p & ~adj[pivot]):
            bit = 1 << v
            expand(r | bit, p & adj[v], x & adj[v])
            p &= ~bit
            x |= bit

    if p:
        expand(0, p, 0)
    return out


def maximal_clique_masks(adjacency: Sequence[int], vertex_mask: int) -> list[int]:
    """Maximal cliques inside ``vertex_mask`` as bitmasks (Bron-Kerbosch with pivoting)."""
    return _bron_kerbosch(adjacency, vertex_mask)


def maximal_cliques(g: Graph) -> list[Simplex]:
    """Inclusion-maximal cliques of ``g``, each sorted, in sorted order.

    Isolated vertices are returned as singletons; the graph with no vertices
    has no cliques to report.
    """
    masks = maximal_clique_masks(g.adjacency, (1 << g.n) - 1)
    return sorted(bits_to_simplex(m) for m in masks)


def f_vector(L: SimplicialComplex) -> tuple[int, ...]:
    return L.f_vector


def dim(L: SimplicialComplex) -> int:
    return L.dim
