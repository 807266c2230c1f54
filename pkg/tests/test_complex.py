from itertools import combinations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import complete_graph, cycle_graph, graphs, octahedron_graph
from raagcat.complex import (
    Graph,
    delete_simplex,
    empty_complex,
    flag_complex,
    from_facets,
    full_subcomplex,
    join,
    maximal_cliques,
)
from raagcat.errors import InputError, ResourceLimitError


def brute_cliques(g):
    """All nonempty cliques by subset enumeration."""
    out = []
    for k in range(1, g.n + 1):
        for sub in combinations(range(g.n), k):
            if all(e in g.edges for e in combinations(sub, 2)):
                out.append(sub)
    return out


def brute_f_vector(g):
    counts = {}
    for c in brute_cliques(g):
        counts[len(c) - 1] = counts.get(len(c) - 1, 0) + 1
    return tuple(counts[k] for k in range(len(counts)))


def test_octahedron_oracle_values():
    # frozen from subset enumeration
    assert brute_f_vector(octahedron_graph()) == (6, 12, 8)
    assert len([c for c in brute_cliques(octahedron_graph()) if len(c) == 3]) == 8


@pytest.mark.parametrize(
    "g, fvec, dim",
    [
        (cycle_graph(5), (5, 5), 1),
        (octahedron_graph(), (6, 12, 8), 2),
        (complete_graph(3), (3, 3, 1), 2),
        (Graph(()), (), -1),
    ],
)
def test_flag_complex_f_vector(g, fvec, dim):
    L = flag_complex(g)
    assert L.f_vector == fvec
    assert L.dim == dim
    assert L.is_flag and not L.truncated


def test_flag_complex_truncation_and_budget():
    L = flag_complex(complete_graph(5), max_dim=1)
    assert L.f_vector == (5, 10)
    assert L.truncated
    assert not flag_complex(cycle_graph(5), max_dim=1).truncated
    with pytest.raises(ResourceLimitError, match="budget 20"):
        flag_complex(complete_graph(6), budget=20)


def test_full_subcomplex_examples(c5, octahedron):
    P = full_subcomplex(c5, {1, 2, 3, 4})
    assert P.f_vector == (4, 3)
    assert P.vertex_labels == c5.vertex_labels
    assert full_subcomplex(octahedron, range(6)) == octahedron
    square = full_subcomplex(octahedron, {1, 2, 4, 5})
    assert square.f_vector == (4, 4)
    with pytest.raises(InputError):
        full_subcomplex(c5, {7})


def test_delete_simplex_examples(c5):
    assert delete_simplex(c5, ()) is c5
    tri = flag_complex(complete_graph(3))
    assert delete_simplex(tri, (0, 1, 2)).is_empty
    P = delete_simplex(c5, (0, 1))
    assert P.f_vector == (3, 2)
    assert P.simplices[1] == ((2, 3), (3, 4))
    with pytest.raises(InputError):
        delete_simplex(c5, (0, 2))


def test_join_examples(c5):
    s0 = flag_complex(Graph.from_edges(2))
    assert join(s0, s0).f_vector == (4, 4)
    assert join(empty_complex(), c5) == c5
    point = flag_complex(Graph.from_edges(["apex"]))
    cone = join(c5, point)
    assert cone.f_vector == (6, 10, 5)
    assert cone.dim == 2
    assert cone.is_flag


def test_join_relabels_colliding_labels(c5):
    J = join(c5, c5)
    assert len(set(J.vertex_labels)) == 10
    with pytest.raises(ResourceLimitError):
        join(c5, c5, budget=100)


@pytest.mark.parametrize(
    "g, expected",
    [
        (cycle_graph(5), [(0, 1), (0, 4), (1, 2), (2, 3), (3, 4)]),
        (complete_graph(4), [(0, 1, 2, 3)]),
        (Graph.from_edges(3, [(0, 1)]), [(0, 1), (2,)]),
    ],
)
def test_maximal_cliques_examples(g, expected):
    assert maximal_cliques(g) == expected


def test_maximal_cliques_octahedron():
    assert len(maximal_cliques(octahedron_graph())) == 8


def test_graph_validation():
    with pytest.raises(InputError):
        Graph.from_edges(2, [(0, 0)])
    with pytest.raises(InputError):
        Graph.from_edges(2, [(0, 5)])
    with pytest.raises(InputError):
        Graph(("a", "a"))
    assert Graph.from_edges(2, [(1, 0), (0, 1)]).edges == frozenset({(0, 1)})


def test_facets_closure_and_repeats():
    L = from_facets(["1", "2", "3", "4"], [[0, 1, 2], [0, 2, 3]])
    assert L.f_vector == (4, 5, 2)
    assert not L.is_flag
    with pytest.raises(InputError):
        from_facets(["a", "b"], [[0, 0]])


# ---------------------------------------------------------------- properties


@given(graphs())
def test_flag_complex_is_canonical_closed_and_flag(g):
    L = flag_complex(g)
    assert L.check_face_closure()
    assert L.check_flag()
    for level in L.simplices:
        assert list(level) == sorted(set(level))
        assert all(list(s) == sorted(set(s)) for s in level)
    assert [s for level in L.simplices for s in level] == brute_cliques(g)


@given(graphs())
def test_one_skeleton_recovers_graph(g):
    assert flag_complex(g).one_skeleton() == g


@given(graphs(), st.data())
def test_full_subcomplex_nested_restriction(g, data):
    L = flag_complex(g)
    A = data.draw(st.sets(st.integers(0, max(g.n - 1, 0))).filter(lambda s: all(v < g.n for v in s)))
    B = data.draw(st.sets(st.integers(0, max(g.n - 1, 0))).filter(lambda s: all(v < g.n for v in s)))
    assert full_subcomplex(L, range(g.n)) == L
    nested = full_subcomplex(full_subcomplex(L, A), B)
    assert nested == full_subcomplex(L, A & B)
    assert nested.check_face_closure()
    assert nested.is_flag


@given(graphs(max_vertices=6), graphs(max_vertices=6))
def test_join_f_vector_formula(g1, g2):
    K, L = flag_complex(g1), flag_complex(g2)
    J = join(K, L)
    assert J.check_face_closure()
    assert J.is_flag and J.check_flag()
    fk = (1,) + K.f_vector  # f_{-1} = 1
    fl = (1,) + L.f_vector
    for k, fj in enumerate(J.f_vector):
        expected = sum(fk[i + 1] * fl[k - i] for i in range(-1, k + 1) if i + 1 < len(fk) and 0 <= k - i < len(fl))
        assert fj == expected
    assert len(J.vertex_labels) == len(K.vertex_labels) + len(L.vertex_labels)


@given(graphs(max_vertices=4), graphs(max_vertices=4), graphs(max_vertices=4))
def test_join_associative(g1, g2, g3):
    A, B, C = (flag_complex(g) for g in (g1, g2, g3))
    assert join(join(A, B), C).simplices == join(A, join(B, C)).simplices


@given(graphs())
def test_maximal_cliques_match_brute_force_and_facets(g):
    all_c = [frozenset(c) for c in brute_cliques(g)]
    maximal = sorted(tuple(sorted(c)) for c in all_c if not any(c < d for d in all_c))
    assert maximal_cliques(g) == maximal
    assert flag_complex(g).facets() == maximal


@given(graphs())
def test_triangle_free_maximal_cliques_are_edges(g):
    L = flag_complex(g)
    if L.dim >= 2:
        return
    isolated = [(v,) for v in range(g.n) if not g.adjacency[v]]
    assert maximal_cliques(g) == sorted(g.sorted_edges() + isolated)
