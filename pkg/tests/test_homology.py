from itertools import combinations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import complete_graph, cycle_graph, facet_complexes, graphs, octahedron_graph
from raagcat.complex import Graph, empty_complex, flag_complex, join
from raagcat.errors import InputError
from raagcat.homology import (
    QQ,
    ZZ,
    HomologyGroup,
    PrimeField,
    betti_numbers,
    boundary_matrices,
    cohomology_nonzero_degrees,
    euler_characteristic,
    integral_homology,
    parse_coeffs,
    reduced_cohomology_nonzero,
    reduced_homology,
)
from raagcat.linalg import IntegerMatrix, smith_normal_form

FIELDS = [QQ, PrimeField(2), PrimeField(3), PrimeField(5)]


def cross_polytope(d):
    """Boundary of the d-dimensional cross-polytope, a (d-1)-sphere."""
    return Graph.from_edges(2 * d, [(i, j) for i, j in combinations(range(2 * d), 2) if j != i + d])


def test_boundary_matrices_triangle():
    cc = boundary_matrices(flag_complex(complete_graph(3)))
    assert cc.basis[0] == ((),)
    assert cc.matrix(0).to_dense() == [[1, 1, 1]]
    # edges (0,1),(0,2),(1,2)
    assert cc.matrix(1).to_dense() == [[-1, -1, 0], [1, 0, -1], [0, 1, 1]]
    assert cc.matrix(2).to_dense() == [[1], [-1], [1]]
    assert cc.top == 2


def test_boundary_matrices_empty():
    cc = boundary_matrices(empty_complex())
    assert cc.rank_of(-1) == 1
    assert cc.matrix(0).rows == 1 and cc.matrix(0).cols == 0


@pytest.mark.parametrize(
    "L, degree, group",
    [
        (flag_complex(cycle_graph(5)), 1, HomologyGroup(1)),
        (flag_complex(cycle_graph(5)), 0, HomologyGroup(0)),
        (empty_complex(), -1, HomologyGroup(1)),
        (flag_complex(Graph.from_edges(1)), -1, HomologyGroup(0)),
        (flag_complex(Graph.from_edges(3)), 0, HomologyGroup(2)),
        (flag_complex(octahedron_graph()), 2, HomologyGroup(1)),
        (flag_complex(complete_graph(4)), 3, HomologyGroup(0)),
    ],
)
def test_reduced_homology_examples(L, degree, group):
    assert reduced_homology(L, degree, ZZ) == group


def test_rp2_regression(rp2_complex):
    L = rp2_complex
    assert L.f_vector == (6, 15, 10)
    H = integral_homology(L)
    assert H == [HomologyGroup(0), HomologyGroup(0), HomologyGroup(0, (2,)), HomologyGroup(0)]
    assert betti_numbers(L, PrimeField(2)) == [0, 0, 1, 1]
    assert betti_numbers(L, PrimeField(3)) == [0, 0, 0, 0]
    assert betti_numbers(L, QQ) == [0, 0, 0, 0]
    assert cohomology_nonzero_degrees(H) == [2]
    assert reduced_cohomology_nonzero(L, 2) and not reduced_cohomology_nonzero(L, 1)
    assert euler_characteristic(L) == 1


@pytest.mark.parametrize("d", [1, 2, 3, 4])
def test_cross_polytope_is_sphere(d):
    L = flag_complex(cross_polytope(d))
    expected = [0] * (d + 1)
    expected[d] = 1  # index d is degree d - 1
    for c in FIELDS + [ZZ]:
        assert betti_numbers(L, c) == expected
    assert all(not h.torsion for h in integral_homology(L))


def test_coefficient_parsing_and_validation(c5):
    assert parse_coeffs("z") == ZZ
    assert parse_coeffs("Q") == QQ
    assert parse_coeffs("fp:7") == PrimeField(7)
    for bad in ["fp:4", "fp:x", "r", "fp:1"]:
        with pytest.raises(InputError):
            parse_coeffs(bad)
    with pytest.raises(InputError):
        PrimeField(9)
    with pytest.raises(InputError):
        reduced_homology(c5, 1, "z")
    with pytest.raises(InputError):
        reduced_homology(c5, -2)


def test_degrees_above_dimension_vanish(c5):
    assert reduced_homology(c5, 5) == HomologyGroup(0)
    assert not reduced_cohomology_nonzero(c5, 9)


# ---------------------------------------------------------------- properties

complexes = st.one_of(graphs().map(flag_complex), facet_complexes())


@given(complexes)
def test_boundary_squared_is_zero(L):
    cc = boundary_matrices(L)
    for k in range(1, len(cc.boundary)):
        prod = cc.boundary[k - 1].matmul(cc.boundary[k])
        assert prod.is_zero()


@given(complexes)
def test_euler_characteristic_over_every_field(L):
    reduced_chi = euler_characteristic(L) - 1
    for c in FIELDS + [ZZ]:
        b = betti_numbers(L, c)
        assert sum((-1) ** (i - 1) * x for i, x in enumerate(b)) == reduced_chi


@given(complexes)
def test_field_betti_from_integral_homology(L):
    # universal coefficients over F_p and Q
    H = integral_homology(L)
    assert betti_numbers(L, QQ) == [h.rank for h in H]
    for p in (2, 3, 5):
        expected = [
            h.rank + sum(1 for t in h.torsion if t % p == 0) + sum(1 for t in (H[i - 1].torsion if i else ()) if t % p == 0)
            for i, h in enumerate(H)
        ]
        assert betti_numbers(L, PrimeField(p)) == expected


@given(complexes)
def test_cohomology_nonvanishing_via_coboundary(L):
    # independent route: cohomology of the transposed cochain complex
    cc = boundary_matrices(L)
    H = integral_homology(L)
    route = []
    for k in range(-1, L.dim + 1):
        delta_out = cc.matrix(k + 1).transpose() if cc.matrix(k + 1) is not None else None
        delta_in = cc.matrix(k).transpose() if k >= 0 else None
        out = smith_normal_form(delta_out) if delta_out is not None and delta_out.rows and delta_out.cols else None
        inc = smith_normal_form(delta_in) if delta_in is not None and delta_in.rows and delta_in.cols else None
        free = cc.rank_of(k) - (out.rank if out else 0) - (inc.rank if inc else 0)
        torsion = inc.torsion if inc else ()
        if free or torsion:
            route.append(k)
    assert cohomology_nonzero_degrees(H) == route


@given(graphs(max_vertices=5), graphs(max_vertices=5))
def test_join_kunneth(g1, g2):
    K, L = flag_complex(g1), flag_complex(g2)
    J = join(K, L)
    for c in (QQ, PrimeField(2)):
        bk, bl, bj = betti_numbers(K, c), betti_numbers(L, c), betti_numbers(J, c)
        # index i is degree i - 1; b~_{n}(K*L) = sum over i + j = n - 1
        for n in range(-1, J.dim + 1):
            expected = sum(
                bk[i + 1] * bl[n - 1 - i + 1]
                for i in range(-1, K.dim + 1)
                if 0 <= n - 1 - i + 1 < len(bl)
            )
            assert bj[n + 1] == expected


def test_integer_matrix_input_to_snf_of_boundary(rp2_complex):
    cc = boundary_matrices(rp2_complex)
    assert smith_normal_form(cc.matrix(2)).invariant_factors[-1] == 2
    assert isinstance(cc.matrix(2), IntegerMatrix)
