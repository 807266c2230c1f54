from itertools import combinations

import pytest
from hypothesis import settings
from hypothesis import strategies as st

from raagcat.complex import Graph, flag_complex, from_facets

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

RP2_FACETS = [
    (1, 2, 3), (1, 3, 4), (1, 4, 5), (1, 5, 6), (1, 2, 6),
    (2, 3, 5), (2, 4, 5), (2, 4, 6), (3, 4, 6), (3, 5, 6),
]


def cycle_graph(n):
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n):
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def complete_graph(n):
    return Graph.from_edges(n, combinations(range(n), 2))


def octahedron_graph():
    # antipodal pairs (0,3), (1,4), (2,5)
    return Graph.from_edges(6, [(i, j) for i, j in combinations(range(6), 2) if j != i + 3])


def cone_graph(g):
    apex = g.n
    return Graph.from_edges(g.n + 1, list(g.edges) + [(v, apex) for v in range(g.n)])


def rp2():
    return from_facets([str(i) for i in range(1, 7)], [[v - 1 for v in f] for f in RP2_FACETS])


@pytest.fixture
def c5():
    return flag_complex(cycle_graph(5))


@pytest.fixture
def octahedron():
    return flag_complex(octahedron_graph())


@pytest.fixture
def pyramid():
    return flag_complex(cone_graph(cycle_graph(4)))


@pytest.fixture
def rp2_complex():
    return rp2()


@st.composite
def graphs(draw, max_vertices=8):
    n = draw(st.integers(0, max_vertices))
    pairs = list(combinations(range(n), 2))
    chosen = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph.from_edges(n, [e for e, c in zip(pairs, chosen) if c])


@st.composite
def facet_complexes(draw, max_vertices=7, max_facets=6):
    n = draw(st.integers(1, max_vertices))
    facets = draw(
        st.lists(
            st.sets(st.integers(0, n - 1), min_size=1, max_size=min(n, 4)),
            min_size=0,
            max_size=max_facets,
        )
    )
    return from_facets([str(i) for i in range(n)], [sorted(f) for f in facets])


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
