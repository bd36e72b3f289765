from hypothesis import given
from hypothesis import strategies as st

from quietnet.gridgraph import (
    GridGraph,
    hamilton_path,
    has_isolated_vertex,
    induced_edges,
    is_hamilton_path,
    max_degree,
)

T_SHAPE = GridGraph.from_vertices([(0, 0), (1, 0), (2, 0), (1, 1)])
SQUARE = GridGraph.from_vertices([(0, 0), (1, 0), (0, 1), (1, 1)])


def test_induced_edges_examples():
    g = GridGraph.from_vertices([(0, 0), (1, 0), (0, 1)])
    assert induced_edges(g) == {
        ((0, 0), (1, 0)),
        ((0, 0), (0, 1)),
    }
    assert induced_edges(GridGraph.from_vertices([(0, 0), (2, 0)])) == set()
    assert induced_edges(GridGraph.from_vertices([(0, 0)])) == set()


def test_max_degree_examples():
    assert max_degree(GridGraph.from_vertices([(0, 0), (1, 0), (2, 0)])) == 2
    plus = GridGraph.from_vertices(
        [(0, 0), (1, 0), (-1, 0), (0, 1), (0, -1)]
    )
    assert max_degree(plus) == 4
    assert max_degree(GridGraph.from_vertices([(0, 0)])) == 0


def test_has_isolated_vertex_examples():
    assert not has_isolated_vertex(GridGraph.from_vertices([(0, 0), (1, 0)]))
    assert has_isolated_vertex(GridGraph.from_vertices([(0, 0), (5, 5)]))
    assert not has_isolated_vertex(GridGraph(frozenset()))
    assert has_isolated_vertex(GridGraph.from_vertices([(0, 0)]))


def test_hamilton_path_square():
    path = hamilton_path(SQUARE)
    assert path is not None
    assert is_hamilton_path(SQUARE, path)


def test_hamilton_path_t_shape_has_none():
    # Three degree-1 vertices hang off (1,0); a path has only two ends.
    assert hamilton_path(T_SHAPE) is None


def test_hamilton_path_singleton():
    assert hamilton_path(GridGraph.from_vertices([(0, 0)])) == [(0, 0)]


def test_hamilton_path_deterministic():
    assert hamilton_path(SQUARE) == hamilton_path(SQUARE)


@st.composite
def grid_graphs(draw):
    vs = draw(
        st.sets(
            st.tuples(st.integers(0, 3), st.integers(0, 3)),
            min_size=1,
            max_size=9,
        )
    )
    return GridGraph(frozenset(vs))


@given(grid_graphs())
def test_returned_path_always_verifies(g):
    path = hamilton_path(g)
    if path is not None:
        assert is_hamilton_path(g, path)
        if len(g) >= 2:
            assert not has_isolated_vertex(g)


@given(grid_graphs(), st.integers(-5, 5), st.integers(-5, 5))
def test_translation_preserves_hamiltonicity(g, da, db):
    moved = g.translated(da, db)
    assert (hamilton_path(g) is None) == (hamilton_path(moved) is None)
