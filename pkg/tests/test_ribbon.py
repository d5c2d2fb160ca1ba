import random

import pytest
from hypothesis import given, settings, strategies as st

from ribbontutte import fixtures
from ribbontutte.errors import MalformedMapError, UnknownEdgeError
from ribbontutte.ribbon import RibbonMap


def test_interlaced_has_one_face_through_every_half_edge():
    m = fixtures.interlaced()
    (b,) = m.boundary_components()
    assert b.kind == "orbit" and b.id == "h0"
    assert sorted(b.members) == list(range(6))
    # walk by hand: h -> sigma(alpha(h))
    assert b.members == (0, 4, 1, 2, 5, 3)


def test_plane_loop_has_two_faces():
    assert fixtures.plane_loop().boundary_ids() == ("h0", "h1")


def test_isolated_vertex_is_a_boundary_component():
    (b,) = fixtures.single_vertex().boundary_components()
    assert b.kind == "isolated-vertex" and b.id == "v0"


@pytest.mark.parametrize(
    "make, expected",
    [
        (fixtures.interlaced, (2, 3, 1, 1, 1, 1, 2)),
        (fixtures.single_vertex, (1, 0, 1, 1, 0, 0, 0)),
        (fixtures.bridge, (2, 1, 1, 1, 0, 1, 0)),
        (fixtures.double_loop, (1, 2, 1, 1, 1, 0, 2)),
    ],
)
def test_counts(make, expected):
    assert tuple(make().counts()) == expected


def test_restrict_examples():
    m = fixtures.interlaced()
    assert tuple(m.restrict({0, 1}).counts()) == (2, 2, 2, 1, 0, 1, 1)
    assert m.restrict(m.edge_ids) == m
    empty = fixtures.bridge().restrict(())
    assert empty.num_vertices == 2 and empty.isolated_vertices == 2


def test_restrict_unknown_edge():
    with pytest.raises(UnknownEdgeError):
        fixtures.bridge().restrict({7})


def test_dual_examples():
    d = fixtures.bridge().dual()
    assert tuple(d.counts())[:3] == (1, 1, 2)
    c = fixtures.interlaced().dual().counts()
    assert (c.v, c.e, c.f, c.g) == (1, 3, 2, 1)


def test_dual_swaps_isolated_vertices():
    m = fixtures.bridge_and_vertex()
    d = m.dual()
    assert d.isolated_vertices == 1
    assert d.counts().f == m.counts().v


def test_components():
    assert len(fixtures.interlaced().components()) == 1
    assert len(fixtures.two_loops().components()) == 2
    assert len(fixtures.bridge_and_vertex().components()) == 2


def test_malformed_maps_rejected():
    with pytest.raises(MalformedMapError):
        RibbonMap.from_cycles([(0, 1)], [(0, 0)])
    with pytest.raises(MalformedMapError):
        RibbonMap.from_cycles([(0,), (0, 1)], [(0, 1)])
    with pytest.raises(MalformedMapError):
        RibbonMap.from_cycles([(0,)], [(0, 1)])


def test_flip_edge_keeps_rotation():
    m = fixtures.interlaced()
    f = m.flip_edge(1)
    assert f.vertices == m.vertices
    assert f.edge(1) == (3, 2)


maps = st.builds(
    lambda seed: fixtures.random_map(random.Random(seed), max_edges=6, max_vertices=4),
    st.integers(0, 10**9),
)


@settings(max_examples=150, deadline=None)
@given(maps)
def test_euler_relation_and_orbit_lengths(m):
    c = m.counts()
    assert c.v - c.e + c.f == 2 * c.k - 2 * c.g
    orbits = [b for b in m.boundary_components() if b.kind == "orbit"]
    assert sum(len(b.members) for b in orbits) == 2 * c.e
    seen = [h for b in orbits for h in b.members]
    assert len(seen) == len(set(seen))


@settings(max_examples=150, deadline=None)
@given(maps, st.integers(0, 2**6 - 1), st.integers(0, 2**6 - 1))
def test_restrict_composes(m, a, b):
    A = {e for i, e in enumerate(m.edge_ids) if a >> i & 1}
    B = {e for i, e in enumerate(m.edge_ids) if b >> i & 1}
    assert m.restrict(A).restrict(A & B) == m.restrict(A & B)
    assert m.restrict(A).restrict(B & A).counts() == m.restrict(A & B).counts()


@settings(max_examples=150, deadline=None)
@given(maps)
def test_dual_counts(m):
    c, d = m.counts(), m.dual().counts()
    assert (d.v, d.e, d.f, d.k, d.g) == (c.f, c.e, c.v, c.k, c.g)
    assert m.dual().dual().counts() == c
