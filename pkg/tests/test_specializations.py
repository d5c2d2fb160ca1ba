import random

from hypothesis import given, settings, strategies as st

from ribbontutte import fixtures
from ribbontutte.packaged import PackagedRibbonGraph
from ribbontutte.poly import IntPoly, LaurentPoly
from ribbontutte.specializations import (
    classical_tutte,
    evaluate_at,
    rank_profile,
    surface_tutte,
    surface_tutte_direct,
    tps_direct,
    tps_prefactor,
    tps_via_T,
    underlying_graph,
)

plain = PackagedRibbonGraph.from_plain
ABCD = ("a", "b", "c", "d")


def test_classical_examples():
    assert classical_tutte(underlying_graph(fixtures.bridge())) == IntPoly.parse("x")
    assert classical_tutte(underlying_graph(fixtures.plane_loop())) == IntPoly.parse("y")
    assert classical_tutte(underlying_graph(fixtures.triangle())) == IntPoly.parse("x^2 + x + y")


def test_classical_duality_on_bridge_and_loop():
    b = classical_tutte(underlying_graph(fixtures.bridge()))
    loop = classical_tutte(underlying_graph(fixtures.bridge().dual()))
    assert b.swap_families() == loop


def test_surface_examples():
    m = fixtures.interlaced()
    assert surface_tutte(m) == surface_tutte_direct(m)
    assert str(surface_tutte(fixtures.single_vertex())) == "x[0]*y[0]"
    assert surface_tutte_direct(fixtures.bridge()) == IntPoly.parse("x*x[0]*y[0]^2 + x[0]*y[0]")


def test_tps_direct_examples():
    for make, text in ((fixtures.bridge, "w + 1"), (fixtures.plane_loop, "1 + y"), (fixtures.single_vertex, "1")):
        pg = plain(make())
        assert tps_direct(pg.map, pg.vpart, pg.fpart) == LaurentPoly.parse(text)


def test_tps_via_T_examples():
    bridge = plain(fixtures.bridge())
    assert tps_prefactor(bridge) == LaurentPoly.parse("a^-1*c^-1")
    assert tps_via_T(bridge) == LaurentPoly.parse("a + 1")
    assert tps_via_T(plain(fixtures.plane_loop())) == LaurentPoly.parse("1 + c")
    assert tps_via_T(plain(fixtures.single_vertex())) == LaurentPoly.parse("1")


def test_printed_prefactor_fails_on_bridge():
    bridge = plain(fixtures.bridge())
    assert tps_via_T(bridge, "printed") == LaurentPoly.parse("a^3*d + a^2*d")
    assert tps_via_T(bridge, "printed") != tps_direct(bridge.map, bridge.vpart, bridge.fpart, ABCD)


def test_rank_profile_of_bridge():
    pg = plain(fixtures.bridge())
    assert rank_profile(pg.map, pg.vpart, pg.fpart, []) == (0, 0, 0, 0)
    assert rank_profile(pg.map, pg.vpart, pg.fpart, [0]) == (1, 0, 0, 0)


def test_evaluate_at():
    p = tps_via_T(plain(fixtures.bridge()))
    assert evaluate_at(p, {"a": 3}) == 4
    assert evaluate_at(p, {"b": 3}) == p


zero_weight = st.builds(
    lambda seed: fixtures.random_packaged(random.Random(seed), max_edges=5, max_vertices=4, max_weight=0),
    st.integers(0, 10**9),
)


@settings(max_examples=100, deadline=None)
@given(zero_weight)
def test_tps_routes_agree(pg):
    assert tps_via_T(pg) == tps_direct(pg.map, pg.vpart, pg.fpart, ABCD)


@settings(max_examples=100, deadline=None)
@given(zero_weight)
def test_surface_routes_agree(pg):
    assert surface_tutte(pg.map) == surface_tutte_direct(pg.map)


@settings(max_examples=50, deadline=None)
@given(st.integers(0, 10**9))
def test_plane_maps_collapse_to_classical(seed):
    # genus zero: x[0] = y[0] = 1 leaves x^n(dual) y^n, i.e. T(G; x+1, y+1)
    m = fixtures.random_connected_planar(random.Random(seed))
    T = surface_tutte(m).substitute(lambda v: 1 if v.sub2 is not None else LaurentPoly.var(v.name))
    shifted = classical_tutte(underlying_graph(m)).substitute({"x": LaurentPoly.var("x") + 1, "y": LaurentPoly.var("y") + 1})
    assert T == shifted
