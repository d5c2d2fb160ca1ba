import random

import pytest
from hypothesis import given, settings, strategies as st

from ribbontutte import fixtures
from ribbontutte.packaged import PackagedRibbonGraph
from ribbontutte.partition import Partition
from ribbontutte.poly import X, Y, IntPoly, LaurentPoly, Var, xg, yg
from ribbontutte.ribbon import RibbonMap
from ribbontutte.tutte import (
    check_duality,
    dc,
    dc_leaves,
    edgeless_value,
    statesum,
    universal_closed,
    universal_recursive,
)

plain = PackagedRibbonGraph.from_plain
EXAMPLE = "x^3*x[1]*y[0]^2 + 2*x^2*x[1]*y[0] + 3*x*y*x[0]*y[0] + x^2*y*x[0]*y[0]^2 + y^2*x[0]*y[1]"


def oracle_statesum(pg):
    """Subset expansion through packagings and induced ribbon subgraphs."""
    total = IntPoly()
    eids = pg.edge_ids
    for mask in range(1 << len(eids)):
        A = [e for i, e in enumerate(eids) if mask >> i & 1]
        rest = [e for e in eids if e not in A]
        powers = {}
        for side, keep, fam, var in ((pg.dual(), rest, "x", X), (pg, A, "y", Y)):
            sub = side.restrict(keep)
            pk = sub.packaging_V
            powers[var] = pk.nullity()
            for blocks, edges in pk.components():
                _, f = sub.induced_subribbon(blocks, edges)
                w = sum(pk.weights[b] for b in blocks)
                g2 = 2 + len(edges) - len(blocks) + w - f
                v = Var(fam, g2)
                powers[v] = powers.get(v, 0) + 1
        total = total + IntPoly.monomial(powers)
    return total


def test_example_polynomial(interlaced_pg):
    assert statesum(interlaced_pg) == IntPoly.parse(EXAMPLE)
    assert dc(interlaced_pg) == IntPoly.parse(EXAMPLE)


def test_small_examples():
    assert str(statesum(plain(fixtures.single_vertex()))) == "x[0]*y[0]"
    bridge = plain(fixtures.bridge())
    assert statesum(bridge) == IntPoly.parse("x*x[0]*y[0]^2 + x[0]*y[0]")
    assert oracle_statesum(bridge) == statesum(bridge)
    assert dc(plain(fixtures.plane_loop())) == IntPoly.parse("x[0]*y[0] + y*x[0]^2*y[0]")


def test_edgeless_base_with_weight():
    m = RibbonMap(((), ()), ())
    pg = PackagedRibbonGraph(m, Partition.singletons([0, 1]), Partition((("v0", "v1"),), (1,)))
    assert edgeless_value(pg) == IntPoly.parse("x[0]*y[0]^2")
    assert statesum(pg) == dc(pg) == edgeless_value(pg)


def test_leaves_of_example(interlaced_pg):
    leaves = dc_leaves(interlaced_pg)
    assert len(leaves) == 8
    assert all(leaf.num_edges == 0 for _, leaf in leaves)
    total = sum((label * edgeless_value(leaf) for label, leaf in leaves), IntPoly())
    assert total == IntPoly.parse(EXAMPLE)


def test_duality_examples(interlaced_pg):
    b, pl = statesum(plain(fixtures.bridge())), statesum(plain(fixtures.plane_loop()))
    assert b.swap_families() == pl
    assert check_duality(interlaced_pg)
    m = RibbonMap(((), (), ()), ())
    assert check_duality(PackagedRibbonGraph(m, Partition(((0, 1), (2,)), (2, 0)), Partition.singletons(m.boundary_ids())))


def test_universal_examples():
    tau, kappa, alpha = (LaurentPoly.var(n) for n in ("tau", "kappa", "alpha"))
    a = lambda i: LaurentPoly.var(Var("a", 2 * i))
    b = lambda i: LaurentPoly.var(Var("b", 2 * i))
    v = plain(fixtures.single_vertex())
    assert universal_recursive(v) == tau * a(-1) * kappa * b(-1)
    assert universal_closed(v) == universal_recursive(v)
    bridge = plain(fixtures.bridge())
    expected = tau * kappa**2 * (alpha * a(-1) * b(-1) ** 2 + a(-1) * b(-1))
    assert universal_recursive(bridge) == expected
    assert universal_closed(bridge) == expected


def test_printed_subscript_map_breaks_the_base_case():
    v = plain(fixtures.single_vertex())
    assert universal_closed(v, subscripts="printed") != universal_recursive(v)
    with pytest.raises(ValueError):
        universal_closed(v, subscripts="other")


def test_parallel_statesum_matches():
    pg = plain(fixtures.random_map(random.Random(5), max_edges=7, min_edges=7))
    assert statesum(pg, workers=2) == statesum(pg)


packaged = st.builds(
    lambda seed: fixtures.random_packaged(random.Random(seed), max_edges=5, max_vertices=4),
    st.integers(0, 10**9),
)


@settings(max_examples=60, deadline=None)
@given(packaged)
def test_statesum_matches_independent_oracle(pg):
    assert statesum(pg) == oracle_statesum(pg)


@settings(max_examples=100, deadline=None)
@given(packaged)
def test_trivial_partitions_give_genus_subscripts(pg):
    pg = plain(pg.map)
    for v in statesum(pg).variables():
        if v.sub2 is not None:
            assert v.sub2 >= 0 and v.sub2 % 2 == 0


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10**9))
def test_plane_maps_only_use_subscript_zero(seed):
    m = fixtures.random_connected_planar(random.Random(seed))
    for v in statesum(plain(m)).variables():
        assert v.sub2 in (None, 0)
