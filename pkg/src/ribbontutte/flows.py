"""Counting local flows (vertex side, ``q``) and local tensions (boundary
side, ``p``) over a finite group.

Routes, all exact:

* ``q1``/``p1``: closed formula for all (not necessarily nowhere-identity)
  flows, from representation dimensions;
* ``*_incexc``: inclusion-exclusion over edge subsets;
* ``*_dc``: the deletion-contraction recursion;
* ``*_via_T``: evaluation of the packaged polynomial;
* ``brute_force_*``: enumeration with a Cayley table (plain maps only).
"""

from __future__ import annotations

import itertools
import os
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction

from .errors import BudgetExceededError, GroupError
from .groups import GroupSpec
from .packaged import PackagedRibbonGraph
from .poly import X, Y, IntPoly, Var
from .ribbon import RibbonMap
from .tutte import statesum

DEFAULT_BUDGET = 10**7


def _power_sum(group: GroupSpec, exponent: int) -> Fraction:
    return sum(Fraction(n) ** exponent for n in group.irrep_dims)


def _result(val, trivial: bool, what: str):
    """Exact value; an ``int`` whenever it is integral.

    With a trivial partition on the side being counted the value is a
    genuine count, so a fraction there means a bug.  Nontrivial blocks give
    rational values in general (an edgeless block of two vertices already
    gives ``sum n^3 / |G|``).
    """
    val = Fraction(val)
    if val.denominator == 1:
        return int(val)
    if trivial:
        raise AssertionError(f"{what} gave the non-integer {val}")
    return val


# -- closed formula ------------------------------------------------------------


def q1(pg: PackagedRibbonGraph, group: GroupSpec) -> Fraction:
    """``prod_K |G|^(e(K)-v(K)) sum_k n_k^(f(G[K])-e(K)+v(K)-w(K))`` over the
    components ``K`` of the vertex packaging.  Reads only the vertex side."""
    total = Fraction(1)
    pk = pg.packaging_V
    for blocks, edges in pk.components():
        _, f = pg.induced_subribbon(blocks, edges)
        e, v = len(edges), len(blocks)
        w = sum(pk.weights[b] for b in blocks)
        total *= Fraction(group.order) ** (e - v) * _power_sum(group, f - e + v - w)
    return total


def p1(pg: PackagedRibbonGraph, group: GroupSpec) -> Fraction:
    return q1(pg.dual(), group)


# -- inclusion-exclusion -------------------------------------------------------


def _subsets(eids):
    for mask in range(1 << len(eids)):
        yield mask, [e for i, e in enumerate(eids) if mask >> i & 1]


def q_incexc(pg: PackagedRibbonGraph, group: GroupSpec) -> int | Fraction:
    eids = pg.edge_ids
    total = Fraction(0)
    for _, A in _subsets(eids):
        sign = -1 if (len(eids) - len(A)) % 2 else 1
        total += sign * q1(pg.restrict(A), group)
    return _result(total, pg.vpart.is_trivial(), "q inclusion-exclusion")


def p_incexc(pg: PackagedRibbonGraph, group: GroupSpec) -> int | Fraction:
    eids = pg.edge_ids
    total = Fraction(0)
    for _, A in _subsets(eids):
        rest = [e for e in eids if e not in A]
        sign = -1 if len(rest) % 2 else 1
        total += sign * p1(pg.contract_all(rest), group)
    return _result(total, pg.fpart.is_trivial(), "p inclusion-exclusion")


# -- deletion-contraction ------------------------------------------------------


def _edgeless(part, group: GroupSpec) -> Fraction:
    val = Fraction(1)
    for blk, w in zip(part.blocks, part.weights):
        val *= _power_sum(group, 1 + len(blk) - w) / group.order
    return val


def q_dc(pg: PackagedRibbonGraph, group: GroupSpec) -> int | Fraction:
    """``q = |G|^(2-mu) q(G/e) - q(G-e)`` on the lowest edge."""

    def go(g):
        if not g.num_edges:
            return _edgeless(g.vpart, group)
        e = g.edge_ids[0]
        return Fraction(group.order) ** (2 - g.mu(e)) * go(g.contract(e)) - go(g.delete(e))

    return _result(go(pg), pg.vpart.is_trivial(), "q deletion-contraction")


def p_dc(pg: PackagedRibbonGraph, group: GroupSpec) -> int | Fraction:
    """``p = |G|^(2-eta) p(G-e) - p(G/e)`` on the lowest edge."""

    def go(g):
        if not g.num_edges:
            return _edgeless(g.fpart, group)
        e = g.edge_ids[0]
        return Fraction(group.order) ** (2 - g.eta(e)) * go(g.delete(e)) - go(g.contract(e))

    return _result(go(pg), pg.fpart.is_trivial(), "p deletion-contraction")


# -- polynomial evaluation -------------------------------------------------------


def flow_point(group: GroupSpec, side: str = "q"):
    """The evaluation point of the packaged polynomial for ``side``."""
    order = group.order

    def family(v: Var):
        # doubled subscript s: n^(2-2g) = n^(2-s)
        return -_power_sum(group, 2 - v.sub2) / order

    def point(v: Var):
        if v == X:
            return 1 if side == "q" else -order
        if v == Y:
            return -order if side == "q" else 1
        if v.name == ("y" if side == "q" else "x"):
            return family(v)
        return 1

    return point


def q_via_T(pg: PackagedRibbonGraph, group: GroupSpec, T: IntPoly | None = None) -> int | Fraction:
    T = statesum(pg) if T is None else T
    sign = -1 if (pg.num_edges - len(pg.vpart)) % 2 else 1
    return _result(sign * T.evaluate(flow_point(group, "q")), pg.vpart.is_trivial(), "q from the polynomial")


def p_via_T(pg: PackagedRibbonGraph, group: GroupSpec, T: IntPoly | None = None) -> int | Fraction:
    T = statesum(pg) if T is None else T
    sign = -1 if (pg.num_edges - len(pg.fpart)) % 2 else 1
    return _result(sign * T.evaluate(flow_point(group, "p")), pg.fpart.is_trivial(), "p from the polynomial")


# -- brute force -------------------------------------------------------------------


def _vertex_words(rmap: RibbonMap):
    """Per vertex, the rotation as ``(edge position, +1 head / -1 tail)``."""
    pos = {eid: i for i, eid in enumerate(rmap.edge_ids)}
    heads = {h for _, _, h in rmap.edges}
    words = []
    for cycle in rmap.vertices:
        if cycle:
            words.append(tuple((pos[rmap.edge_of[h]], 1 if h in heads else -1) for h in cycle))
    return words


def _count_range(args) -> int:
    words, table, inv, order, e, first_values = args
    nonid = range(1, order)
    count = 0
    for first in first_values:
        for rest in itertools.product(nonid, repeat=e - 1):
            gamma = (first,) + rest
            ok = True
            for word in words:
                acc = 0
                for i, s in word:
                    g = gamma[i]
                    acc = table[acc][g if s > 0 else inv[g]]
                if acc:
                    ok = False
                    break
            if ok:
                count += 1
    return count


def brute_force_q(rmap: RibbonMap, group: GroupSpec, budget: int = DEFAULT_BUDGET, workers: int | None = None) -> int:
    """Count nowhere-identity local flows by enumeration.

    At each vertex the labels are multiplied in rotation order, raised to
    +1 on the head half-edge and -1 on the tail; the product must be the
    identity.  Isolated vertices impose nothing.
    """
    if not group.has_table:
        raise GroupError(f"brute force needs a Cayley table for {group}")
    e = rmap.num_edges
    if (group.order - 1) ** e > budget:
        raise BudgetExceededError(f"{group.order - 1}^{e} assignments exceed the budget of {budget}")
    if e == 0:
        return 1
    if group.order == 1:
        return 0
    words = _vertex_words(rmap)
    table, inv = group.cayley, group.inverses
    values = list(range(1, group.order))
    if not workers or workers <= 1 or len(values) < 2:
        return _count_range((words, table, inv, group.order, e, values))
    workers = min(workers, len(values), os.cpu_count() or 1)
    chunks = [values[i::workers] for i in range(workers)]
    with ProcessPoolExecutor(max_workers=workers) as ex:
        return sum(ex.map(_count_range, [(words, table, inv, group.order, e, c) for c in chunks]))


def brute_force_p(rmap: RibbonMap, group: GroupSpec, budget: int = DEFAULT_BUDGET, workers: int | None = None) -> int:
    """Tensions counted as flows of the dual."""
    return brute_force_q(rmap.dual(), group, budget, workers)


ROUTES = {
    "q": {"formula": q1, "incexc": q_incexc, "dc": q_dc, "viaT": q_via_T},
    "p": {"formula": p1, "incexc": p_incexc, "dc": p_dc, "viaT": p_via_T},
}
