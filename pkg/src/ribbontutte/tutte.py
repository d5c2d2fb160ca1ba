"""The packaged surface Tutte polynomial.

Two independent evaluations are provided: the subset expansion
(:func:`statesum`) and the deletion-contraction recursion (:func:`dc`), plus
the universal invariant built on the same recursion.

All genus subscripts are handled doubled.  For a component ``K`` of a
packaging the doubled genus is ``2 + e(K) - v(K) + w(K) - f(G[K])``; it can
be negative or odd once partitions carry nontrivial blocks.
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from typing import Callable, Iterable, NamedTuple, Sequence

from scipy.cluster.hierarchy import DisjointSet

from .packaged import PackagedRibbonGraph
from .partition import Partition
from .poly import X, Y, IntPoly, LaurentPoly, Var, xg, yg
from .ribbon import RibbonMap


class GenusTerm(NamedTuple):
    k: int
    e: int
    v: int
    omega: int
    f: int

    @property
    def g2(self) -> int:
        """Doubled genus ``2k + e - v + omega - f``."""
        return 2 * self.k + self.e - self.v + self.omega - self.f

    @property
    def g(self):
        from fractions import Fraction

        return Fraction(self.g2, 2)


def packaging_terms(rmap: RibbonMap, part: Partition, keep: Iterable[int]) -> tuple[int, list[GenusTerm]]:
    """Nullity and per-component genus data of the packaging of ``rmap|keep``.

    ``part`` partitions the vertices of ``rmap``.  Each boundary component of
    the restriction is charged to the block of the vertex it runs around.
    """
    keep = set(keep)
    sub = rmap.restrict(keep)
    nb = len(part)
    ds = DisjointSet(range(nb))
    block = part.index
    ends = []
    for eid in keep:
        u, v = rmap.endpoints(eid)
        bu, bv = block[u], block[v]
        ds.merge(bu, bv)
        ends.append(bu)
    data = {}
    for b in range(nb):
        d = data.setdefault(ds[b], [0, 0, 0, 0])  # e, v, omega, f
        d[1] += 1
        d[2] += part.weights[b]
    for bu in ends:
        data[ds[bu]][0] += 1
    for bc in sub.boundary_components():
        data[ds[block[sub.boundary_vertex(bc)]]][3] += 1
    terms = [GenusTerm(1, e, v, w, f) for e, v, w, f in data.values()]
    nullity = sum(t.e - t.v + 1 for t in terms)
    return nullity, terms


def _subset(edge_ids: Sequence[int], mask: int) -> list[int]:
    return [eid for i, eid in enumerate(edge_ids) if mask >> i & 1]


def subset_monomial(pg: PackagedRibbonGraph, A: Iterable[int], dual: PackagedRibbonGraph | None = None) -> IntPoly:
    """The contribution of one edge subset ``A`` to the state sum."""
    A = set(A)
    dual = dual or pg.dual()
    rest = [e for e in pg.edge_ids if e not in A]
    nx, hs = packaging_terms(dual.map, dual.vpart, rest)
    ny, ks = packaging_terms(pg.map, pg.vpart, A)
    powers = {}
    if nx:
        powers[X] = nx
    if ny:
        powers[Y] = ny
    for t in hs:
        v = xg(t.g2)
        powers[v] = powers.get(v, 0) + 1
    for t in ks:
        v = yg(t.g2)
        powers[v] = powers.get(v, 0) + 1
    return IntPoly.monomial(powers)


def _statesum_range(args) -> dict:
    pg, lo, hi = args
    dual = pg.dual()
    eids = pg.edge_ids
    total = {}
    for mask in range(lo, hi):
        mono = next(iter(subset_monomial(pg, _subset(eids, mask), dual).terms()))
        total[mono] = total.get(mono, 0) + 1
    return total


def statesum(pg: PackagedRibbonGraph, workers: int | None = None) -> IntPoly:
    """Sum over all ``2^e`` edge subsets.

    With ``workers > 1`` the subset range is cut into contiguous chunks and
    evaluated in separate processes.
    """
    n = 1 << pg.num_edges
    if not workers or workers <= 1 or n < 64:
        return IntPoly(_statesum_range((pg, 0, n)))
    workers = min(workers, os.cpu_count() or 1)
    step = -(-n // (4 * workers))
    chunks = [(pg, lo, min(lo + step, n)) for lo in range(0, n, step)]
    total = IntPoly()
    with ProcessPoolExecutor(max_workers=workers) as ex:
        for part in ex.map(_statesum_range, chunks):
            total = total + IntPoly(part)
    return total


def edgeless_value(pg: PackagedRibbonGraph) -> IntPoly:
    """Base case: ``prod x[1-|f|+w] * prod y[1-|v|+w]`` (doubled subscripts)."""
    if pg.num_edges:
        raise ValueError("edgeless_value needs a graph without edges")
    powers = {}
    for b, w in zip(pg.fpart.blocks, pg.fpart.weights):
        v = xg(1 - len(b) + w)
        powers[v] = powers.get(v, 0) + 1
    for b, w in zip(pg.vpart.blocks, pg.vpart.weights):
        v = yg(1 - len(b) + w)
        powers[v] = powers.get(v, 0) + 1
    return IntPoly.monomial(powers)


def _pick(pg: PackagedRibbonGraph, order: Sequence[int] | None) -> int:
    if order is not None:
        present = set(pg.edge_ids)
        for e in order:
            if e in present:
                return e
    return pg.edge_ids[0]


def dc_leaves(pg: PackagedRibbonGraph, order: Sequence[int] | None = None) -> list[tuple[IntPoly, PackagedRibbonGraph]]:
    """Leaves of the recursion tree as ``(arrow-label product, edgeless graph)``.

    ``order`` is an optional pivot preference; by default the lowest edge
    id is taken at every step.
    """
    out = []
    stack = [(IntPoly.const(1), pg)]
    while stack:
        label, g = stack.pop()
        if not g.num_edges:
            out.append((label, g))
            continue
        e = _pick(g, order)
        dx = IntPoly.monomial({X: 2 - g.eta(e)})
        dy = IntPoly.monomial({Y: 2 - g.mu(e)})
        # push contraction first so deletion branches come out first
        stack.append((label * dy, g.contract(e)))
        stack.append((label * dx, g.delete(e)))
    return out


def dc(pg: PackagedRibbonGraph, order: Sequence[int] | None = None) -> IntPoly:
    """Deletion-contraction: ``T = x^(2-eta) T(G-e) + y^(2-mu) T(G/e)``."""
    total = IntPoly()
    for label, leaf in dc_leaves(pg, order):
        total = total + label * edgeless_value(leaf)
    return total


def check_duality(pg: PackagedRibbonGraph) -> bool:
    """``T(G; x, y) == T(G*; y, x)``."""
    return statesum(pg) == statesum(pg.dual()).swap_families()


# -- universality ----------------------------------------------------------------

DEFAULT_PARAMS = ("alpha", "beta", "kappa", "tau")


def _family(name: str) -> Callable[[int], LaurentPoly]:
    return lambda i: LaurentPoly.var(Var(name, 2 * i))


def _params(alpha, beta, kappa, tau):
    vals = []
    for given, name in zip((alpha, beta, kappa, tau), DEFAULT_PARAMS):
        vals.append(LaurentPoly.var(name) if given is None else LaurentPoly.const(given) if not isinstance(given, LaurentPoly) else given)
    return vals


def universal_recursive(pg: PackagedRibbonGraph, alpha=None, beta=None, kappa=None, tau=None, a=None, b=None) -> LaurentPoly:
    """The universal invariant by its defining recursion.

    The coefficient of the deleted branch is ``alpha`` when ``eta = 1`` and
    ``tau`` when ``eta = 2``; the contracted branch takes ``beta`` or
    ``kappa`` according to ``mu``.  Edgeless graphs evaluate to
    ``prod tau*a[w-|f|] * prod kappa*b[w-|v|]``.  ``a`` and ``b`` map an
    integer index to a value; by default they produce variables ``a[i]``,
    ``b[i]``.
    """
    alpha, beta, kappa, tau = _params(alpha, beta, kappa, tau)
    a = a or _family("a")
    b = b or _family("b")

    def go(g):
        if not g.num_edges:
            val = LaurentPoly.const(1)
            for blk, w in zip(g.fpart.blocks, g.fpart.weights):
                val = val * tau * a(w - len(blk))
            for blk, w in zip(g.vpart.blocks, g.vpart.weights):
                val = val * kappa * b(w - len(blk))
            return val
        e = g.edge_ids[0]
        cd = alpha if g.eta(e) == 1 else tau
        cc = beta if g.mu(e) == 1 else kappa
        return cd * go(g.delete(e)) + cc * go(g.contract(e))

    return go(pg)


def universal_closed(
    pg: PackagedRibbonGraph, alpha=None, beta=None, kappa=None, tau=None, a=None, b=None, subscripts: str = "corrected", T: IntPoly | None = None
) -> LaurentPoly:
    """``tau^|F| kappa^|V| T`` under ``x -> alpha``, ``y -> beta`` and a
    subscript map for the families.

    ``subscripts="corrected"`` sends ``x[i] -> a[2i-1]``, ``y[i] -> b[2i-1]``,
    which reproduces the edgeless values of the recursion.  ``"printed"``
    sends ``x[i] -> a[2(1-i)]``; it is kept only to show that it does not.
    """
    alpha, beta, kappa, tau = _params(alpha, beta, kappa, tau)
    a = a or _family("a")
    b = b or _family("b")
    if subscripts == "corrected":

        def index(s2):
            return s2 - 1

    elif subscripts == "printed":

        def index(s2):
            return 2 - s2

    else:
        raise ValueError(f"unknown subscript map {subscripts!r}")

    def sub(v: Var):
        if v == X:
            return alpha
        if v == Y:
            return beta
        if v.sub2 is not None and v.name in ("x", "y"):
            return (a if v.name == "x" else b)(index(v.sub2))
        return None

    T = statesum(pg) if T is None else T
    return tau ** len(pg.fpart) * kappa ** len(pg.vpart) * T.substitute(sub)
