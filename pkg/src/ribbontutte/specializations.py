"""Specialisations of the packaged polynomial.

Each polynomial here has a direct subset-sum implementation straight from
its definition, and (where applicable) a route through :func:`statesum`, so
the two can be compared.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

from scipy.cluster.hierarchy import DisjointSet

from .packaged import Packaging, PackagedRibbonGraph
from .partition import Partition
from .poly import X, Y, IntPoly, LaurentPoly, Var, xg, yg
from .ribbon import RibbonMap
from .tutte import statesum


def _subsets(edge_ids: Sequence[int]):
    for mask in range(1 << len(edge_ids)):
        yield [e for i, e in enumerate(edge_ids) if mask >> i & 1]


# -- classical Tutte polynomial --------------------------------------------------


def underlying_graph(rmap: RibbonMap) -> Packaging:
    """The abstract multigraph of a map (singleton blocks, zero weights)."""
    return PackagedRibbonGraph.from_plain(rmap).packaging_V


def _graph_rank(num_vertices: int, edges, keep=None) -> int:
    ds = DisjointSet(range(num_vertices))
    r = 0
    for i, u, v in edges:
        if keep is not None and i not in keep:
            continue
        if ds.merge(u, v):
            r += 1
    return r


def classical_tutte(graph: Packaging) -> IntPoly:
    """``sum_A (x-1)^(r(E)-r(A)) (y-1)^(|A|-r(A))`` for a multigraph."""
    xm1 = IntPoly.var(X) - 1
    ym1 = IntPoly.var(Y) - 1
    eids = [i for i, _, _ in graph.edges]
    rE = _graph_rank(graph.num_vertices, graph.edges)
    total = IntPoly()
    for A in _subsets(eids):
        rA = _graph_rank(graph.num_vertices, graph.edges, set(A))
        total = total + xm1 ** (rE - rA) * ym1 ** (len(A) - rA)
    return total


# -- surface Tutte polynomial ------------------------------------------------------


def component_genera2(rmap: RibbonMap) -> list[int]:
    """Doubled genus of each connected component of a map."""
    out = []
    owner = {}
    comps = rmap.components()
    for i, (verts, _) in enumerate(comps):
        for v in verts:
            owner[v] = i
    faces = [0] * len(comps)
    for bc in rmap.boundary_components():
        faces[owner[rmap.boundary_vertex(bc)]] += 1
    for (verts, edges), f in zip(comps, faces):
        out.append(2 - f + len(edges) - len(verts))
    return out


def _nullity(rmap: RibbonMap) -> int:
    return rmap.num_edges - rmap.num_vertices + len(rmap.components())


def surface_tutte(rmap: RibbonMap) -> IntPoly:
    """Surface Tutte polynomial through the packaged polynomial."""
    return statesum(PackagedRibbonGraph.from_plain(rmap))


def surface_tutte_direct(rmap: RibbonMap) -> IntPoly:
    """Surface Tutte polynomial from plain ribbon subgraphs only.

    The x-side runs over components of the dual restricted to ``A^c``; those
    are the duals of the components of the contraction by ``A`` and carry
    the same genera.
    """
    dual = rmap.dual()
    total = IntPoly()
    for A in _subsets(rmap.edge_ids):
        keep = set(A)
        sub = rmap.restrict(keep)
        dsub = dual.restrict(e for e in rmap.edge_ids if e not in keep)
        powers = {X: _nullity(dsub), Y: _nullity(sub)}
        for g2 in component_genera2(dsub):
            powers[xg(g2)] = powers.get(xg(g2), 0) + 1
        for g2 in component_genera2(sub):
            powers[yg(g2)] = powers.get(yg(g2), 0) + 1
        total = total + IntPoly.monomial(powers)
    return total


# -- pseudo-surface Tutte polynomial ---------------------------------------------


def _packaging_rank(rmap: RibbonMap, part: Partition, keep: Iterable[int]) -> int:
    edges = [(e, part.block_of(u), part.block_of(v)) for e in keep for u, v in [rmap.endpoints(e)]]
    return _graph_rank(len(part), edges)


def _ribbon_rank_plus_genus(rmap: RibbonMap) -> int:
    c = rmap.counts()
    return c.r + c.g


def rank_profile(rmap: RibbonMap, vpart: Partition, fpart: Partition, A: Iterable[int]) -> tuple[int, int, int, int]:
    """``(r1(A), r2(A), r3(A), r4(A))`` of the pseudo-surface polynomial."""
    A = set(A)
    dual, face_to_vertex, _ = rmap.dual_with_correspondence()
    dpart = fpart.relabel(face_to_vertex)
    rest = [e for e in rmap.edge_ids if e not in A]
    sub = rmap.restrict(A)
    r1 = _packaging_rank(rmap, vpart, A)
    rg = _ribbon_rank_plus_genus(sub)
    r2 = rg - r1
    rF = _packaging_rank(dual, dpart, rmap.edge_ids)
    rFc = _packaging_rank(dual, dpart, rest)
    r3 = rF - rFc
    r4 = len(A) + rFc - rF - rg
    return r1, r2, r3, r4


def tps_direct(rmap: RibbonMap, vpart: Partition, fpart: Partition, names: Sequence[str] = ("w", "x", "y", "z")) -> LaurentPoly:
    """Pseudo-surface Tutte polynomial by its subset expansion."""
    vpart.check_covers(range(rmap.num_vertices), "vertex partition")
    fpart.check_covers(rmap.boundary_ids(), "boundary partition")
    vs = [Var(n) for n in names]
    E = list(rmap.edge_ids)
    r1E, r2E, _, _ = rank_profile(rmap, vpart, fpart, E)
    terms = {}
    for A in _subsets(E):
        r1, r2, r3, r4 = rank_profile(rmap, vpart, fpart, A)
        mono = tuple((v, 2 * e) for v, e in zip(vs, (r1E - r1, r2E - r2, r3, r4)))
        terms[mono] = terms.get(mono, 0) + 1
    return LaurentPoly(terms)


def tps_substitution(names: Sequence[str] = ("a", "b", "c", "d")):
    """``x, y -> 1``, ``x[g] -> c d^-g``, ``y[g] -> a b^-g``."""
    a, b, c, d = (Var(n) for n in names)

    def sub(v: Var):
        if v.sub2 is None:
            return 1 if v.name in ("x", "y") else None
        if v.name == "x":
            return LaurentPoly({((c, 2), (d, -v.sub2)): 1})
        if v.name == "y":
            return LaurentPoly({((a, 2), (b, -v.sub2)): 1})
        return None

    return sub


def tps_prefactor(pg: PackagedRibbonGraph, which: str = "corrected", names: Sequence[str] = ("a", "b", "c", "d")) -> LaurentPoly:
    """Prefactor turning the substituted packaged polynomial into ``T_ps``.

    ``"corrected"`` gives
    ``a^-kV * b^(kV + (|E|-|V|-f)/2) * c^-kF * d^(kF + (|E|-|F|-v)/2)``,
    obtained by matching exponents subset by subset.  ``"printed"`` is the
    form ``(ab)^kV * b^((|E|-|V|-f)/2) * c^-kF * d^((|E|-|F|+v)/2)``, which is
    wrong already on a single bridge.
    """
    a, b, c, d = (Var(n) for n in names)
    kV = len(pg.packaging_V.components())
    kF = len(pg.packaging_F.components())
    E = pg.num_edges
    nV, nF = len(pg.vpart), len(pg.fpart)
    f = len(pg.map.boundary_components())
    v = pg.map.num_vertices
    if which == "corrected":
        # doubled exponents
        exps = {a: -2 * kV, b: 2 * kV + (E - nV - f), c: -2 * kF, d: 2 * kF + (E - nF - v)}
    elif which == "printed":
        exps = {a: 2 * kV, b: 2 * kV + (E - nV - f), c: -2 * kF, d: E - nF + v}
    else:
        raise ValueError(f"unknown prefactor {which!r}")
    return LaurentPoly({tuple(exps.items()): 1})


def tps_via_T(pg: PackagedRibbonGraph, which: str = "corrected", names: Sequence[str] = ("a", "b", "c", "d"), T: IntPoly | None = None) -> LaurentPoly:
    """Pseudo-surface polynomial recovered from the packaged polynomial.

    The weights of ``pg`` are ignored (the specialisation is defined for
    zero weights).
    """
    pg = pg.with_zero_weights()
    T = statesum(pg) if T is None else T
    return tps_prefactor(pg, which, names) * T.substitute(tps_substitution(names))


def evaluate_at(p, point: dict) -> Fraction | LaurentPoly:
    """Substitute the given names; keep the rest symbolic."""

    def sub(v: Var):
        key = str(v)
        if key in point:
            return point[key]
        return LaurentPoly.var(v)

    val = p.substitute(sub)
    return Fraction(val.constant()) if val.is_constant() else val
