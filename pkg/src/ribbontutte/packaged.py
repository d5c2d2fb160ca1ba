"""Packaged ribbon graphs: a ribbon graph with weighted partitions of its
vertices and of its boundary components, and the surgeries on them."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable

from scipy.cluster.hierarchy import DisjointSet

from .errors import MalformedMapError, NotASubgraphError
from .partition import Partition
from .ribbon import RibbonMap


@dataclass(frozen=True)
class Packaging:
    """Vertex-weighted multigraph with one vertex per partition block.

    ``edges`` holds ``(edge id, block u, block v)``; loops and parallel
    edges are kept.
    """

    num_vertices: int
    edges: tuple[tuple[int, int, int], ...]
    weights: tuple[int, ...]

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    def components(self, edge_ids: Iterable[int] | None = None) -> list[tuple[tuple[int, ...], tuple[int, ...]]]:
        """Components of the spanning subgraph on ``edge_ids`` (default all)."""
        keep = None if edge_ids is None else set(edge_ids)
        ds = DisjointSet(range(self.num_vertices))
        chosen = [e for e in self.edges if keep is None or e[0] in keep]
        for _, u, v in chosen:
            ds.merge(u, v)
        groups = {}
        for b in range(self.num_vertices):
            groups.setdefault(ds[b], ([], []))[0].append(b)
        for i, u, _ in chosen:
            groups[ds[u]][1].append(i)
        return sorted((tuple(bs), tuple(es)) for bs, es in groups.values())

    def nullity(self, edge_ids: Iterable[int] | None = None) -> int:
        keep = None if edge_ids is None else set(edge_ids)
        e = sum(1 for i, _, _ in self.edges if keep is None or i in keep)
        k = len(self.components(keep))
        return e - (self.num_vertices - k)


@dataclass(frozen=True)
class PackagedRibbonGraph:
    map: RibbonMap
    vpart: Partition
    fpart: Partition

    def __post_init__(self):
        self.vpart.check_covers(range(self.map.num_vertices), "vertex partition")
        self.fpart.check_covers(self.map.boundary_ids(), "boundary partition")

    @classmethod
    def from_plain(cls, rmap: RibbonMap) -> PackagedRibbonGraph:
        """Singleton blocks everywhere, all weights zero."""
        return cls(
            rmap,
            Partition.singletons(range(rmap.num_vertices)),
            Partition.singletons(rmap.boundary_ids()),
        )

    @property
    def edge_ids(self) -> tuple[int, ...]:
        return self.map.edge_ids

    @property
    def num_edges(self) -> int:
        return self.map.num_edges

    @cached_property
    def _boundary_by_id(self):
        return {b.id: b for b in self.map.boundary_components()}

    def is_plain(self) -> bool:
        return self.vpart.is_trivial() and self.fpart.is_trivial()

    # -- edge classification ---------------------------------------------------

    def eta(self, eid: int) -> int:
        """Number of boundary blocks met by edge ``eid`` (1 or 2)."""
        t, h = self.map.edge(eid)
        bt, bh = self.map.boundary_of[t], self.map.boundary_of[h]
        return len({self.fpart.block_of(bt), self.fpart.block_of(bh)})

    def mu(self, eid: int) -> int:
        """Number of vertex blocks met by edge ``eid`` (1 or 2)."""
        u, v = self.map.endpoints(eid)
        return len({self.vpart.block_of(u), self.vpart.block_of(v)})

    # -- surgery -----------------------------------------------------------------

    def delete(self, eid: int) -> PackagedRibbonGraph:
        m = self.map
        t, h = m.edge(eid)
        bt, bh = m.boundary_of[t], m.boundary_of[h]
        new_map = m.delete_edge(eid)

        touched = set(self._boundary_by_id[bt].members) | set(self._boundary_by_id[bh].members)
        touched -= {t, h}
        newly_isolated = {j for j, c in enumerate(new_map.vertices) if not c and m.vertices[j]}
        created = [
            b.id
            for b in new_map.boundary_components()
            if (b.kind == "orbit" and b.members[0] in touched)
            or (b.kind == "isolated-vertex" and b.members[0] in newly_isolated)
        ]

        fp = self.fpart
        it, ih = fp.block_of(bt), fp.block_of(bh)
        if bt == bh:
            # one boundary met twice: it splits in two
            expected, remove, weight = 2, [it], fp.weights[it] + 1
        elif it == ih:
            expected, remove, weight = 1, [it], fp.weights[it] + 1
        else:
            expected, remove, weight = 1, [it, ih], fp.weights[it] + fp.weights[ih]
        if len(created) != expected:
            raise MalformedMapError(
                f"deleting edge {eid} produced {len(created)} boundary components, expected {expected}"
            )
        kept = [x for i in remove for x in fp.blocks[i] if x not in (bt, bh)]
        fpart = fp.replace_blocks(remove, kept + created, weight)
        return PackagedRibbonGraph(new_map, self.vpart, fpart)

    def dual(self) -> PackagedRibbonGraph:
        d, face_to_vertex, vertex_to_face = self.map.dual_with_correspondence()
        return PackagedRibbonGraph(d, self.fpart.relabel(face_to_vertex), self.vpart.relabel(vertex_to_face))

    def contract(self, eid: int) -> PackagedRibbonGraph:
        # contraction in the primal is deletion in the dual
        return self.dual().delete(eid).dual()

    def delete_all(self, eids: Iterable[int]) -> PackagedRibbonGraph:
        pg = self
        for e in sorted(eids):
            pg = pg.delete(e)
        return pg

    def contract_all(self, eids: Iterable[int]) -> PackagedRibbonGraph:
        pg = self
        for e in sorted(eids):
            pg = pg.contract(e)
        return pg

    def restrict(self, keep: Iterable[int]) -> PackagedRibbonGraph:
        """Plain spanning restriction for vertex-side work.

        The vertex partition is kept verbatim; the boundary partition is
        reset to singletons since restriction does not define one.
        """
        sub = self.map.restrict(keep)
        return PackagedRibbonGraph(sub, self.vpart, Partition.singletons(sub.boundary_ids()))

    def with_zero_weights(self) -> PackagedRibbonGraph:
        return PackagedRibbonGraph(self.map, self.vpart.zero_weighted(), self.fpart.zero_weighted())

    def normalized(self) -> PackagedRibbonGraph:
        """Same packaged graph with vertices in canonical order."""
        m, new_index = self.map.normalized()

        def face(label):
            return f"v{new_index[int(label[1:])]}" if label[0] == "v" else label

        return PackagedRibbonGraph(m, self.vpart.relabel(new_index.__getitem__), self.fpart.relabel(face))

    def shape(self):
        """Isomorphism-blind summary: counts and block size/weight multisets."""
        return (self.map.counts(), self.vpart.shape(), self.fpart.shape())

    # -- packagings ----------------------------------------------------------------

    @cached_property
    def packaging_V(self) -> Packaging:
        vp = self.vpart
        edges = tuple((i, vp.block_of(u), vp.block_of(v)) for i in self.edge_ids for u, v in [self.map.endpoints(i)])
        return Packaging(len(vp), edges, vp.weights)

    @cached_property
    def packaging_F(self) -> Packaging:
        return self.dual().packaging_V

    def induced_subribbon(self, blocks: Iterable[int], edges: Iterable[int], dual_side: bool = False):
        """Ribbon subgraph behind a subgraph of a packaging.

        ``blocks`` are vertex indices of the packaging (block indices) and
        ``edges`` edge ids.  With ``dual_side`` the packaging is that of the
        dual over the boundary partition.  Returns ``(submap, f)``.
        """
        pg = self.dual() if dual_side else self
        blocks, edges = set(blocks), set(edges)
        pk = pg.packaging_V
        if not blocks <= set(range(pk.num_vertices)):
            raise NotASubgraphError(f"unknown packaging vertices {sorted(blocks - set(range(pk.num_vertices)))}")
        ends = {i: (u, v) for i, u, v in pk.edges}
        for i in edges:
            if i not in ends:
                raise NotASubgraphError(f"unknown edge id {i}")
            if not set(ends[i]) <= blocks:
                raise NotASubgraphError(f"edge {i} leaves the chosen blocks")
        inside = {x for b in blocks for x in pg.vpart.blocks[b]}
        sub = pg.map.restrict(edges)
        sub = sub.without_vertices(j for j in range(sub.num_vertices) if j not in inside)
        return sub, len(sub.boundary_components())
