"""Orientable ribbon graphs encoded as combinatorial maps.

A map is stored as its vertex rotations (one cyclic tuple of half-edges per
vertex, empty for an isolated vertex) together with its edges, each edge a
``(edge_id, tail, head)`` triple.  The edge involution pairs ``tail`` and
``head``; the vertex permutation sends a half-edge to its successor in the
counterclockwise rotation.  Boundary components are the orbits of the face
walk ``h -> sigma(alpha(h))`` plus one component per isolated vertex.

Half-edge ids and edge ids are never renumbered by any operation, so both can
be used as stable references across deletions, contractions and duals.
Vertex indices are positions in ``vertices``; restriction keeps them, the
dual lists the faces in canonical boundary order.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Mapping, NamedTuple, Sequence

from scipy.cluster.hierarchy import DisjointSet

from .errors import MalformedMapError, UnknownEdgeError


class BoundaryComponent(NamedTuple):
    kind: str  # "orbit" or "isolated-vertex"
    members: tuple[int, ...]  # face-walk cycle, or (vertex index,)
    id: str


class CountSummary(NamedTuple):
    v: int
    e: int
    f: int
    k: int
    g: int
    r: int
    n: int


def _rotate_to_min(cycle: Sequence[int]) -> tuple[int, ...]:
    if not cycle:
        return ()
    i = min(range(len(cycle)), key=cycle.__getitem__)
    return tuple(cycle[i:]) + tuple(cycle[:i])


def boundary_sort_key(label: str) -> tuple[int, int]:
    """Order boundary ids: orbit ids ``h<k>`` by k, then ``v<j>`` by j."""
    return (0 if label[0] == "h" else 1, int(label[1:]))


@dataclass(frozen=True)
class RibbonMap:
    vertices: tuple[tuple[int, ...], ...]
    edges: tuple[tuple[int, int, int], ...]

    def __post_init__(self):
        vertices = tuple(_rotate_to_min(tuple(c)) for c in self.vertices)
        edges = tuple(sorted((int(i), int(t), int(h)) for i, t, h in self.edges))
        object.__setattr__(self, "vertices", vertices)
        object.__setattr__(self, "edges", edges)
        self._validate()

    @classmethod
    def from_cycles(
        cls,
        vertices: Iterable[Sequence[int]],
        edges: Sequence[Sequence[int]] | Mapping[int, Sequence[int]],
    ) -> RibbonMap:
        """Build a map from rotation cycles and ``[tail, head]`` pairs.

        ``edges`` may be a sequence (edge ids are then the positions) or a
        mapping from edge id to ``(tail, head)``.
        """
        if isinstance(edges, Mapping):
            triples = [(i, t, h) for i, (t, h) in edges.items()]
        else:
            triples = [(i, t, h) for i, (t, h) in enumerate(edges)]
        return cls(tuple(tuple(c) for c in vertices), tuple(triples))

    def _validate(self):
        seen_edge = {}
        ids = set()
        for i, t, h in self.edges:
            if i in ids:
                raise MalformedMapError(f"duplicate edge id {i}")
            ids.add(i)
            if t == h:
                raise MalformedMapError(f"edge {i} pairs half-edge {t} with itself")
            for x in (t, h):
                if x in seen_edge:
                    raise MalformedMapError(f"half-edge {x} lies on edges {seen_edge[x]} and {i}")
                seen_edge[x] = i
        seen_vertex = {}
        for j, cycle in enumerate(self.vertices):
            for x in cycle:
                if x in seen_vertex:
                    raise MalformedMapError(f"half-edge {x} appears at vertices {seen_vertex[x]} and {j}")
                seen_vertex[x] = j
        if seen_edge.keys() != seen_vertex.keys():
            missing = sorted(seen_edge.keys() ^ seen_vertex.keys())
            raise MalformedMapError(f"half-edges {missing} are not on both an edge and a vertex")

    # -- lookups -----------------------------------------------------------

    @cached_property
    def half_edges(self) -> tuple[int, ...]:
        return tuple(sorted(h for _, t, hd in self.edges for h in (t, hd)))

    @cached_property
    def alpha(self) -> dict[int, int]:
        a = {}
        for _, t, h in self.edges:
            a[t] = h
            a[h] = t
        return a

    @cached_property
    def sigma(self) -> dict[int, int]:
        s = {}
        for cycle in self.vertices:
            for i, h in enumerate(cycle):
                s[h] = cycle[(i + 1) % len(cycle)]
        return s

    @cached_property
    def vertex_of(self) -> dict[int, int]:
        return {h: j for j, cycle in enumerate(self.vertices) for h in cycle}

    @cached_property
    def edge_of(self) -> dict[int, int]:
        return {h: i for i, t, hd in self.edges for h in (t, hd)}

    @cached_property
    def edge_ids(self) -> tuple[int, ...]:
        return tuple(i for i, _, _ in self.edges)

    @cached_property
    def _edge_table(self) -> dict[int, tuple[int, int]]:
        return {i: (t, h) for i, t, h in self.edges}

    def edge(self, eid: int) -> tuple[int, int]:
        """Return ``(tail, head)`` of edge ``eid``."""
        try:
            return self._edge_table[eid]
        except KeyError:
            raise UnknownEdgeError(f"unknown edge id {eid!r}") from None

    def endpoints(self, eid: int) -> tuple[int, int]:
        t, h = self.edge(eid)
        return self.vertex_of[t], self.vertex_of[h]

    def is_loop(self, eid: int) -> bool:
        u, v = self.endpoints(eid)
        return u == v

    @property
    def num_vertices(self) -> int:
        return len(self.vertices)

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    @property
    def isolated_vertices(self) -> int:
        return sum(1 for c in self.vertices if not c)

    def face_walk(self, h: int) -> int:
        return self.sigma[self.alpha[h]]

    # -- boundary and counts -----------------------------------------------

    @cached_property
    def _boundary(self) -> tuple[BoundaryComponent, ...]:
        seen = set()
        orbits = []
        for start in self.half_edges:
            if start in seen:
                continue
            orbit = []
            h = start
            while h not in seen:
                seen.add(h)
                orbit.append(h)
                h = self.face_walk(h)
            orbits.append(BoundaryComponent("orbit", tuple(orbit), f"h{start}"))
        for j, cycle in enumerate(self.vertices):
            if not cycle:
                orbits.append(BoundaryComponent("isolated-vertex", (j,), f"v{j}"))
        return tuple(orbits)

    def boundary_components(self) -> tuple[BoundaryComponent, ...]:
        """All boundary components in canonical order (orbits by minimal
        half-edge, then isolated vertices by index)."""
        return self._boundary

    @cached_property
    def boundary_of(self) -> dict[int, str]:
        """Map each half-edge to the id of the face orbit it starts."""
        return {h: b.id for b in self._boundary if b.kind == "orbit" for h in b.members}

    def boundary_ids(self) -> tuple[str, ...]:
        return tuple(b.id for b in self._boundary)

    def boundary_vertex(self, b: BoundaryComponent) -> int:
        """A vertex touched by boundary component ``b``."""
        if b.kind == "orbit":
            return self.vertex_of[b.members[0]]
        return b.members[0]

    @cached_property
    def _components(self) -> tuple[tuple[tuple[int, ...], tuple[int, ...]], ...]:
        ds = DisjointSet(range(self.num_vertices))
        for i in self.edge_ids:
            u, v = self.endpoints(i)
            ds.merge(u, v)
        groups = {}
        for j in range(self.num_vertices):
            groups.setdefault(ds[j], ([], []))[0].append(j)
        for i in self.edge_ids:
            groups[ds[self.endpoints(i)[0]]][1].append(i)
        comps = sorted((tuple(vs), tuple(es)) for vs, es in groups.values())
        return tuple(comps)

    def components(self) -> tuple[tuple[tuple[int, ...], tuple[int, ...]], ...]:
        """Connected components as ``(vertex indices, edge ids)`` pairs,
        ordered by smallest vertex index."""
        return self._components

    def counts(self) -> CountSummary:
        v = self.num_vertices
        e = self.num_edges
        f = len(self._boundary)
        k = len(self._components)
        twice_g = 2 * k - f + e - v
        if twice_g < 0 or twice_g % 2:
            raise MalformedMapError(f"Euler characteristic gives 2g = {twice_g}")
        r = v - k
        return CountSummary(v, e, f, k, twice_g // 2, r, e - r)

    # -- surgery -------------------------------------------------------------

    def restrict(self, keep: Iterable[int]) -> RibbonMap:
        """Spanning ribbon subgraph on the edge ids in ``keep``."""
        keep = set(keep)
        known = set(self.edge_ids)
        if not keep <= known:
            raise UnknownEdgeError(f"unknown edge ids {sorted(keep - known)}")
        if keep == known:
            return self
        edges = tuple(e for e in self.edges if e[0] in keep)
        live = {h for _, t, hd in edges for h in (t, hd)}
        vertices = tuple(tuple(h for h in c if h in live) for c in self.vertices)
        return RibbonMap(vertices, edges)

    def delete_edge(self, eid: int) -> RibbonMap:
        self.edge(eid)
        return self.restrict(i for i in self.edge_ids if i != eid)

    def without_vertices(self, drop: Iterable[int]) -> RibbonMap:
        """Remove isolated vertices (indices of the remaining ones shift)."""
        drop = set(drop)
        for j in drop:
            if self.vertices[j]:
                raise MalformedMapError(f"vertex {j} is not isolated")
        return RibbonMap(tuple(c for j, c in enumerate(self.vertices) if j not in drop), self.edges)

    def dual_with_correspondence(self) -> tuple[RibbonMap, dict[str, int], dict[int, str]]:
        """The geometric dual plus the two natural correspondences.

        Returns ``(dual, face_to_vertex, vertex_to_face)`` where
        ``face_to_vertex`` sends a boundary id of this map to the dual vertex
        index capping it, and ``vertex_to_face`` sends a vertex index of this
        map to the boundary id it becomes in the dual.
        """
        bcs = self._boundary
        cycles = []
        face_to_vertex = {}
        for j, b in enumerate(bcs):
            face_to_vertex[b.id] = j
            cycles.append(b.members if b.kind == "orbit" else ())
        dual = RibbonMap(tuple(cycles), self.edges)
        vertex_to_face = {}
        for j, cycle in enumerate(self.vertices):
            if cycle:
                # the face walk of the dual is sigma, so vertex cycles become faces
                vertex_to_face[j] = f"h{min(cycle)}"
        iso_dual = [face_to_vertex[b.id] for b in bcs if b.kind == "isolated-vertex"]
        iso_here = [j for j, c in enumerate(self.vertices) if not c]
        for j, jd in zip(iso_here, iso_dual):
            vertex_to_face[j] = f"v{jd}"
        return dual, face_to_vertex, vertex_to_face

    def dual(self) -> RibbonMap:
        return self.dual_with_correspondence()[0]

    def normalized(self) -> tuple[RibbonMap, list[int]]:
        """Reorder vertices: non-isolated by minimal half-edge, then isolated
        vertices in their current relative order.

        Returns the reordered map and ``new_index`` with
        ``new_index[old] = new``.
        """
        order = sorted(
            range(self.num_vertices),
            key=lambda j: (0, min(self.vertices[j])) if self.vertices[j] else (1, j),
        )
        new_index = [0] * self.num_vertices
        for new, old in enumerate(order):
            new_index[old] = new
        return RibbonMap(tuple(self.vertices[j] for j in order), self.edges), new_index

    def is_dense(self) -> bool:
        return self.half_edges == tuple(range(len(self.half_edges)))

    def relabeled(self) -> tuple[RibbonMap, dict[int, int]]:
        """Renumber half-edges densely (in increasing order) and edge ids in
        order; returns the new map and the half-edge relabelling."""
        hmap = {h: i for i, h in enumerate(self.half_edges)}
        edges = tuple((n, hmap[t], hmap[h]) for n, (_, t, h) in enumerate(self.edges))
        vertices = tuple(tuple(hmap[h] for h in c) for c in self.vertices)
        return RibbonMap(vertices, edges), hmap

    def flip_edge(self, eid: int) -> RibbonMap:
        """Swap tail and head of one edge (the rotation is untouched)."""
        t, h = self.edge(eid)
        edges = tuple((i, h, t) if i == eid else (i, a, b) for i, a, b in self.edges)
        return RibbonMap(self.vertices, edges)
