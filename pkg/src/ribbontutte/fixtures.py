"""Small named ribbon graphs and random generators used by tests and
``verify``."""

from __future__ import annotations

import random

from .packaged import PackagedRibbonGraph
from .partition import Partition
from .ribbon import RibbonMap


def single_vertex() -> RibbonMap:
    return RibbonMap.from_cycles([()], [])


def bridge() -> RibbonMap:
    return RibbonMap.from_cycles([(0,), (1,)], [(0, 1)])


def plane_loop() -> RibbonMap:
    return RibbonMap.from_cycles([(0, 1)], [(0, 1)])


def interlaced() -> RibbonMap:
    """A 2-cycle u-v (edges 0, 1) interlaced with a loop at v (edge 2)."""
    return RibbonMap.from_cycles([(0, 2), (1, 4, 3, 5)], [(0, 1), (2, 3), (4, 5)])


def double_loop() -> RibbonMap:
    """Two interlaced loops at one vertex: a one-face torus."""
    return RibbonMap.from_cycles([(0, 2, 1, 3)], [(0, 1), (2, 3)])


def plane_double_loop() -> RibbonMap:
    return RibbonMap.from_cycles([(0, 1, 2, 3)], [(0, 1), (2, 3)])


def two_loops() -> RibbonMap:
    """Two disjoint plane loops."""
    return RibbonMap.from_cycles([(0, 1), (2, 3)], [(0, 1), (2, 3)])


def bridge_and_vertex() -> RibbonMap:
    return RibbonMap.from_cycles([(0,), (1,), ()], [(0, 1)])


def triangle() -> RibbonMap:
    return RibbonMap.from_cycles([(0, 5), (1, 2), (3, 4)], [(0, 1), (2, 3), (4, 5)])


BUNDLED = {
    "vertex": single_vertex,
    "bridge": bridge,
    "loop": plane_loop,
    "interlaced": interlaced,
    "double-loop": double_loop,
    "plane-double-loop": plane_double_loop,
    "two-loops": two_loops,
    "bridge-vertex": bridge_and_vertex,
    "triangle": triangle,
}


def random_map(rng: random.Random, max_edges: int = 6, max_vertices: int = 4, min_edges: int = 0) -> RibbonMap:
    """Uniformly scatter half-edges over vertices, random rotations and
    random pairing.  May be disconnected and have isolated vertices."""
    e = rng.randint(min_edges, max_edges)
    v = rng.randint(1, max_vertices)
    halves = list(range(2 * e))
    rng.shuffle(halves)
    cycles = [[] for _ in range(v)]
    for h in halves:
        cycles[rng.randrange(v)].append(h)
    pairing = list(range(2 * e))
    rng.shuffle(pairing)
    edges = [(pairing[2 * i], pairing[2 * i + 1]) for i in range(e)]
    return RibbonMap.from_cycles(cycles, edges)


def random_partition(rng: random.Random, elements, max_weight: int = 2) -> Partition:
    elements = list(elements)
    if not elements:
        return Partition((), ())
    nblocks = rng.randint(1, len(elements))
    labels = {x: rng.randrange(nblocks) for x in elements}
    weights = {lab: rng.randint(0, max_weight) for lab in set(labels.values())}
    return Partition.from_labels(labels, weights)


def random_packaged(rng: random.Random, max_edges: int = 6, max_vertices: int = 4, max_weight: int = 2) -> PackagedRibbonGraph:
    m = random_map(rng, max_edges, max_vertices)
    return PackagedRibbonGraph(
        m,
        random_partition(rng, range(m.num_vertices), max_weight),
        random_partition(rng, m.boundary_ids(), max_weight),
    )


def random_connected_planar(rng: random.Random, max_edges: int = 5, max_vertices: int = 4) -> RibbonMap:
    """Rejection-sample a connected genus-0 map."""
    while True:
        m = random_map(rng, max_edges, max_vertices)
        c = m.counts()
        if c.k == 1 and c.g == 0:
            return m
