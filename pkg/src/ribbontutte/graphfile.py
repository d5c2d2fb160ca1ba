"""JSON file format for packaged ribbon graphs.

Example (the interlaced fixture with explicit trivial partitions)::

    {
      "num_half_edges": 6,
      "edges": [[0, 1], [2, 3], [4, 5]],
      "vertices": [[0, 2], [1, 4, 3, 5]],
      "vertex_partition": {"blocks": [[0], [1]], "weights": [0, 0]},
      "boundary_partition": {"blocks": [["h0"]], "weights": [0]}
    }

``edges`` lists ``[tail, head]`` pairs; edge ids are list positions unless an
``edge_ids`` list is given.  Missing partitions default to singletons with
weight zero.  Boundary ids are the canonical ``h<k>`` / ``v<j>`` labels
printed by ``ribbontutte show``.
"""

from __future__ import annotations

import json
from importlib import resources

from .errors import GraphFileError, PartitionError, UnknownBoundaryError
from .packaged import PackagedRibbonGraph
from .partition import Partition
from .ribbon import RibbonMap

KEYS = ("num_half_edges", "edges", "edge_ids", "vertices", "vertex_partition", "boundary_partition")


def _int(x, what):
    if isinstance(x, bool) or not isinstance(x, int):
        raise GraphFileError(f"{what} must be an integer, got {x!r}")
    return x


def _partition(doc, universe, what, boundary=False) -> Partition:
    if doc is None:
        return Partition.singletons(universe)
    if not isinstance(doc, dict) or "blocks" not in doc:
        raise GraphFileError(f"{what} needs a 'blocks' list")
    blocks = doc["blocks"]
    weights = doc.get("weights", [0] * len(blocks))
    if not isinstance(blocks, list) or not isinstance(weights, list):
        raise GraphFileError(f"{what} blocks and weights must be lists")
    known = set(universe)
    for b in blocks:
        if not isinstance(b, list):
            raise GraphFileError(f"{what} block {b!r} is not a list")
        for x in b:
            if x not in known:
                if boundary:
                    raise UnknownBoundaryError(f"unknown boundary id {x!r} (known: {', '.join(universe)})")
                raise PartitionError(f"{what} mentions unknown vertex {x!r}")
    part = Partition(tuple(tuple(b) for b in blocks), tuple(weights))
    part.check_covers(universe, what)
    return part


def from_dict(doc: dict) -> PackagedRibbonGraph:
    if not isinstance(doc, dict):
        raise GraphFileError("graph file must hold a JSON object")
    unknown = set(doc) - set(KEYS)
    if unknown:
        raise GraphFileError(f"unknown keys {sorted(unknown)}")
    for key in ("num_half_edges", "edges", "vertices"):
        if key not in doc:
            raise GraphFileError(f"missing key {key!r}")
    n = _int(doc["num_half_edges"], "num_half_edges")
    edges, vertices = doc["edges"], doc["vertices"]
    if not isinstance(edges, list) or any(not isinstance(p, list) or len(p) != 2 for p in edges):
        raise GraphFileError("edges must be a list of [tail, head] pairs")
    if not isinstance(vertices, list) or any(not isinstance(c, list) for c in vertices):
        raise GraphFileError("vertices must be a list of rotation cycles")
    ids = doc.get("edge_ids", list(range(len(edges))))
    if not isinstance(ids, list) or len(ids) != len(edges):
        raise GraphFileError("edge_ids must have one entry per edge")
    on_edges, on_vertices = {}, {}
    for p in edges:
        for h in p:
            _int(h, "half-edge")
            on_edges[h] = on_edges.get(h, 0) + 1
    for c in vertices:
        for h in c:
            _int(h, "half-edge")
            on_vertices[h] = on_vertices.get(h, 0) + 1
    universe = set(range(n))
    for where, seen in (("edges", on_edges), ("vertices", on_vertices)):
        dup = sorted(h for h, k in seen.items() if k > 1)
        if dup:
            raise GraphFileError(f"half-edges {dup} appear more than once in {where}")
        missing = sorted(universe - set(seen))
        if missing:
            raise GraphFileError(f"half-edges {missing} missing from {where}")
        extra = sorted(set(seen) - universe)
        if extra:
            raise GraphFileError(f"half-edges {extra} out of range 0..{n - 1} in {where}")
    rmap = RibbonMap(tuple(tuple(c) for c in vertices), tuple((_int(i, "edge id"), t, h) for i, (t, h) in zip(ids, edges)))
    vpart = _partition(doc.get("vertex_partition"), list(range(rmap.num_vertices)), "vertex partition")
    fpart = _partition(doc.get("boundary_partition"), list(rmap.boundary_ids()), "boundary partition", boundary=True)
    return PackagedRibbonGraph(rmap, vpart, fpart)


def parse(text: str) -> PackagedRibbonGraph:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise GraphFileError(f"not valid JSON: {exc}") from None
    return from_dict(doc)


def load(path) -> PackagedRibbonGraph:
    try:
        with open(path) as fh:
            return parse(fh.read())
    except OSError as exc:
        raise GraphFileError(f"cannot read {path}: {exc}") from None


def to_dict(pg: PackagedRibbonGraph) -> dict:
    """Canonical document; half-edges are renumbered densely if needed."""
    m = pg.map
    fpart = pg.fpart
    if not m.is_dense():
        m2, hmap = m.relabeled()
        ids = [i for i, _, _ in m.edges]
        fpart = fpart.relabel(lambda b: f"h{hmap[int(b[1:])]}" if b[0] == "h" else b)
        m = type(m)(m2.vertices, tuple((i, t, h) for i, (_, t, h) in zip(ids, m2.edges)))
    doc = {
        "num_half_edges": len(m.half_edges),
        "edges": [[t, h] for _, t, h in m.edges],
    }
    ids = [i for i, _, _ in m.edges]
    if ids != list(range(len(ids))):
        doc["edge_ids"] = ids
    doc["vertices"] = [list(c) for c in m.vertices]
    doc["vertex_partition"] = {"blocks": [list(b) for b in pg.vpart.blocks], "weights": list(pg.vpart.weights)}
    doc["boundary_partition"] = {"blocks": [list(b) for b in fpart.blocks], "weights": list(fpart.weights)}
    return doc


def emit(pg: PackagedRibbonGraph) -> str:
    doc = to_dict(pg)
    lines = [f"  {json.dumps(k)}: {json.dumps(v)}" for k, v in doc.items()]
    return "{\n" + ",\n".join(lines) + "\n}\n"


def bundled_names() -> list[str]:
    files = resources.files("ribbontutte") / "data"
    return sorted(p.name[:-5] for p in files.iterdir() if p.name.endswith(".json"))


def bundled(name: str) -> PackagedRibbonGraph:
    path = resources.files("ribbontutte") / "data" / f"{name}.json"
    if not path.is_file():
        raise GraphFileError(f"no bundled fixture {name!r} (have {', '.join(bundled_names())})")
    return parse(path.read_text())
