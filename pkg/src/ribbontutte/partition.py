"""Weighted set partitions, stored in a canonical sorted form."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Hashable, Iterable, Sequence

from .errors import PartitionError


def element_key(x) -> tuple:
    # vertex indices sort numerically, boundary ids as "h<k>" < "v<j>"
    if isinstance(x, int):
        return (0, x, 0)
    if isinstance(x, str) and len(x) > 1 and x[1:].lstrip("-").isdigit():
        return (1, x[0], int(x[1:]))
    return (2, str(x), 0)


@dataclass(frozen=True)
class Partition:
    blocks: tuple[tuple[Hashable, ...], ...]
    weights: tuple[int, ...]

    def __post_init__(self):
        blocks = [tuple(sorted(b, key=element_key)) for b in self.blocks]
        weights = list(self.weights)
        if len(blocks) != len(weights):
            raise PartitionError(f"{len(blocks)} blocks but {len(weights)} weights")
        for w in weights:
            if isinstance(w, bool) or not isinstance(w, int) or w < 0:
                raise PartitionError(f"weight {w!r} is not a nonnegative integer")
        seen = set()
        for b in blocks:
            if not b:
                raise PartitionError("empty block")
            for x in b:
                if x in seen:
                    raise PartitionError(f"element {x!r} lies in two blocks")
                seen.add(x)
        order = sorted(range(len(blocks)), key=lambda i: element_key(blocks[i][0]))
        object.__setattr__(self, "blocks", tuple(blocks[i] for i in order))
        object.__setattr__(self, "weights", tuple(weights[i] for i in order))

    @classmethod
    def singletons(cls, elements: Iterable[Hashable]) -> Partition:
        elements = list(elements)
        return cls(tuple((x,) for x in elements), (0,) * len(elements))

    @classmethod
    def from_labels(cls, labels: dict, weights: dict | None = None) -> Partition:
        """Group elements by label; ``weights`` maps label to weight."""
        groups = {}
        for x, lab in labels.items():
            groups.setdefault(lab, []).append(x)
        labs = list(groups)
        return cls(
            tuple(tuple(groups[lab]) for lab in labs),
            tuple((weights or {}).get(lab, 0) for lab in labs),
        )

    @cached_property
    def index(self) -> dict[Hashable, int]:
        return {x: i for i, b in enumerate(self.blocks) for x in b}

    def block_of(self, x) -> int:
        return self.index[x]

    @property
    def elements(self) -> frozenset:
        return frozenset(self.index)

    def __len__(self) -> int:
        return len(self.blocks)

    @property
    def total_weight(self) -> int:
        return sum(self.weights)

    def is_trivial(self) -> bool:
        """All blocks singletons with weight zero."""
        return all(len(b) == 1 for b in self.blocks) and not any(self.weights)

    def check_covers(self, universe: Iterable[Hashable], what: str = "partition"):
        universe = set(universe)
        have = set(self.index)
        if have != universe:
            extra = sorted(have - universe, key=element_key)
            missing = sorted(universe - have, key=element_key)
            raise PartitionError(f"{what} does not cover its universe (extra {extra}, missing {missing})")

    def relabel(self, mapping) -> Partition:
        """Apply an element relabelling (dict or callable)."""
        f = mapping.__getitem__ if isinstance(mapping, dict) else mapping
        return Partition(tuple(tuple(f(x) for x in b) for b in self.blocks), self.weights)

    def zero_weighted(self) -> Partition:
        return Partition(self.blocks, (0,) * len(self.blocks))

    def shape(self) -> list[tuple[int, int]]:
        """Sorted multiset of ``(block size, weight)`` pairs."""
        return sorted((len(b), w) for b, w in zip(self.blocks, self.weights))

    def replace_blocks(self, remove: Sequence[int], block: Sequence[Hashable], weight: int) -> Partition:
        """Drop the blocks at indices ``remove`` and add ``block``."""
        drop = set(remove)
        blocks = [b for i, b in enumerate(self.blocks) if i not in drop]
        weights = [w for i, w in enumerate(self.weights) if i not in drop]
        return Partition(tuple(blocks) + (tuple(block),), tuple(weights) + (weight,))
