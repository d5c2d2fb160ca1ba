"""Finite groups as needed by the flow counts: the order, the dimensions of
the irreducible representations and, for brute force, a Cayley table."""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from pathlib import Path

from .errors import GroupError


@dataclass(frozen=True)
class GroupSpec:
    order: int
    irrep_dims: tuple[int, ...]
    cayley: tuple[tuple[int, ...], ...] | None = None
    name: str = ""
    full_check: bool = field(default=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "irrep_dims", tuple(self.irrep_dims))
        if not isinstance(self.order, int) or self.order < 1:
            raise GroupError(f"group order must be a positive integer, got {self.order!r}")
        if not self.irrep_dims or any(not isinstance(n, int) or n < 1 for n in self.irrep_dims):
            raise GroupError(f"bad representation dimensions {self.irrep_dims}")
        if sum(n * n for n in self.irrep_dims) != self.order:
            raise GroupError(
                f"squares of the representation dimensions {list(self.irrep_dims)} sum to "
                f"{sum(n * n for n in self.irrep_dims)}, not the group order {self.order}"
            )
        if self.cayley is not None:
            table = tuple(tuple(row) for row in self.cayley)
            object.__setattr__(self, "cayley", table)
            _check_table(table, self.order, self.full_check)

    @property
    def has_table(self) -> bool:
        return self.cayley is not None

    def mul(self, a: int, b: int) -> int:
        return self.cayley[a][b]

    @property
    def inverses(self) -> tuple[int, ...]:
        t = self.cayley
        return tuple(next(b for b in range(self.order) if t[a][b] == 0) for a in range(self.order))

    def is_abelian(self) -> bool:
        if self.cayley is None:
            return all(n == 1 for n in self.irrep_dims)
        t = self.cayley
        return all(t[a][b] == t[b][a] for a in range(self.order) for b in range(a))

    def __str__(self):
        return self.name or f"group of order {self.order}"


def _check_table(t, n: int, full: bool):
    if len(t) != n or any(len(row) != n for row in t):
        raise GroupError(f"Cayley table must be {n}x{n}")
    for row in t:
        for x in row:
            if isinstance(x, bool) or not isinstance(x, int) or not 0 <= x < n:
                raise GroupError(f"table entry {x!r} is not an element 0..{n - 1}")
    for a in range(n):
        if t[0][a] != a or t[a][0] != a:
            raise GroupError("element 0 is not a two-sided identity")
        row = t[a]
        if 0 not in row:
            raise GroupError(f"element {a} has no inverse")
        b = row.index(0)
        if t[b][a] != 0:
            raise GroupError(f"element {a} has no two-sided inverse")
    if full:
        triples = ((a, b, c) for a in range(n) for b in range(n) for c in range(n))
    else:
        rng = random.Random(0)
        triples = ((rng.randrange(n), rng.randrange(n), rng.randrange(n)) for _ in range(min(500, n**3)))
    for a, b, c in triples:
        if t[t[a][b]][c] != t[a][t[b][c]]:
            raise GroupError(f"table is not associative at ({a}, {b}, {c})")


def cyclic(n: int) -> GroupSpec:
    if n < 1:
        raise GroupError("cyclic group needs n >= 1")
    table = tuple(tuple((i + j) % n for j in range(n)) for i in range(n))
    return GroupSpec(n, (1,) * n, table, name=f"cyclic:{n}")


def dihedral(n: int) -> GroupSpec:
    """Symmetries of the regular n-gon, order 2n.

    Element ``i + n*j`` stands for ``r^i s^j``.
    """
    if n < 1:
        raise GroupError("dihedral group needs n >= 1")
    if n % 2:
        dims = (1, 1) + (2,) * ((n - 1) // 2)
    else:
        dims = (1, 1, 1, 1) + (2,) * (n // 2 - 1)

    def mul(x, y):
        a, b = x % n, x // n
        c, d = y % n, y // n
        return (a + (c if b == 0 else -c)) % n + n * ((b + d) % 2)

    table = tuple(tuple(mul(x, y) for y in range(2 * n)) for x in range(2 * n))
    return GroupSpec(2 * n, dims, table, name=f"dihedral:{n}")


def parse_cayley(text: str, name: str = "") -> GroupSpec:
    """Text format: ``n``, then n rows of n entries, optionally ``dims: ...``.

    Without a ``dims`` line the group must be abelian (all dimensions one).
    """
    lines = [ln.strip() for ln in text.splitlines() if ln.strip() and not ln.strip().startswith("#")]
    if not lines:
        raise GroupError("empty Cayley table file")
    try:
        n = int(lines[0])
    except ValueError:
        raise GroupError(f"first line must be the group order, got {lines[0]!r}") from None
    rows = lines[1 : n + 1]
    if len(rows) != n:
        raise GroupError(f"expected {n} table rows, found {len(rows)}")
    try:
        table = tuple(tuple(int(x) for x in row.split()) for row in rows)
    except ValueError as exc:
        raise GroupError(f"non-integer table entry: {exc}") from None
    dims = None
    for extra in lines[n + 1 :]:
        if extra.startswith("dims:"):
            try:
                dims = tuple(int(x) for x in extra[5:].split())
            except ValueError:
                raise GroupError(f"bad dims line {extra!r}") from None
        else:
            raise GroupError(f"unexpected line {extra!r}")
    if dims is None:
        _check_table(table, n, False)
        if not all(table[a][b] == table[b][a] for a in range(n) for b in range(a)):
            raise GroupError("non-abelian table needs a 'dims:' line")
        dims = (1,) * n
    return GroupSpec(n, dims, table, name=name)


def builtin_group(name: str) -> GroupSpec:
    """``cyclic:N``, ``dihedral:N`` (order 2N) or ``table:PATH``."""
    kind, _, arg = name.partition(":")
    if kind in ("cyclic", "dihedral"):
        try:
            n = int(arg)
        except ValueError:
            raise GroupError(f"bad group size in {name!r}") from None
        return cyclic(n) if kind == "cyclic" else dihedral(n)
    if kind == "table":
        try:
            text = Path(arg).read_text()
        except OSError as exc:
            raise GroupError(f"cannot read {arg}: {exc}") from None
        return parse_cayley(text, name=name)
    raise GroupError(f"unknown group {name!r} (use cyclic:N, dihedral:N or table:PATH)")
