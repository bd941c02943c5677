"""Partitions, Young diagram statistics and the two dimension formulas."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import factorial, prod
from typing import Iterator, Sequence

from .errors import InvalidInput


@dataclass(frozen=True, eq=False, init=False, repr=False)
class Partition:
    """A weakly decreasing sequence of nonnegative integers with a row count.

    Trailing zeros are not stored in ``parts``; ``rows`` remembers how many
    rows were declared (it is at least the number of nonzero parts). Equality
    and hashing look at the nonzero parts only.
    """

    parts: tuple[int, ...]
    rows: int

    def __init__(self, parts: Sequence[int] = (), rows: int | None = None):
        parts = tuple(int(p) for p in parts)
        if any(p < 0 for p in parts):
            raise InvalidInput(f"negative part in {parts}")
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise InvalidInput(f"parts not weakly decreasing: {parts}")
        declared = len(parts)
        nonzero = tuple(p for p in parts if p)
        if rows is None:
            rows = declared
        if rows < len(nonzero):
            raise InvalidInput(
                f"rows={rows} is smaller than the length {len(nonzero)} of {nonzero}"
            )
        object.__setattr__(self, "parts", nonzero)
        object.__setattr__(self, "rows", int(rows))

    def __eq__(self, other):
        if isinstance(other, Partition):
            return self.parts == other.parts
        if isinstance(other, tuple):
            return self.parts == tuple(p for p in other if p)
        return NotImplemented

    def __hash__(self):
        return hash(self.parts)

    def __lt__(self, other: Partition) -> bool:
        # reverse-lexicographic: (3) comes before (2,1)
        return self.parts > other.parts

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __getitem__(self, i: int) -> int:
        if isinstance(i, slice):
            return self.parts[i]
        return self.parts[i] if i < len(self.parts) else 0

    def __repr__(self) -> str:
        if self.rows != len(self.parts):
            return f"Partition({self.parts}, rows={self.rows})"
        return f"Partition({self.parts})"

    def __str__(self) -> str:
        return format_partition(self)

    @property
    def size(self) -> int:
        return sum(self.parts)

    def padded(self, length: int) -> tuple[int, ...]:
        if length < len(self.parts):
            raise InvalidInput(f"cannot pad {self.parts} to {length} entries")
        return self.parts + (0,) * (length - len(self.parts))

    def cells(self) -> Iterator[tuple[int, int]]:
        for i, row in enumerate(self.parts):
            for j in range(row):
                yield i, j


def parse_partition(text: str) -> Partition:
    """Parse ``"a,b,c[:rows]"``; ``""``, ``"0"`` and ``"-"`` are the empty partition.

    Errors carry the 1-based character position of the offending token.
    """
    raw = text.strip()
    rows = None
    body = raw
    if ":" in raw:
        body, _, tail = raw.partition(":")
        pos = len(body) + 2
        if not tail.strip().isdigit():
            raise InvalidInput(f"bad row count {tail!r} at position {pos} in {text!r}")
        rows = int(tail)
    parts: list[int] = []
    if body.strip() not in ("", "-"):
        pos = 1
        for token in body.split(","):
            tok = token.strip()
            if not tok.isdigit():
                raise InvalidInput(f"bad part {token!r} at position {pos} in {text!r}")
            parts.append(int(tok))
            pos += len(token) + 1
    for i in range(len(parts) - 1):
        if parts[i] < parts[i + 1]:
            raise InvalidInput(
                f"part {parts[i + 1]} (entry {i + 2}) exceeds the previous part in {text!r}"
            )
    try:
        return Partition(parts, rows)
    except InvalidInput as exc:
        raise InvalidInput(f"{exc} in {text!r}") from None


def format_partition(p: Partition) -> str:
    body = ",".join(map(str, p.parts)) if p.parts else "0"
    if p.rows != len(p.parts):
        return f"{body}:{p.rows}"
    return body


def conjugate(p: Partition) -> Partition:
    if not p.parts:
        return Partition(())
    return Partition([sum(1 for r in p.parts if r > j) for j in range(p.parts[0])])


def hooks_and_contents(p: Partition) -> list[tuple[tuple[int, int], int, int]]:
    """One ``((i, j), hook, content)`` entry per cell, rows then columns, 0-based."""
    col = conjugate(p).parts
    return [
        ((i, j), (p.parts[i] - j - 1) + (col[j] - i - 1) + 1, j - i)
        for i, j in p.cells()
    ]


def dim_specht(p: Partition) -> int:
    """Number of standard Young tableaux of shape ``p`` (hook length formula)."""
    den = prod(h for _, h, _ in hooks_and_contents(p))
    return factorial(p.size) // den


def dim_weyl(p: Partition, d: int) -> int:
    """Dimension of the GL(d) Weyl module of highest weight ``p``; zero if len(p) > d."""
    if len(p) > d:
        return 0
    data = hooks_and_contents(p)
    num = prod(d + c for _, _, c in data)
    den = prod(h for _, h, _ in data)
    return num // den


def dominates(a: Partition, b: Partition) -> bool:
    if a.size != b.size:
        raise InvalidInput(f"dominance needs equal sizes, got {a.size} and {b.size}")
    sa = sb = 0
    for i in range(max(len(a), len(b))):
        sa += a[i]
        sb += b[i]
        if sa < sb:
            return False
    return True


@lru_cache(maxsize=None)
def _partitions(n: int, max_parts: int, max_part: int) -> tuple[tuple[int, ...], ...]:
    if n == 0:
        return ((),)
    if max_parts == 0:
        return ()
    out = []
    for first in range(min(n, max_part), 0, -1):
        for rest in _partitions(n - first, max_parts - 1, first):
            out.append((first,) + rest)
    return tuple(out)


def enumerate_partitions(n: int, max_parts: int | None = None) -> list[Partition]:
    """All partitions of ``n`` with at most ``max_parts`` parts, reverse-lex order."""
    if max_parts is None:
        max_parts = n
    return [Partition(t) for t in _partitions(n, max_parts, n)]


def iter_compositions(n: int, length: int) -> Iterator[tuple[int, ...]]:
    """Weak compositions of ``n`` into exactly ``length`` parts."""
    if length == 0:
        if n == 0:
            yield ()
        return
    for first in range(n, -1, -1):
        for rest in iter_compositions(n - first, length - 1):
            yield (first,) + rest
