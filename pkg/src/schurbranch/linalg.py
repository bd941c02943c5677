"""Fraction-free (Bareiss) elimination over the integers."""

from __future__ import annotations

from typing import Hashable, Iterable, Mapping, Sequence


def bareiss_echelon(rows: Sequence[Sequence[int]]) -> list[list[int]]:
    """Row echelon form computed with exact integer division.

    Returns only the nonzero rows; they are a basis of the row space of
    ``rows``. Entries stay integral: each step divides by the previous pivot.
    """
    m = [list(r) for r in rows if any(r)]
    if not m:
        return []
    ncols = len(m[0])
    prev = 1
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, len(m)) if m[i][c]), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        p = m[r][c]
        for i in range(r + 1, len(m)):
            a = m[i][c]
            row_i, row_r = m[i], m[r]
            for j in range(c + 1, ncols):
                row_i[j] = (p * row_i[j] - a * row_r[j]) // prev
            row_i[c] = 0
        prev = p
        r += 1
        if r == len(m):
            break
    return m[:r]


def rank(rows: Sequence[Sequence[int]]) -> int:
    return len(bareiss_echelon(rows))


def densify(
    vectors: Iterable[Mapping[Hashable, int]], index: Mapping[Hashable, int] | None = None
) -> tuple[list[list[int]], dict]:
    """Turn sparse dict vectors into dense integer rows over a shared index."""
    vectors = list(vectors)
    if index is None:
        keys = sorted({k for v in vectors for k in v})
        index = {k: i for i, k in enumerate(keys)}
    width = len(index)
    rows = []
    for v in vectors:
        row = [0] * width
        for k, c in v.items():
            row[index[k]] = c
        rows.append(row)
    return rows, dict(index)
