"""Symmetric group characters via the Murnaghan-Nakayama rule."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial, prod

from .errors import ConsistencyError, InvalidInput
from .partitions import Partition, enumerate_partitions


def z_of(alpha: Partition) -> int:
    """Centralizer order ``prod_i i**m_i * m_i!`` of the class with cycle type ``alpha``."""
    return prod(i**m * factorial(m) for i, m in Counter(alpha.parts).items())


def class_size(alpha: Partition) -> int:
    return factorial(alpha.size) // z_of(alpha)


def sign_of(alpha: Partition) -> int:
    return -1 if (alpha.size - len(alpha)) % 2 else 1


@lru_cache(maxsize=None)
def _mn(shape: tuple[int, ...], cycles: tuple[int, ...]) -> int:
    if not cycles:
        return 1 if not shape else 0
    r, rest = cycles[0], cycles[1:]
    n = len(shape)
    # beta-set (first-column hook lengths) of the shape
    beta = [shape[i] + n - 1 - i for i in range(n)]
    present = set(beta)
    total = 0
    for b in beta:
        target = b - r
        if target < 0 or target in present:
            continue
        # each bead jumped over is one row of the strip beyond the first
        height = sum(1 for c in beta if target < c < b)
        new_beta = sorted((c if c != b else target for c in beta), reverse=True)
        new_shape = tuple(
            p for p in (new_beta[i] - (n - 1 - i) for i in range(n)) if p
        )
        value = _mn(new_shape, rest)
        total += -value if height % 2 else value
    return total


def character(lam: Partition, alpha: Partition) -> int:
    """Value of the irreducible character indexed by ``lam`` on the class ``alpha``."""
    if lam.size != alpha.size:
        raise InvalidInput(
            f"character needs |lambda| = |alpha|, got {lam.size} and {alpha.size}"
        )
    return _mn(lam.parts, tuple(sorted(alpha.parts, reverse=True)))


@dataclass(frozen=True)
class CharacterTable:
    n: int
    rows: tuple[Partition, ...]
    columns: tuple[Partition, ...]
    values: tuple[tuple[int, ...], ...]

    def __getitem__(self, key: tuple[Partition, Partition]) -> int:
        lam, alpha = key
        return self.values[self.rows.index(lam)][self.columns.index(alpha)]

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "rows": [str(p) for p in self.rows],
            "columns": [str(p) for p in self.columns],
            "values": [list(r) for r in self.values],
        }


def character_table(n: int) -> CharacterTable:
    parts = tuple(enumerate_partitions(n))
    values = tuple(tuple(character(lam, alpha) for alpha in parts) for lam in parts)
    return CharacterTable(n, parts, parts, values)


def _exact_count(total: Fraction, what: str) -> int:
    if total.denominator != 1 or total < 0:
        raise ConsistencyError(f"character sum for {what} gave {total}")
    return int(total)


def kronecker_character(lam1: Partition, lam2: Partition, mu: Partition) -> int:
    """g = sum over classes of chi^lam1 chi^lam2 chi^mu / z."""
    n = mu.size
    if lam1.size != n or lam2.size != n:
        return 0
    total = sum(
        Fraction(character(lam1, a) * character(lam2, a) * character(mu, a), z_of(a))
        for a in enumerate_partitions(n)
    )
    return _exact_count(total, f"g({lam1}, {lam2}, {mu})")


def lr_character(lam: Partition, mu: Partition, nu: Partition) -> int:
    """c^lam_{mu,nu} from power-sum expansions of s_mu and s_nu."""
    if lam.size != mu.size + nu.size:
        return 0
    total = Fraction(0)
    for a in enumerate_partitions(mu.size):
        ca = character(mu, a)
        if not ca:
            continue
        for b in enumerate_partitions(nu.size):
            cb = character(nu, b)
            if cb:
                joined = Partition(sorted(a.parts + b.parts, reverse=True))
                total += Fraction(ca * cb * character(lam, joined), z_of(a) * z_of(b))
    return _exact_count(total, f"c^{lam}_{mu},{nu}")
