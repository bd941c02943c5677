"""Sparse exact polynomials in several variable sets, Kostka numbers and
Schur-coefficient extraction by the signed alternant rule.

Monomials are stored as flat exponent tuples; ``var_set_sizes`` says how the
flat tuple splits into one exponent vector per variable set.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import permutations, product
from typing import Iterable, Iterator, Mapping, Sequence

from .errors import InvalidInput
from .partitions import Partition

Exponent = tuple[int, ...]


def split_exponent(e: Exponent, sizes: Sequence[int]) -> list[Exponent]:
    out, start = [], 0
    for s in sizes:
        out.append(e[start : start + s])
        start += s
    return out


# ---------------------------------------------------------------------------
# tableaux counting


def horizontal_strips(lam: tuple[int, ...], size: int | None = None) -> Iterator[tuple[int, ...]]:
    """Partitions ``kappa`` inside ``lam`` with ``lam/kappa`` a horizontal strip.

    With ``size`` given only strips of exactly that many cells are produced.
    """
    n = len(lam)

    def rec(i: int, left: int | None) -> Iterator[tuple[int, ...]]:
        if i == n:
            if left is None or left == 0:
                yield ()
            return
        lo = lam[i + 1] if i + 1 < n else 0
        for k in range(lam[i], lo - 1, -1):
            taken = lam[i] - k
            if left is not None and taken > left:
                break
            for rest in rec(i + 1, None if left is None else left - taken):
                yield (k,) + rest

    for kappa in rec(0, size):
        yield tuple(p for p in kappa if p)


@lru_cache(maxsize=None)
def _kostka(shape: tuple[int, ...], weight: tuple[int, ...]) -> int:
    if not weight:
        return 1 if not shape else 0
    if len(shape) > len(weight) - weight.count(0):
        return 0
    *rest, last = weight
    return sum(_kostka(kappa, tuple(rest)) for kappa in horizontal_strips(shape, last))


def kostka(shape: Partition, weight: Sequence[int]) -> int:
    """Number of semistandard tableaux of ``shape`` with content ``weight``.

    Peels off the cells holding the largest letter one horizontal strip at a
    time, i.e. walks the Gelfand-Tsetlin pattern from the bottom row up.
    """
    weight = tuple(int(w) for w in weight)
    if any(w < 0 for w in weight):
        raise InvalidInput(f"negative weight entry in {weight}")
    if sum(weight) != shape.size:
        return 0
    return _kostka(shape.parts, weight)


@dataclass(frozen=True)
class WeightMultiset:
    """Multiset of exponent vectors: ``entries[e]`` copies of the monomial ``x**e``."""

    entries: Mapping[Exponent, int]
    var_set_sizes: tuple[int, ...]

    @property
    def size(self) -> int:
        return sum(self.entries.values())

    def items(self):
        return sorted(self.entries.items(), reverse=True)

    def expanded(self) -> list[Exponent]:
        return [e for e, c in self.items() for _ in range(c)]


@lru_cache(maxsize=None)
def _contents(shape: tuple[int, ...], nvars: int) -> tuple[tuple[Exponent, int], ...]:
    if nvars == 0:
        return (((), 1),) if not shape else ()
    if len(shape) > nvars:
        return ()
    size = sum(shape)
    acc: dict[Exponent, int] = defaultdict(int)
    for kappa in horizontal_strips(shape):
        if len(kappa) > nvars - 1:
            continue
        top = size - sum(kappa)
        for e, c in _contents(kappa, nvars - 1):
            acc[e + (top,)] += c
    return tuple(sorted(acc.items(), reverse=True))


def schur_monomials(p: Partition, L: int) -> WeightMultiset:
    """Monomial expansion of the Schur polynomial ``s_p(x_1..x_L)`` as a multiset."""
    return WeightMultiset(dict(_contents(p.parts, L)), (L,))


# ---------------------------------------------------------------------------
# polynomials


class Window:
    """Down-closed monomial filter: keeps ``e`` when, in every variable set,
    ``e`` is componentwise below one of that set's ceiling vectors.

    Truncating to a window commutes with multiplication of polynomials with
    nonnegative exponents, so products can be truncated factor by factor.
    """

    def __init__(self, ceilings: Sequence[Iterable[Exponent]], var_set_sizes: Sequence[int]):
        self.var_set_sizes = tuple(var_set_sizes)
        self.ceilings = [_maximal(c) for c in ceilings]
        self._below = [_downset(c) for c in self.ceilings]

    def digit_filters(self, base: int) -> list[tuple[int, int, frozenset[int]]]:
        """Per set ``(divisor, modulus, allowed codes)`` for exponents packed as
        base-``base`` integers, digit i holding flat coordinate i."""
        out, offset = [], 0
        for below, size in zip(self._below, self.var_set_sizes):
            codes = frozenset(sum(x * base**i for i, x in enumerate(t)) for t in below)
            out.append((base**offset, base**size, codes))
            offset += size
        return out

    def admits(self, e: Exponent) -> bool:
        start = 0
        for below, size in zip(self._below, self.var_set_sizes):
            if e[start : start + size] not in below:
                return False
            start += size
        return True


def _downset(ceilings: list[Exponent]) -> frozenset[Exponent]:
    out: set[Exponent] = set()
    for t in ceilings:
        out.update(product(*(range(x + 1) for x in t)))
    return frozenset(out)


def _maximal(vectors: Iterable[Exponent]) -> list[Exponent]:
    vs = sorted(set(vectors), key=sum, reverse=True)
    keep: list[Exponent] = []
    for v in vs:
        if not any(all(a <= b for a, b in zip(v, t)) for t in keep):
            keep.append(v)
    return keep


@dataclass
class SymPoly:
    """Sparse polynomial with big-integer coefficients over ``sum(var_set_sizes)`` variables."""

    var_set_sizes: tuple[int, ...]
    terms: dict[Exponent, int] = field(default_factory=dict)

    def __post_init__(self):
        self.var_set_sizes = tuple(self.var_set_sizes)
        width = sum(self.var_set_sizes)
        for e in self.terms:
            if len(e) != width:
                raise InvalidInput(f"monomial {e} does not fit variable sets {self.var_set_sizes}")
        self.terms = {e: c for e, c in self.terms.items() if c}

    @classmethod
    def one(cls, var_set_sizes: Sequence[int]) -> SymPoly:
        return cls(tuple(var_set_sizes), {(0,) * sum(var_set_sizes): 1})

    @classmethod
    def from_multiset(cls, ms: WeightMultiset) -> SymPoly:
        return cls(ms.var_set_sizes, dict(ms.entries))

    def __len__(self) -> int:
        return len(self.terms)

    def __eq__(self, other) -> bool:
        if not isinstance(other, SymPoly):
            return NotImplemented
        return self.var_set_sizes == other.var_set_sizes and self.terms == other.terms

    def __getitem__(self, e: Exponent) -> int:
        return self.terms.get(tuple(e), 0)

    def _check(self, other: SymPoly):
        if self.var_set_sizes != other.var_set_sizes:
            raise InvalidInput(
                f"variable sets differ: {self.var_set_sizes} vs {other.var_set_sizes}"
            )

    def __add__(self, other: SymPoly) -> SymPoly:
        self._check(other)
        acc = dict(self.terms)
        for e, c in other.terms.items():
            acc[e] = acc.get(e, 0) + c
        return SymPoly(self.var_set_sizes, acc)

    def __sub__(self, other: SymPoly) -> SymPoly:
        return self + other.scale(-1)

    def scale(self, c: int) -> SymPoly:
        return SymPoly(self.var_set_sizes, {e: c * v for e, v in self.terms.items()})

    def __mul__(self, other: SymPoly) -> SymPoly:
        return poly_mul(self, other)

    def is_symmetric(self) -> bool:
        """True when the polynomial is invariant under permuting variables inside each set."""
        sizes = self.var_set_sizes
        for e, c in self.terms.items():
            pieces = split_exponent(e, sizes)
            for k, piece in enumerate(pieces):
                for i in range(len(piece) - 1):
                    swapped = list(piece)
                    swapped[i], swapped[i + 1] = swapped[i + 1], swapped[i]
                    f = sum((tuple(swapped) if j == k else pieces[j] for j in range(len(pieces))), ())
                    if self.terms.get(f, 0) != c:
                        return False
        return True

    def degree_by_set(self) -> set[tuple[int, ...]]:
        return {tuple(map(sum, split_exponent(e, self.var_set_sizes))) for e in self.terms}


def poly_mul(a: SymPoly, b: SymPoly, window: Window | None = None) -> SymPoly:
    """Exact product; with ``window`` only monomials the window admits are kept."""
    a._check(b)
    acc: dict[Exponent, int] = defaultdict(int)
    for ea, ca in a.terms.items():
        for eb, cb in b.terms.items():
            e = tuple(x + y for x, y in zip(ea, eb))
            if window is None or window.admits(e):
                acc[e] += ca * cb
    return SymPoly(a.var_set_sizes, dict(acc))


# ---------------------------------------------------------------------------
# Schur coefficient extraction


def _perm_sign(perm: Sequence[int]) -> int:
    sign, seen = 1, [False] * len(perm)
    for i in range(len(perm)):
        if seen[i]:
            continue
        j, length = i, 0
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


@lru_cache(maxsize=None)
def alternant_terms(lam: tuple[int, ...], L: int) -> tuple[tuple[Exponent, int], ...]:
    """Pairs ``(lam + pi - id, sgn(pi))`` over permutations of ``L`` letters,
    dropping vectors with a negative entry; ``lam`` is padded to ``L`` entries."""
    padded = lam + (0,) * (L - len(lam))
    out = []
    for perm in permutations(range(L)):
        e = tuple(padded[i] - i + perm[i] for i in range(L))
        if min(e, default=0) >= 0:
            out.append((e, _perm_sign(perm)))
    return tuple(out)


@lru_cache(maxsize=None)
def sorted_alternant(lam: tuple[int, ...], L: int) -> tuple[tuple[Exponent, int], ...]:
    """``alternant_terms`` folded onto sorted exponents (zero totals dropped);
    reading a symmetric polynomial only at these keys gives the same answer."""
    acc: dict[Exponent, int] = defaultdict(int)
    for e, s in alternant_terms(lam, L):
        acc[tuple(sorted(e, reverse=True))] += s
    return tuple(sorted((e, c) for e, c in acc.items() if c))


def _check_targets(sizes: Sequence[int], targets: Sequence[Partition]):
    if len(targets) != len(sizes):
        raise InvalidInput(f"{len(targets)} target partitions for {len(sizes)} variable sets")
    for lam, L in zip(targets, sizes):
        if len(lam) > L:
            raise InvalidInput(f"target {lam} needs at least {len(lam)} variables, set has {L}")


def extract_schur_coeff(f: SymPoly, targets: Sequence[Partition], symmetric: bool = False) -> int:
    """Coefficient of ``prod_k s_{targets[k]}(x^k)`` in ``f``.

    Multiplies by the Vandermonde of every set and reads the coefficient of
    ``x^(lam + delta)``. The default reads ``f`` at ``lam + pi - id`` for every
    tuple of permutations. ``symmetric=True`` asserts ``f`` is symmetric in
    each set (possibly truncated to a ``Window`` built by ``target_window``)
    and reads it only at sorted exponents.
    """
    sizes = f.var_set_sizes
    _check_targets(sizes, targets)
    table = sorted_alternant if symmetric else alternant_terms
    per_set = [table(lam.parts, L) for lam, L in zip(targets, sizes)]
    total = 0
    for combo in product(*per_set):
        coeff = f.terms.get(sum((e for e, _ in combo), ()), 0)
        if coeff:
            sign = 1
            for _, s in combo:
                sign *= s
            total += sign * coeff
    return total


def target_window(targets: Sequence[Partition], var_set_sizes: Sequence[int]) -> Window:
    """Smallest window that keeps every monomial the symmetric extraction reads."""
    _check_targets(var_set_sizes, targets)
    return Window(
        [[e for e, _ in sorted_alternant(lam.parts, L)] for lam, L in zip(targets, var_set_sizes)],
        var_set_sizes,
    )


def schur_poly(p: Partition, L: int) -> SymPoly:
    return SymPoly.from_multiset(schur_monomials(p, L))
