"""Plethysm coefficients a^lam_{mu,nu} by two unrelated routes.

``plethysm_specialized`` evaluates s_mu[s_nu] in len(lam) variables and reads
the answer off with the alternant; ``plethysm_character`` sums symmetric
group character values with exact fractions.
"""

from __future__ import annotations

from collections import Counter, defaultdict
from fractions import Fraction
from functools import lru_cache
from itertools import product
from math import comb, factorial, prod
from typing import Iterator

from .characters import character, z_of
from .errors import ConsistencyError
from .partitions import Partition, dominates, enumerate_partitions
from .schur_expand import (
    Exponent,
    SymPoly,
    WeightMultiset,
    Window,
    extract_schur_coeff,
    kostka,
    schur_monomials,
    target_window,
)


def _sub_multisets(rem: tuple[int, ...], cap: int) -> Iterator[tuple[int, ...]]:
    if not rem:
        yield ()
        return
    for take in range(min(rem[0], cap) + 1):
        for rest in _sub_multisets(rem[1:], cap - take):
            yield (take,) + rest


@lru_cache(maxsize=None)
def _moves(
    rem: tuple[int, ...], values: tuple[int, ...], mult: int
) -> tuple[tuple[tuple[int, ...], int, int, int], ...]:
    """(parts left, how many left, number of placements, exponent scale) for every way of
    putting a sub-multiset of ``rem`` on ``mult`` identical positions."""
    out = []
    for sub in _sub_multisets(rem, mult):
        t = sum(sub)
        ways = comb(mult, t) * factorial(t) // prod(factorial(s) for s in sub)
        scale = sum(s * v for s, v in zip(sub, values))
        left = tuple(r - s for r, s in zip(rem, sub))
        out.append((left, sum(left), ways, scale))
    return tuple(out)


def monomial_plethysm(beta: Partition, f: WeightMultiset, window: Window | None = None) -> SymPoly:
    """Expand m_beta[f] where f is a sum of monomials given as a multiset.

    Equal monomials of ``f`` are handled together: placing a sub-multiset S of
    beta's parts on c identical positions can be done in
    C(c, |S|) * |S|! / prod(mult_j(S)!) ways, which reproduces the sum over
    index subsets and distinct rearrangements term for term.
    """
    sizes = f.var_set_sizes
    width = sum(sizes)
    counts = Counter(beta.parts)
    values = tuple(sorted(counts, reverse=True))
    start = tuple(counts[v] for v in values)
    items = f.items()
    # positions still available after item i, for pruning dead states
    room = [0] * (len(items) + 1)
    for i in range(len(items) - 1, -1, -1):
        room[i] = room[i + 1] + items[i][1]

    # exponents are packed into integers; the base exceeds any reachable
    # coordinate so digits never carry
    base = max([max(a, default=0) for a, _ in items] + [1]) * beta.size + 1
    weights = [base**i for i in range(width)]
    filters = window.digit_filters(base) if window is not None else []
    single = filters[0][2] if len(filters) == 1 else None

    states: dict[tuple[tuple[int, ...], int], int] = {(start, 0): 1}
    for i, (alpha, mult) in enumerate(items):
        code = sum(a * w for a, w in zip(alpha, weights))
        limit = room[i + 1]
        nxt: dict[tuple[tuple[int, ...], int], int] = defaultdict(int)
        for (rem, e), coef in states.items():
            for left, placed, ways, scale in _moves(rem, values, mult):
                if placed > limit:
                    continue
                e2 = e + scale * code
                if single is not None:
                    if e2 not in single:
                        continue
                elif filters and not all((e2 // d) % m in ok for d, m, ok in filters):
                    continue
                nxt[(left, e2)] += coef * ways
        states = nxt
    done = (0,) * len(values)
    terms = {}
    for (rem, e), c in states.items():
        if rem == done:
            digits = []
            for _ in range(width):
                e, r = divmod(e, base)
                digits.append(r)
            terms[tuple(digits)] = c
    return SymPoly(sizes, terms)


def schur_plethysm_poly(mu: Partition, f: WeightMultiset, window: Window | None = None) -> SymPoly:
    """s_mu[f] as sum over beta of K_{mu,beta} * m_beta[f]."""
    acc = SymPoly(f.var_set_sizes)
    room = f.size
    for beta in enumerate_partitions(mu.size, room):
        if not dominates(mu, beta):
            continue
        k = kostka(mu, beta.parts)
        if k:
            acc = acc + monomial_plethysm(beta, f, window).scale(k)
    return acc


def plethysm_specialized(mu: Partition, nu: Partition, lam: Partition) -> int:
    """a^lam_{mu,nu} from s_mu[s_nu] evaluated in len(lam) variables."""
    if lam.size != mu.size * nu.size:
        return 0
    k = max(len(lam), 1)
    window = target_window([lam], [k])
    poly = schur_plethysm_poly(mu, schur_monomials(nu, k), window)
    return extract_schur_coeff(poly, [lam], symmetric=True)


@lru_cache(maxsize=None)
def _cycle_weights(mu: Partition, nu: Partition) -> tuple[tuple[Partition, Fraction], ...]:
    """Class function coefficients w(rho) with a^lam = sum_rho w(rho) chi^lam(rho)."""
    m, d = mu.size, nu.size
    inner = [(g, Fraction(character(nu, g), z_of(g))) for g in enumerate_partitions(d)]
    inner = [(g, w) for g, w in inner if w]
    acc: dict[Partition, Fraction] = defaultdict(Fraction)
    for alpha in enumerate_partitions(m):
        outer = Fraction(character(mu, alpha), z_of(alpha))
        if not outer:
            continue
        for gammas in product(inner, repeat=len(alpha)):
            w = outer
            cycles: list[int] = []
            for a, (g, wg) in zip(alpha.parts, gammas):
                w *= wg
                cycles.extend(a * part for part in g.parts)
            acc[Partition(sorted(cycles, reverse=True))] += w
    return tuple(sorted(((rho, w) for rho, w in acc.items() if w), key=lambda t: t[0]))


def plethysm_character(mu: Partition, nu: Partition, lam: Partition) -> int:
    """a^lam_{mu,nu} from the character formula, one inner partition per cycle of alpha."""
    if lam.size != mu.size * nu.size:
        return 0
    total = sum(w * character(lam, rho) for rho, w in _cycle_weights(mu, nu))
    if total.denominator != 1 or total < 0:
        raise ConsistencyError(
            f"character formula gave {total} for mu={mu}, nu={nu}, lam={lam}"
        )
    return int(total)


def plethysm_table(
    outer: Partition, inner: Partition, method: str = "specialize"
) -> dict[Partition, int]:
    """All nonzero a^lam_{outer,inner}, keyed by lam in reverse-lex order."""
    engine = plethysm_character if method == "character" else plethysm_specialized
    n = outer.size * inner.size
    table = {}
    for lam in enumerate_partitions(n):
        value = engine(outer, inner, lam)
        if value:
            table[lam] = value
    return table
