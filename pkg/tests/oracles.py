"""Brute-force reference computations, deliberately naive and independent
of the package's algorithms."""

from __future__ import annotations

from collections import defaultdict
from fractions import Fraction
from itertools import combinations, permutations, product


def ssyt(shape, max_entry):
    """All semistandard tableaux of ``shape`` with entries 1..max_entry."""
    cells = [(i, j) for i, r in enumerate(shape) for j in range(r)]
    out = []

    def rec(k, filling):
        if k == len(cells):
            out.append(dict(filling))
            return
        i, j = cells[k]
        lo = 1
        if j > 0:
            lo = max(lo, filling[(i, j - 1)])
        if i > 0:
            lo = max(lo, filling[(i - 1, j)] + 1)
        for v in range(lo, max_entry + 1):
            filling[(i, j)] = v
            rec(k + 1, filling)
            del filling[(i, j)]

    rec(0, {})
    return out


def ssyt_contents(shape, max_entry):
    acc = defaultdict(int)
    for t in ssyt(shape, max_entry):
        content = [0] * max_entry
        for v in t.values():
            content[v - 1] += 1
        acc[tuple(content)] += 1
    return dict(acc)


def syt_count(shape):
    n = sum(shape)
    return sum(1 for t in ssyt(shape, n) if sorted(t.values()) == list(range(1, n + 1)))


def naive_monomial_plethysm(beta, multiset):
    """m_beta[f] by the literal rule: index subsets i1<...<ir of the listed
    monomials times distinct rearrangements of beta's parts."""
    monos = [e for e, c in sorted(multiset.items(), reverse=True) for _ in range(c)]
    r = len(beta)
    width = len(monos[0]) if monos else 0
    acc = defaultdict(int)
    for idx in combinations(range(len(monos)), r):
        for arrangement in set(permutations(beta)):
            e = [0] * width
            for part, i in zip(arrangement, idx):
                for t in range(width):
                    e[t] += part * monos[i][t]
            acc[tuple(e)] += 1
    return dict(acc)


def fraction_rank(rows):
    m = [[Fraction(x) for x in r] for r in rows]
    rank = 0
    cols = len(m[0]) if m else 0
    for c in range(cols):
        piv = next((i for i in range(rank, len(m)) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        for i in range(len(m)):
            if i != rank and m[i][c] != 0:
                f = m[i][c] / m[rank][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[rank])]
        rank += 1
    return rank


def perm_cycle_type(p):
    seen, out = set(), []
    for i in range(len(p)):
        if i in seen:
            continue
        j, length = i, 0
        while j not in seen:
            seen.add(j)
            j = p[j]
            length += 1
        out.append(length)
    return tuple(sorted(out, reverse=True))


def frobenius_character(shape, cycle_type):
    """chi^shape(cycle_type) as the coefficient of x^(shape+delta) in
    a_delta * p_cycle_type, with plain dict polynomials in n variables."""
    n = sum(shape)
    L = n
    poly = {(0,) * L: 1}
    for r in cycle_type:
        nxt = defaultdict(int)
        for e, c in poly.items():
            for i in range(L):
                f = list(e)
                f[i] += r
                nxt[tuple(f)] += c
        poly = nxt
    lam = list(shape) + [0] * (L - len(shape))
    target = tuple(lam[i] + L - 1 - i for i in range(L))
    total = 0
    for perm in permutations(range(L)):
        sign = 1
        for a in range(L):
            for b in range(a + 1, L):
                if perm[a] > perm[b]:
                    sign = -sign
        # Vandermonde term x_i^(L-1-perm[i])
        need = tuple(target[i] - (L - 1 - perm[i]) for i in range(L))
        if min(need) >= 0:
            total += sign * poly.get(need, 0)
    return total


def permutation_module_character(n, cycle_type):
    """Fixed points of a permutation of the given cycle type."""
    return sum(1 for c in cycle_type if c == 1)
