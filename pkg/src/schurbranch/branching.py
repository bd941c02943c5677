"""Branching multiplicities for homomorphisms between products of general
linear groups, given by how each defining module of G decomposes under H.

The coefficient of s_lam(x^1)...s_lam(x^rH) in prod_i s_{mu^i}[P_i] is
computed in finitely many variables: set k gets max(len(lam^k), 1) of them.
Dropping variables commutes with plethysm and products, and Schur
polynomials with at most that many rows stay linearly independent, so the
alternant reads off the exact dimension-free coefficient.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from math import prod
from typing import Any, Sequence

from .errors import InvalidInput
from .partitions import Partition, dim_weyl, format_partition, iter_compositions, parse_partition
from .plethysm import schur_plethysm_poly
from .schur_expand import (
    SymPoly,
    WeightMultiset,
    extract_schur_coeff,
    poly_mul,
    schur_monomials,
    target_window,
)

BOX = Partition((1,))
EMPTY = Partition(())


@dataclass(frozen=True)
class BranchingInstance:
    """P_i = sum_j mult_ij * prod_k s_{nu^k(i,j)}(x^k), outer labels mu^i, target labels lam^k."""

    r_G: int
    r_H: int
    summands: tuple[tuple[tuple[int, tuple[Partition, ...]], ...], ...]
    outer: tuple[Partition, ...]
    target: tuple[Partition, ...]

    def __post_init__(self):
        if self.r_G < 1 or self.r_H < 1:
            raise InvalidInput(f"r_G and r_H must be positive, got {self.r_G}, {self.r_H}")
        if len(self.summands) != self.r_G or len(self.outer) != self.r_G:
            raise InvalidInput(f"expected {self.r_G} summand lists and outer labels")
        if len(self.target) != self.r_H:
            raise InvalidInput(f"expected {self.r_H} target labels, got {len(self.target)}")
        for i, row in enumerate(self.summands):
            if not row:
                raise InvalidInput(f"P_{i + 1} has no summands")
            for mult, nus in row:
                if mult < 1:
                    raise InvalidInput(f"multiplicity {mult} in P_{i + 1} is not positive")
                if len(nus) != self.r_H:
                    raise InvalidInput(
                        f"summand of P_{i + 1} has {len(nus)} partitions, expected {self.r_H}"
                    )

    @classmethod
    def build(cls, summands, outer, target) -> BranchingInstance:
        rows = tuple(tuple((int(m), tuple(nus)) for m, nus in row) for row in summands)
        return cls(len(rows), len(target), rows, tuple(outer), tuple(target))

    @classmethod
    def from_json(cls, data: dict[str, Any]) -> BranchingInstance:
        try:
            rows = tuple(
                tuple(
                    (int(s["mult"]), tuple(parse_partition(str(t)) for t in s["nu"]))
                    for s in row
                )
                for row in data["P"]
            )
            inst = cls(
                int(data["r_G"]),
                int(data["r_H"]),
                rows,
                tuple(parse_partition(str(t)) for t in data["mu"]),
                tuple(parse_partition(str(t)) for t in data["lambda"]),
            )
        except (KeyError, TypeError) as exc:
            raise InvalidInput(f"malformed instance: {exc!r}") from None
        return inst

    @classmethod
    def load(cls, path: str) -> BranchingInstance:
        try:
            with open(path) as fh:
                data = json.load(fh)
        except (OSError, json.JSONDecodeError) as exc:
            raise InvalidInput(f"{path}: {exc}") from None
        return cls.from_json(data)

    def to_json(self) -> dict[str, Any]:
        return {
            "r_G": self.r_G,
            "r_H": self.r_H,
            "P": [
                [{"mult": m, "nu": [format_partition(p) for p in nus]} for m, nus in row]
                for row in self.summands
            ],
            "mu": [format_partition(p) for p in self.outer],
            "lambda": [format_partition(p) for p in self.target],
        }

    def variable_counts(self) -> tuple[int, ...]:
        return tuple(max(len(lam), 1) for lam in self.target)


def dimension_of_defining(inst: BranchingInstance, i: int, dims: Sequence[int]) -> int:
    """d_i = sum_j m_ij * prod_k dim{nu^k(i,j)}_{n_k}; ``i`` is 0-based."""
    if not 0 <= i < inst.r_G:
        raise InvalidInput(f"index {i} out of range for r_G={inst.r_G}")
    if len(dims) != inst.r_H:
        raise InvalidInput(f"need {inst.r_H} dimensions, got {len(dims)}")
    return sum(
        m * prod(dim_weyl(nu, n) for nu, n in zip(nus, dims)) for m, nus in inst.summands[i]
    )


def defining_multiset(
    row: Sequence[tuple[int, Sequence[Partition]]], sizes: Sequence[int]
) -> WeightMultiset:
    """Monomials of P_i in ``sizes`` variables per set, listed with repeats."""
    acc: dict[tuple[int, ...], int] = {}
    for mult, nus in row:
        factors = [schur_monomials(nu, L).items() for nu, L in zip(nus, sizes)]
        partial = [((), mult)]
        for fac in factors:
            partial = [(e + a, c * ca) for e, c in partial for a, ca in fac]
        for e, c in partial:
            acc[e] = acc.get(e, 0) + c
    return WeightMultiset(acc, tuple(sizes))


def _degree_mismatch(inst: BranchingInstance) -> bool:
    totals = [0] * inst.r_H
    for row, mu in zip(inst.summands, inst.outer):
        degrees = {tuple(nu.size for nu in nus) for _, nus in row}
        if len(degrees) != 1:
            return False
        (deg,) = degrees
        for k in range(inst.r_H):
            totals[k] += mu.size * deg[k]
    return totals != [lam.size for lam in inst.target]


def branching_multiplicity(inst: BranchingInstance) -> int:
    if _degree_mismatch(inst):
        return 0
    sizes = inst.variable_counts()
    window = target_window(inst.target, sizes)
    total = SymPoly.one(sizes)
    for row, mu in zip(inst.summands, inst.outer):
        factor = schur_plethysm_poly(mu, defining_multiset(row, sizes), window)
        total = poly_mul(total, factor, window)
        if not total.terms:
            return 0
    return extract_schur_coeff(total, inst.target, symmetric=True)


def encode_classical(family: str, *params) -> BranchingInstance:
    """Branching instance for a classical coefficient.

    plethysm: (lam, mu, nu); kronecker: (lam1, lam2, mu); lr: (lam, mu, nu);
    kostka: (lam, weight) with ``weight`` a sequence of nonnegative integers.
    """
    if family == "kostka":
        if len(params) != 2:
            raise InvalidInput("kostka needs (shape, weight)")
        lam, weight = params
        weight = [int(w) for w in weight]
        if not weight or any(w < 0 for w in weight):
            raise InvalidInput(f"weight must be a nonempty list of nonnegative integers: {weight}")
        d = len(weight)
        row = [(1, tuple(BOX if k == j else EMPTY for k in range(d))) for j in range(d)]
        return BranchingInstance.build([row], [lam], [Partition((w,), 1) for w in weight])
    if len(params) != 3 or not all(isinstance(p, Partition) for p in params):
        raise InvalidInput(f"{family} needs three partitions")
    if family == "plethysm":
        lam, mu, nu = params
        return BranchingInstance.build([[(1, (nu,))]], [mu], [lam])
    if family == "kronecker":
        lam1, lam2, mu = params
        return BranchingInstance.build([[(1, (BOX, BOX))]], [mu], [lam1, lam2])
    if family == "lr":
        lam, mu, nu = params
        return BranchingInstance.build([[(1, (BOX,))], [(1, (BOX,))]], [mu, nu], [lam])
    raise InvalidInput(f"unknown family {family!r}")


def restriction_multiset(top_degree: int, L: int) -> WeightMultiset:
    """1 + h_1 + ... + h_top in L variables: every monomial of degree <= top once."""
    return WeightMultiset(
        {e: 1 for deg in range(top_degree + 1) for e in iter_compositions(deg, L)}, (L,)
    )


def restriction_coefficient(glabel: Partition, slabel: Partition) -> int:
    """Multiplicity of the Specht module ``slabel`` in the Weyl module ``glabel``
    restricted to permutation matrices: <s_glabel, s_slabel[1 + h_1 + h_2 + ...]>.

    Inner terms above degree |glabel| cannot reach that degree and are dropped.
    """
    L = max(len(glabel), 1)
    window = target_window([glabel], [L])
    poly = schur_plethysm_poly(slabel, restriction_multiset(glabel.size, L), window)
    return extract_schur_coeff(poly, [glabel], symmetric=True)
