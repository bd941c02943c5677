"""Exact Schur-Weyl certification of multiplicities.

A module is realized inside a tensor power as the image of a product of
Young symmetrizers; its multiplicity of an irreducible of highest weight
``lam`` is the dimension of the weight-``lam`` vectors in that image that
every raising operator kills. Everything is integral and exact.

Each tensor position carries one letter per variable set: a single set for
the plethysm and Littlewood-Richardson families, two sets for Kronecker
(position letters are pairs, the two factors of C^n1 (x) C^n2).
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from itertools import permutations, product
from math import prod
from typing import Iterator, Sequence

from .branching import branching_multiplicity, encode_classical
from .errors import InvalidInput, ResourceLimitError
from .linalg import bareiss_echelon, densify, rank
from .partitions import Partition, conjugate, dim_weyl, format_partition, iter_compositions
from .plethysm import plethysm_specialized

DEFAULT_CAP = 4096

Word = tuple[tuple[int, ...], ...]
Perm = tuple[int, ...]
Vector = dict[Word, int]


@dataclass(frozen=True)
class TensorSpace:
    """``positions`` tensor factors, each the tensor product of C^d over ``set_dims``."""

    positions: int
    set_dims: tuple[int, ...]

    @property
    def local_dim(self) -> int:
        return prod(self.set_dims)

    @property
    def dimension(self) -> int:
        return self.local_dim**self.positions

    def letters(self) -> list[tuple[int, ...]]:
        return list(product(*(range(d) for d in self.set_dims)))

    def words(self) -> Iterator[Word]:
        return product(self.letters(), repeat=self.positions)

    def weight_of(self, word: Word) -> tuple[tuple[int, ...], ...]:
        out = []
        for k, d in enumerate(self.set_dims):
            content = [0] * d
            for letter in word:
                content[letter[k]] += 1
            out.append(tuple(content))
        return tuple(out)

    def weight_words(self, weight: Sequence[Sequence[int]]) -> list[Word]:
        """Basis words of the given weight (one content vector per set)."""
        per_set = []
        for k, content in enumerate(weight):
            per_set.append(_words_with_content(tuple(content)))
        return [tuple(zip(*combo)) for combo in product(*per_set)]

    def weights(self) -> Iterator[tuple[tuple[int, ...], ...]]:
        return product(*(iter_compositions(self.positions, d) for d in self.set_dims))


def _words_with_content(content: tuple[int, ...]) -> list[tuple[int, ...]]:
    out: list[tuple[int, ...]] = []

    def rec(prefix: list[int], left: list[int]):
        if not any(left):
            out.append(tuple(prefix))
            return
        for letter, c in enumerate(left):
            if c:
                left[letter] -= 1
                prefix.append(letter)
                rec(prefix, left)
                prefix.pop()
                left[letter] += 1

    rec([], list(content))
    return out


# ---------------------------------------------------------------------------
# group algebra of position permutations


def _compose(s: Perm, t: Perm) -> Perm:
    return tuple(s[t[i]] for i in range(len(t)))


def _algebra_mul(a: dict[Perm, int], b: dict[Perm, int]) -> dict[Perm, int]:
    out: dict[Perm, int] = defaultdict(int)
    for s, cs in a.items():
        for t, ct in b.items():
            out[_compose(s, t)] += cs * ct
    return {p: c for p, c in out.items() if c}


def _perm_sign(perm: Perm) -> int:
    sign, seen = 1, [False] * len(perm)
    for i in range(len(perm)):
        j, length = i, 0
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            length += 1
        if length and length % 2 == 0:
            sign = -sign
    return sign


def _subgroup_sum(blocks: Sequence[Sequence[int]], n: int, signed: bool) -> dict[Perm, int]:
    """Sum (optionally sign-weighted) of all permutations of ``range(n)``
    that only move elements inside each listed block."""
    out = {tuple(range(n)): 1}
    for block in blocks:
        if len(block) < 2:
            continue
        piece: dict[Perm, int] = {}
        for images in permutations(block):
            p = list(range(n))
            for src, dst in zip(block, images):
                p[src] = dst
            p = tuple(p)
            piece[p] = _perm_sign(p) if signed else 1
        out = _algebra_mul(out, piece)
    return out


def _apply_perm(perm: Perm, word: Word) -> Word:
    out = [None] * len(word)
    for i, letter in enumerate(word):
        out[perm[i]] = letter
    return tuple(out)


@dataclass
class TensorOperator:
    """Integer combination of position permutations, or a product of such
    factors applied right to left."""

    space: TensorSpace
    factors: list[dict[Perm, int]] = field(default_factory=list)

    def __matmul__(self, other: TensorOperator) -> TensorOperator:
        return TensorOperator(self.space, self.factors + other.factors)

    def apply(self, vec: Vector) -> Vector:
        for factor in reversed(self.factors):
            out: Vector = defaultdict(int)
            for word, c in vec.items():
                for perm, cp in factor.items():
                    out[_apply_perm(perm, word)] += c * cp
            vec = {w: c for w, c in out.items() if c}
        return vec

    def matrix(self) -> list[list[int]]:
        words = list(self.space.words())
        index = {w: i for i, w in enumerate(words)}
        cols = [self.apply({w: 1}) for w in words]
        mat = [[0] * len(words) for _ in words]
        for j, col in enumerate(cols):
            for w, c in col.items():
                mat[index[w]][j] = c
        return mat


def young_symmetrizer(p: Partition, space: TensorSpace, positions: Sequence[int]) -> TensorOperator:
    """Column antisymmetrizer after row symmetrizer of the row-reading tableau
    of shape ``p`` filled with ``positions``."""
    positions = list(positions)
    if p.size != len(positions):
        raise InvalidInput(f"shape {p} needs {p.size} positions, got {len(positions)}")
    if len(set(positions)) != len(positions) or any(
        not 0 <= q < space.positions for q in positions
    ):
        raise InvalidInput(f"positions {positions} invalid for {space.positions} tensor factors")
    rows, start = [], 0
    for r in p.parts:
        rows.append(positions[start : start + r])
        start += r
    cols = [[row[j] for row in rows if j < len(row)] for j in range(p[0])]
    n = space.positions
    row_sum = _subgroup_sum(rows, n, signed=False)
    col_sum = _subgroup_sum(cols, n, signed=True)
    return TensorOperator(space, [col_sum, row_sum])


def block_symmetrizer(p: Partition, space: TensorSpace, blocks: Sequence[Sequence[int]]) -> TensorOperator:
    """Young symmetrizer of ``p`` permuting whole blocks of positions."""
    if p.size != len(blocks):
        raise InvalidInput(f"shape {p} needs {p.size} blocks, got {len(blocks)}")
    width = len(blocks[0])
    m = len(blocks)
    inner = young_symmetrizer(p, TensorSpace(m, (1,)), range(m))

    def lift(perm: Perm) -> Perm:
        out = list(range(space.positions))
        for b, target in enumerate(perm):
            for j in range(width):
                out[blocks[b][j]] = blocks[target][j]
        return tuple(out)

    return TensorOperator(
        space, [{lift(q): c for q, c in factor.items()} for factor in inner.factors]
    )


# ---------------------------------------------------------------------------
# submodules and highest weight vectors


@dataclass
class Subspace:
    """Image of ``operator`` inside its tensor space, handled one weight space
    at a time (the operator permutes positions, so it preserves weights)."""

    operator: TensorOperator
    _cache: dict = field(default_factory=dict, repr=False)

    @property
    def space(self) -> TensorSpace:
        return self.operator.space

    def weight_basis(self, weight) -> list[Vector]:
        """Independent integer vectors spanning the image in one weight space."""
        weight = tuple(tuple(w) for w in weight)
        if weight not in self._cache:
            images = [self.operator.apply({w: 1}) for w in self.space.weight_words(weight)]
            images = [v for v in images if v]
            if not images:
                self._cache[weight] = []
            else:
                rows, index = densify(images)
                keys = sorted(index, key=index.get)
                basis = bareiss_echelon(rows)
                self._cache[weight] = [
                    {keys[i]: c for i, c in enumerate(row) if c} for row in basis
                ]
        return self._cache[weight]

    def rank(self) -> int:
        return sum(len(self.weight_basis(w)) for w in self.space.weights())


def raise_operator(space: TensorSpace, k: int, i: int, vec: Vector) -> Vector:
    """E_{i,i+1} of set ``k``: sum over positions of replacing letter i+1 by i."""
    out: Vector = defaultdict(int)
    for word, c in vec.items():
        for pos, letter in enumerate(word):
            if letter[k] == i + 1:
                new = letter[:k] + (i,) + letter[k + 1 :]
                out[word[:pos] + (new,) + word[pos + 1 :]] += c
    return {w: c for w, c in out.items() if c}


def multiplicity_hwv(s: Subspace, targets: Sequence[Partition]) -> int:
    """Dimension of the highest weight vectors of weight ``targets`` in ``s``."""
    space = s.space
    if len(targets) != len(space.set_dims):
        raise InvalidInput(f"need {len(space.set_dims)} target partitions, got {len(targets)}")
    if any(lam.size != space.positions for lam in targets):
        return 0
    if any(len(lam) > d for lam, d in zip(targets, space.set_dims)):
        return 0
    weight = tuple(lam.padded(d) for lam, d in zip(targets, space.set_dims))
    basis = s.weight_basis(weight)
    if not basis:
        return 0
    raised = []
    for v in basis:
        image: dict = {}
        for k, d in enumerate(space.set_dims):
            for i in range(d - 1):
                for w, c in raise_operator(space, k, i, v).items():
                    image[(k, i, w)] = c
        raised.append(image)
    rows, _ = densify(raised)
    return len(basis) - (rank(rows) if rows and rows[0] else 0)


def check_equivariance(op: TensorOperator) -> bool:
    """E o c == c o E for every raising operator E, checked on every basis word."""
    space = op.space
    for word in space.words():
        unit = {word: 1}
        image = op.apply(unit)
        for k, d in enumerate(space.set_dims):
            for i in range(d - 1):
                if raise_operator(space, k, i, image) != op.apply(raise_operator(space, k, i, unit)):
                    return False
    return True


def _check_cap(space: TensorSpace, cap: int):
    if space.dimension > cap:
        raise ResourceLimitError(
            f"ambient dimension {space.dimension} exceeds the cap {cap}"
        )


def build_submodule(family: str, params: Sequence[Partition], dims: Sequence[int], cap: int = DEFAULT_CAP) -> Subspace:
    """plethysm: params (mu, nu), dims (n,); lr: (mu, nu), (n,); kronecker: (mu,), (n1, n2)."""
    dims = tuple(int(d) for d in dims)
    if any(d < 1 for d in dims):
        raise InvalidInput(f"dimensions must be positive: {dims}")
    if family == "plethysm":
        mu, nu = _unpack(params, 2, family)
        _expect_dims(dims, 1, family)
        space = TensorSpace(mu.size * nu.size, dims)
        _check_cap(space, cap)
        d = nu.size
        blocks = [list(range(b * d, (b + 1) * d)) for b in range(mu.size)]
        op = block_symmetrizer(mu, space, blocks) if mu.size else TensorOperator(space, [])
        for block in blocks:
            op = op @ young_symmetrizer(nu, space, block)
        return Subspace(op)
    if family == "lr":
        mu, nu = _unpack(params, 2, family)
        _expect_dims(dims, 1, family)
        space = TensorSpace(mu.size + nu.size, dims)
        _check_cap(space, cap)
        op = young_symmetrizer(mu, space, range(mu.size)) @ young_symmetrizer(
            nu, space, range(mu.size, mu.size + nu.size)
        )
        return Subspace(op)
    if family == "kronecker":
        (mu,) = _unpack(params, 1, family)
        _expect_dims(dims, 2, family)
        space = TensorSpace(mu.size, dims)
        _check_cap(space, cap)
        return Subspace(young_symmetrizer(mu, space, range(mu.size)))
    raise InvalidInput(f"unknown family {family!r}; expected plethysm, lr or kronecker")


def _unpack(params, count: int, family: str):
    params = tuple(params)
    if len(params) != count or not all(isinstance(p, Partition) for p in params):
        raise InvalidInput(f"{family} needs {count} partition(s), got {len(params)}")
    return params


def _expect_dims(dims, count: int, family: str):
    if len(dims) != count:
        raise InvalidInput(f"{family} needs {count} dimension(s), got {len(dims)}")


@dataclass
class VerifyReport:
    family: str
    params: tuple[Partition, ...]
    dims: tuple[int, ...]
    hwv_multiplicity: int
    combinatorial: int
    method: str

    @property
    def passed(self) -> bool:
        return self.hwv_multiplicity == self.combinatorial

    def to_json(self) -> dict:
        return {
            "family": self.family,
            "params": [format_partition(p) for p in self.params],
            "dims": list(self.dims),
            "hwv_multiplicity": str(self.hwv_multiplicity),
            "combinatorial": str(self.combinatorial),
            "method": self.method,
            "pass": self.passed,
        }


def verify(family: str, params: Sequence[Partition], dims: Sequence[int], cap: int = DEFAULT_CAP) -> VerifyReport:
    """Compare the highest-weight count in the realized module with the
    combinatorial engine.

    plethysm and lr take (mu, nu, lam) with dims (n,); kronecker takes
    (lam1, lam2, mu) with dims (n1, n2). Targets longer than the matching
    dimension are rejected: their multiplicity is invisible in that space.
    """
    params = tuple(params)
    dims = tuple(int(d) for d in dims)
    if family in ("plethysm", "lr"):
        mu, nu, lam = _unpack(params, 3, family)
        sub = build_submodule(family, (mu, nu), dims, cap)
        targets = (lam,)
        if family == "plethysm":
            value, method = plethysm_specialized(mu, nu, lam), "specialize"
        else:
            value, method = branching_multiplicity(encode_classical("lr", lam, mu, nu)), "branching"
    elif family == "kronecker":
        lam1, lam2, mu = _unpack(params, 3, family)
        sub = build_submodule(family, (mu,), dims, cap)
        targets = (lam1, lam2)
        value, method = branching_multiplicity(encode_classical("kronecker", lam1, lam2, mu)), "branching"
    else:
        raise InvalidInput(f"unknown family {family!r}; expected plethysm, lr or kronecker")
    for lam, d in zip(targets, dims):
        if len(lam) > d:
            raise InvalidInput(f"target {lam} has more than {d} rows")
    return VerifyReport(family, params, dims, multiplicity_hwv(sub, targets), value, method)


def expected_rank(family: str, params: Sequence[Partition], dims: Sequence[int]) -> int:
    """Dimension the realized module must have, from the hook-content formula."""
    if family == "plethysm":
        mu, nu = params
        return dim_weyl(mu, dim_weyl(nu, dims[0]))
    if family == "lr":
        mu, nu = params
        return dim_weyl(mu, dims[0]) * dim_weyl(nu, dims[0])
    (mu,) = params
    return dim_weyl(mu, dims[0] * dims[1])
