"""Brute-force model of ``S_K(lambda)`` acting on a weight space of ``E^{(x) r}``.

``E`` has basis ``v_1, v_2``; a basis vector of the tensor power is a word
over ``{1, 2}``.  The words with exactly ``lambda2`` letters 2 span the
permutation module ``M^lambda``.  The divided power ``e^(i)`` sends a word to
the sum of all words obtained by turning ``i`` of its 2s into 1s, ``f^(i)``
turns ``i`` of its 1s into 2s, and ``b(i)`` acts as ``f^(i) e^(i)``.

Nothing here uses the multiplication formula of
:mod:`schur_idempotents.centraliser_algebra`; the matrices are built by
enumerating position subsets and are then compared against it.
"""

from __future__ import annotations

import itertools
import json
import math
from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

from .centraliser_algebra import AlgebraContext, AlgebraElement, mult_basis
from .errors import CostBoundExceeded, InvalidArgument, Unsupported
from .idempotents import admissible_g, build_idempotent
from .linalg import rank_gf2, rank_mod_p

__all__ = [
    "DEFAULT_COST_BOUND",
    "WeightBasis",
    "OracleMatrix",
    "weight_basis",
    "divided_power_transfer",
    "b_matrix",
    "element_matrix",
    "compare_structure_constants",
    "idempotent_rank_report",
    "StructureReport",
    "RankReport",
]

DEFAULT_COST_BOUND = 10**5

Word = tuple[int, ...]


@dataclass(frozen=True)
class WeightBasis:
    r: int
    lambda2: int
    words: tuple[Word, ...]

    def __len__(self) -> int:
        return len(self.words)

    @property
    def index(self) -> dict[Word, int]:
        return _index(self.words)


@lru_cache(maxsize=None)
def _index(words: tuple[Word, ...]) -> dict[Word, int]:
    return {w: k for k, w in enumerate(words)}


def _check_cost(r: int, lambda2: int, cost_bound: int) -> None:
    if not 0 <= lambda2 <= r:
        raise InvalidArgument(f"need 0 <= lambda2 <= r, got lambda2={lambda2}, r={r}")
    size = math.comb(r, lambda2)
    if size > cost_bound:
        raise CostBoundExceeded(f"weight space of dimension binom({r},{lambda2}) = {size} exceeds bound {cost_bound}")


def weight_basis(r: int, lambda2: int, cost_bound: int = DEFAULT_COST_BOUND) -> WeightBasis:
    """Words of length ``r`` with ``lambda2`` letters 2, in lexicographic order."""
    _check_cost(r, lambda2, cost_bound)
    return WeightBasis(r, lambda2, _words(r, lambda2))


@lru_cache(maxsize=None)
def _words(r: int, lambda2: int) -> tuple[Word, ...]:
    words = []
    for twos in itertools.combinations(range(r), lambda2):
        w = [1] * r
        for pos in twos:
            w[pos] = 2
        words.append(tuple(w))
    return tuple(sorted(words))


def divided_power_transfer(word: Word, letter_from: int, count: int) -> list[Word]:
    """All words obtained by changing exactly ``count`` letters ``letter_from`` to the other letter."""
    if letter_from not in (1, 2):
        raise InvalidArgument(f"letter must be 1 or 2, got {letter_from}")
    if count < 0:
        raise InvalidArgument(f"count must be >= 0, got {count}")
    target = 3 - letter_from
    spots = [k for k, a in enumerate(word) if a == letter_from]
    out = []
    for chosen in itertools.combinations(spots, count):
        w = list(word)
        for k in chosen:
            w[k] = target
        out.append(tuple(w))
    return out


@lru_cache(maxsize=None)
def _integer_b_matrix(i: int, r: int, lambda2: int) -> np.ndarray:
    words = _words(r, lambda2)
    idx = _index(words)
    mat = np.zeros((len(words), len(words)), dtype=np.int64)
    for col, w in enumerate(words):
        for mid in divided_power_transfer(w, 2, i):
            for out in divided_power_transfer(mid, 1, i):
                mat[idx[out], col] += 1  # KeyError here would mean weight was not preserved
    mat.setflags(write=False)
    return mat


@dataclass(frozen=True)
class OracleMatrix:
    """Dense square matrix over F_p on the weight-space basis; columns are images of basis words."""

    p: int
    basis: WeightBasis
    entries: np.ndarray = field(repr=False, compare=False)

    @property
    def dimension(self) -> int:
        return len(self.basis)

    def __matmul__(self, other: "OracleMatrix") -> "OracleMatrix":
        return OracleMatrix(self.p, self.basis, _matmul_mod(self.entries, other.entries, self.p))

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, OracleMatrix)
            and self.p == other.p
            and self.basis == other.basis
            and np.array_equal(self.entries, other.entries)
        )

    def is_zero(self) -> bool:
        return not self.entries.any()

    def rank(self) -> int:
        return rank_mod_p(self.entries, self.p)


def _matmul_mod(a: np.ndarray, b: np.ndarray, p: int) -> np.ndarray:
    n = a.shape[1]
    if n * (p - 1) ** 2 < 2**53:
        # float64 BLAS is exact below 2^53
        return np.rint(a.astype(np.float64) @ b.astype(np.float64)).astype(np.int64) % p
    return (a.astype(object) @ b.astype(object) % p).astype(np.int64)


def b_matrix(i: int, r: int, lambda2: int, p: int, cost_bound: int = DEFAULT_COST_BOUND) -> OracleMatrix:
    """Matrix of ``b(i) = f^(i) e^(i)`` on the weight space, mod p.  Zero when ``i > lambda2``."""
    if i < 0:
        raise InvalidArgument(f"i must be >= 0, got {i}")
    basis = weight_basis(r, lambda2, cost_bound)
    return OracleMatrix(p, basis, _integer_b_matrix(i, r, lambda2) % p)


def element_matrix(x: AlgebraElement, cost_bound: int = DEFAULT_COST_BOUND) -> OracleMatrix:
    """Substitute the oracle matrices of ``b(a)`` into the coefficient vector of ``x``."""
    ctx = x.context
    p = ctx.characteristic
    if p == 0:
        raise Unsupported("element_matrix works over F_p only")
    basis = weight_basis(ctx.r, ctx.lambda2, cost_bound)
    total = np.zeros((len(basis), len(basis)), dtype=np.int64)
    for a in x.support():
        total = (total + int(x.coeffs[a]) * _integer_b_matrix(a, ctx.r, ctx.lambda2)) % p
    return OracleMatrix(p, basis, total)


@dataclass
class StructureReport:
    r: int
    lambda2: int
    p: int
    products_checked: int = 0
    mismatches: list[tuple[int, int]] = field(default_factory=list)
    basis_independent: bool = False

    @property
    def passed(self) -> bool:
        return not self.mismatches and self.basis_independent

    def to_dict(self) -> dict:
        return {
            "r": self.r,
            "lambda2": self.lambda2,
            "p": self.p,
            "products_checked": self.products_checked,
            "mismatches": [list(ij) for ij in self.mismatches],
            "basis_independent": self.basis_independent,
            "pass": self.passed,
        }


def compare_structure_constants(r: int, lambda2: int, p: int, cost_bound: int = DEFAULT_COST_BOUND) -> StructureReport:
    """Check every ``b(i) b(j)`` of the multiplication formula against matrix products."""
    ctx = AlgebraContext.from_r(p, r, lambda2)
    _check_cost(r, lambda2, cost_bound)
    mats = [b_matrix(a, r, lambda2, p, cost_bound) for a in range(lambda2 + 1)]
    report = StructureReport(r, lambda2, p)
    for i in range(lambda2 + 1):
        for j in range(lambda2 + 1):
            lhs = mats[i] @ mats[j]
            rhs = np.zeros_like(lhs.entries)
            prod = mult_basis(i, j, ctx)
            for t in prod.support():
                rhs = (rhs + prod.coeffs[t] * mats[t].entries) % p
            report.products_checked += 1
            if not np.array_equal(lhs.entries, rhs):
                report.mismatches.append((i, j))
    flat = np.stack([mat.entries.ravel() for mat in mats])
    report.basis_independent = rank_mod_p(flat, p) == lambda2 + 1
    return report


@dataclass
class RankReport:
    r: int
    m: int
    lambda2: int
    dim: int
    per_g: list[dict] = field(default_factory=list)
    orthogonal: bool = False
    sum_is_identity: bool = False

    @property
    def rank_sum(self) -> int:
        return sum(item["rank"] for item in self.per_g)

    @property
    def passed(self) -> bool:
        return (
            all(item["idempotent"] and item["rank"] > 0 for item in self.per_g)
            and self.orthogonal
            and self.sum_is_identity
            and self.rank_sum == self.dim
        )

    def to_dict(self) -> dict:
        return {
            "r": self.r,
            "m": self.m,
            "p": 2,
            "per_g": [dict(item) for item in self.per_g],
            "rank_sum": self.rank_sum,
            "dim": self.dim,
            "orthogonal": self.orthogonal,
            "sum_is_identity": self.sum_is_identity,
            "pass": self.passed,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


def idempotent_rank_report(r: int, lambda2: int, p: int = 2, cost_bound: int = DEFAULT_COST_BOUND) -> RankReport:
    """Realise every ``e_{m,g}`` as a matrix over F_2 and record idempotency and rank."""
    if p != 2:
        raise Unsupported("idempotent matrices are only constructed for p = 2")
    ctx = AlgebraContext.from_r(2, r, lambda2)
    _check_cost(r, lambda2, cost_bound)
    dim = math.comb(r, lambda2)
    report = RankReport(r, ctx.m, lambda2, dim)
    mats = {}
    for g in admissible_g(ctx.m, ctx):
        mat = element_matrix(build_idempotent(ctx.m, g, ctx), cost_bound)
        mats[g] = mat
        report.per_g.append({"g": g, "rank": rank_gf2(mat.entries), "idempotent": mat @ mat == mat})
    report.orthogonal = all((mats[g] @ mats[d]).is_zero() for g, d in itertools.combinations(mats, 2))
    total = sum((mat.entries for mat in mats.values()), np.zeros((dim, dim), dtype=np.int64)) % 2
    report.sum_is_identity = np.array_equal(total, np.eye(dim, dtype=np.int64))
    return report
