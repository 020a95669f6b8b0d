"""Digit-level combinatorics in base p.

Everything here is a pure function of small integers: p-adic digit lists,
binomial coefficients mod p via Lucas' theorem, the two-part p-Kostka
predicate ``B(m, g) = binom(m + 2g, g)``, carries in the binary sum
``m + 2g`` and the index sets that drive the idempotent construction.

Digit lists are least-significant first.  Positions with a negative index
are read as zero.
"""

from __future__ import annotations

import csv
import io
import json
import math
from dataclasses import dataclass, field
from typing import Sequence

from .errors import InvalidArgument

__all__ = [
    "PAdicDigits",
    "KostkaCell",
    "CarrySequence",
    "IndexSets",
    "is_prime",
    "p_adic",
    "digit",
    "lucas_binomial",
    "kostka_entry",
    "kostka_cell",
    "kostka_window",
    "window_to_csv",
    "window_to_json",
    "carry_sequence",
    "index_sets",
    "splitting",
    "column_symbol",
]


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    return all(n % d for d in range(3, math.isqrt(n) + 1, 2))


def _check_natural(**kwargs: int) -> None:
    for name, value in kwargs.items():
        if not isinstance(value, int) or isinstance(value, bool) or value < 0:
            raise InvalidArgument(f"{name} must be a natural number, got {value!r}")


def _check_prime(p: int) -> None:
    if not isinstance(p, int) or not is_prime(p):
        raise InvalidArgument(f"p must be prime, got {p!r}")


@dataclass(frozen=True)
class PAdicDigits:
    """Base-``base`` expansion of a natural number.

    ``digits`` is stored in canonical form (no trailing zeros), so equality
    of two instances with the same base is equality of the encoded values.
    Indexing past the end, or at a negative position, yields 0.
    """

    base: int
    digits: tuple[int, ...]

    def __post_init__(self):
        if any(not 0 <= d < self.base for d in self.digits):
            raise InvalidArgument(f"digits {self.digits} out of range for base {self.base}")
        stripped = tuple(self.digits)
        while stripped and stripped[-1] == 0:
            stripped = stripped[:-1]
        object.__setattr__(self, "digits", stripped)

    @property
    def value(self) -> int:
        return sum(d * self.base**i for i, d in enumerate(self.digits))

    def __getitem__(self, i: int) -> int:
        if i < 0 or i >= len(self.digits):
            return 0
        return self.digits[i]

    def __len__(self) -> int:
        return len(self.digits)

    def support(self) -> list[int]:
        """Positions holding a nonzero digit."""
        return [i for i, d in enumerate(self.digits) if d]

    def __str__(self) -> str:
        return "[" + ",".join(map(str, self.digits)) + "]"


def p_adic(n: int, p: int) -> PAdicDigits:
    """Expand ``n`` in base ``p``.

    >>> p_adic(35, 2).digits
    (1, 1, 0, 0, 0, 1)
    """
    _check_natural(n=n)
    _check_prime(p)
    out = []
    while n:
        n, d = divmod(n, p)
        out.append(d)
    return PAdicDigits(p, tuple(out))


def digit(n: int, i: int, p: int = 2) -> int:
    """The ``i``-th base-``p`` digit of ``n``; zero for ``i < 0``."""
    if i < 0:
        return 0
    return (n // p**i) % p


def lucas_binomial(n: int, k: int, p: int) -> int:
    """``binom(n, k) mod p`` as the product of digit-wise binomials."""
    _check_natural(n=n, k=k)
    _check_prime(p)
    result = 1
    while n or k:
        n, ni = divmod(n, p)
        k, ki = divmod(k, p)
        if ki > ni:
            return 0
        result = result * math.comb(ni, ki) % p
    return result


def kostka_entry(m: int, g: int, p: int) -> int:
    """Entry ``(m, g)`` of the two-part p-Kostka matrix: 1 iff ``B(m, g) != 0 mod p``."""
    return 1 if lucas_binomial(m + 2 * g, g, p) else 0


@dataclass(frozen=True)
class KostkaCell:
    """The two-row digit table of ``B(m, g)``: column ``u`` is ``((m+2g)_u, g_u)``."""

    m: int
    g: int
    p: int
    columns: tuple[tuple[int, int], ...]

    @property
    def nonzero(self) -> bool:
        return all(top >= bottom for top, bottom in self.columns)

    def column(self, u: int) -> tuple[int, int]:
        if 0 <= u < len(self.columns):
            return self.columns[u]
        return (0, 0)

    @property
    def degree(self) -> int | None:
        """Largest position of a nonzero column, or None if every column is zero."""
        nz = [u for u, col in enumerate(self.columns) if col != (0, 0)]
        return nz[-1] if nz else None


def kostka_cell(m: int, g: int, p: int = 2) -> KostkaCell:
    _check_natural(m=m, g=g)
    top = p_adic(m + 2 * g, p)
    bottom = p_adic(g, p)
    width = max(len(top), len(bottom))
    cols = tuple((top[u], bottom[u]) for u in range(width))
    return KostkaCell(m, g, p, cols)


_SYMBOLS = {(1, 1): "b", (1, 0): "1-b", (0, 0): "1", (0, 1): "0"}


def column_symbol(column: tuple[int, int]) -> str:
    """Factor of ``e_{m,g}`` attached to a binary column of ``B(m, g)``.

    ``(1 over 1)`` gives ``b``, ``(1 over 0)`` gives ``1-b``, ``(0 over 0)``
    gives ``1`` and ``(0 over 1)`` gives ``0``.
    """
    return _SYMBOLS[column]


def kostka_window(m_max: int, g_max: int, p: int) -> list[list[int]]:
    """Rows ``m = 0..m_max`` and columns ``g = 0..g_max`` of the p-Kostka matrix."""
    _check_natural(m_max=m_max, g_max=g_max)
    _check_prime(p)
    return [[kostka_entry(m, g, p) for g in range(g_max + 1)] for m in range(m_max + 1)]


def window_to_csv(rows: Sequence[Sequence[int]]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    width = len(rows[0]) if rows else 0
    writer.writerow([f"g={g}" for g in range(width)])
    writer.writerows(rows)
    return buf.getvalue()


def window_to_json(rows: Sequence[Sequence[int]], p: int) -> str:
    return json.dumps({"p": p, "rows": [list(r) for r in rows]})


@dataclass(frozen=True)
class CarrySequence:
    """Carries ``x_i`` of the binary addition ``m + 2g``.

    They satisfy ``m_i + g_{i-1} + x_{i-1} = (m+2g)_i + 2 x_i`` with
    ``g_{-1} = x_{-1} = 0``; entries past the end of ``x`` are zero.
    """

    m: int
    g: int
    x: tuple[int, ...] = field(default=())

    def __getitem__(self, i: int) -> int:
        if i < 0 or i >= len(self.x):
            return 0
        return self.x[i]

    def column_sum(self, i: int) -> int:
        """``(m+2g)_i + 2 x_i``, the left-hand side of the carry relation."""
        return digit(self.m + 2 * self.g, i) + 2 * self[i]


def carry_sequence(m: int, g: int) -> CarrySequence:
    _check_natural(m=m, g=g)
    n = max(m.bit_length(), (2 * g).bit_length()) + 1
    xs = []
    carry = 0
    for i in range(n):
        total = digit(m, i) + digit(g, i - 1) + carry
        carry = total >> 1
        xs.append(carry)
    return CarrySequence(m, g, tuple(xs))


@dataclass(frozen=True)
class IndexSets:
    """``I``: positions with ``(m+2g)_u = 1, g_u = 0``; ``J``: ``(m+2g)_u = 1, g_u = 1``."""

    m: int
    g: int
    I: frozenset[int]
    J: frozenset[int]


def index_sets(m: int, g: int) -> IndexSets:
    _check_natural(m=m, g=g)
    total = m + 2 * g
    top = [u for u in range(total.bit_length()) if digit(total, u)]
    I = frozenset(u for u in top if not digit(g, u))
    J = frozenset(u for u in top if digit(g, u))
    return IndexSets(m, g, I, J)


def splitting(m: int, g: int, u: int) -> tuple[int, int]:
    """Cut ``(m, g)`` at a position ``u`` with ``(m+2g)_u = 1``.

    Returns ``n = [m_0, ..., m_u]`` and ``d = [g_0, ..., g_{u-1}]``; the binary
    table of ``B(n, d)`` is that of ``B(m, g)`` below column ``u`` followed by
    a single ``(1 over 0)`` column.
    """
    _check_natural(m=m, g=g, u=u)
    if digit(m + 2 * g, u) != 1:
        raise InvalidArgument(f"(m+2g)_{u} must be 1 for m={m}, g={g}")
    if not kostka_entry(m, g, 2):
        raise InvalidArgument(f"B({m},{g}) is even")
    n = m % (1 << (u + 1))
    d = g % (1 << u)
    return n, d
