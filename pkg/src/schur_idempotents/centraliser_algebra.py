"""The commutative algebra ``S_K(lambda) = 1_lambda S_K(2, r) 1_lambda``.

For a two-part partition ``lambda = (m + k, k)`` the algebra has basis
``b(0), ..., b(k)`` with ``b(0)`` the identity, and

    b(i) b(j) = sum_{s=0}^{i} C(j+s, i) C(j+s, s) C(m+j+i, i-s) b(j+s),

where every ``b(a)`` with ``a > k`` is zero.  The structure constants depend
on ``m`` but not on ``k``, which is what lets one family of algebras be
studied at once.

Coefficients are residues mod p in characteristic p and
:class:`fractions.Fraction` in characteristic 0.  Nothing here uses floats.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

import numpy as np

from .errors import InvalidArgument, Unsupported
from .linalg import rank_rational
from .padic_arith import digit, is_prime, p_adic

__all__ = [
    "AlgebraContext",
    "AlgebraElement",
    "FPolynomial",
    "mult_basis",
    "multiply",
    "factorize_basis",
    "square_reduction",
    "square_reduction_factor",
    "gamma",
    "power_reduction_check",
    "f_polynomial",
    "char0_basis_identity",
    "minimal_polynomial_check",
    "powers_of_b1_independent",
    "degree",
]


@dataclass(frozen=True)
class AlgebraContext:
    """Parameters fixing one algebra: characteristic, ``m = lambda_1 - lambda_2`` and ``lambda_2``."""

    characteristic: int
    m: int
    lambda2: int

    def __post_init__(self):
        c = self.characteristic
        if not isinstance(c, int) or (c != 0 and not is_prime(c)):
            raise InvalidArgument(f"characteristic must be 0 or a prime, got {c!r}")
        for name in ("m", "lambda2"):
            v = getattr(self, name)
            if not isinstance(v, int) or v < 0:
                raise InvalidArgument(f"{name} must be a natural number, got {v!r}")

    @classmethod
    def from_r(cls, characteristic: int, r: int, lambda2: int) -> "AlgebraContext":
        m = r - 2 * lambda2
        if m < 0:
            raise InvalidArgument(f"lambda2={lambda2} too large for r={r}")
        return cls(characteristic, m, lambda2)

    @property
    def r(self) -> int:
        return self.m + 2 * self.lambda2

    @property
    def partition(self) -> tuple[int, int]:
        return (self.m + self.lambda2, self.lambda2)

    @property
    def dim(self) -> int:
        return self.lambda2 + 1

    def coerce(self, value):
        """Map an integer or rational into the coefficient field."""
        if self.characteristic == 0:
            return Fraction(value)
        if isinstance(value, Fraction):
            if value.denominator % self.characteristic == 0:
                raise InvalidArgument(f"{value} has no image mod {self.characteristic}")
            return value.numerator * pow(value.denominator, -1, self.characteristic) % self.characteristic
        return int(value) % self.characteristic

    def element(self, coeffs: Iterable) -> "AlgebraElement":
        coeffs = tuple(self.coerce(c) for c in coeffs)
        if len(coeffs) != self.dim:
            raise InvalidArgument(f"expected {self.dim} coefficients, got {len(coeffs)}")
        return AlgebraElement(self, coeffs)

    def zero(self) -> "AlgebraElement":
        return self.element([0] * self.dim)

    def one(self) -> "AlgebraElement":
        return self.basis(0)

    def basis(self, a: int) -> "AlgebraElement":
        if not 0 <= a <= self.lambda2:
            raise InvalidArgument(f"b({a}) is outside 0..{self.lambda2}")
        coeffs = [0] * self.dim
        coeffs[a] = 1
        return self.element(coeffs)

    def scalar(self, c) -> "AlgebraElement":
        return self.one() * c


@dataclass(frozen=True)
class AlgebraElement:
    """A coefficient vector in the basis ``b(0), ..., b(lambda2)``."""

    context: AlgebraContext
    coeffs: tuple

    def _same(self, other: "AlgebraElement") -> None:
        if self.context != other.context:
            raise InvalidArgument(f"context mismatch: {self.context} vs {other.context}")

    def __add__(self, other):
        if not isinstance(other, AlgebraElement):
            other = self.context.scalar(other)
        self._same(other)
        return self.context.element(a + b for a, b in zip(self.coeffs, other.coeffs))

    __radd__ = __add__

    def __neg__(self):
        return self.context.element(-a for a in self.coeffs)

    def __sub__(self, other):
        if not isinstance(other, AlgebraElement):
            other = self.context.scalar(other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, AlgebraElement):
            return multiply(self, other)
        c = self.context.coerce(other)
        return self.context.element(a * c for a in self.coeffs)

    def __rmul__(self, other):
        return self * other

    def __pow__(self, n: int):
        if n < 0:
            raise InvalidArgument("negative powers are not defined")
        result = self.context.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __bool__(self) -> bool:
        return any(self.coeffs)

    def is_zero(self) -> bool:
        return not self

    def support(self) -> list[int]:
        return [a for a, c in enumerate(self.coeffs) if c]

    @property
    def degree(self) -> int | None:
        return degree(self)

    def __str__(self) -> str:
        terms = []
        for a, c in enumerate(self.coeffs):
            if not c:
                continue
            terms.append(f"b({a})" if c == 1 else f"{c}*b({a})")
        return "+".join(terms) if terms else "0"

    def to_dict(self) -> dict:
        ctx = self.context
        return {
            "char": ctx.characteristic,
            "m": ctx.m,
            "lambda2": ctx.lambda2,
            "coeffs": [str(c) for c in self.coeffs],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, data: dict) -> "AlgebraElement":
        ctx = AlgebraContext(int(data["char"]), int(data["m"]), int(data["lambda2"]))
        return ctx.element(Fraction(c) for c in data["coeffs"])

    @classmethod
    def from_json(cls, text: str) -> "AlgebraElement":
        return cls.from_dict(json.loads(text))


def degree(x: AlgebraElement) -> int | None:
    """Largest ``a`` with a nonzero coefficient on ``b(a)``; None for zero."""
    supp = x.support()
    return supp[-1] if supp else None


# -- structure constants ----------------------------------------------------


@lru_cache(maxsize=None)
def _product_terms(i: int, j: int, m: int) -> tuple[tuple[int, int], ...]:
    """Untruncated exact integer expansion of ``b(i) b(j)`` as ``(degree, coeff)`` pairs."""
    terms = []
    for s in range(i + 1):
        t = j + s
        c = math.comb(t, i) * math.comb(t, s) * math.comb(m + j + i, i - s)
        if c:
            terms.append((t, c))
    return tuple(terms)


def _truncated_terms(i: int, j: int, ctx: AlgebraContext) -> list[tuple[int, object]]:
    # The only place where degrees above lambda2 are discarded.
    out = []
    for t, c in _product_terms(i, j, ctx.m):
        if t > ctx.lambda2:
            continue
        c = ctx.coerce(c)
        if c:
            out.append((t, c))
    return out


def mult_basis(i: int, j: int, ctx: AlgebraContext) -> AlgebraElement:
    """The product ``b(i) b(j)`` in ``ctx``."""
    for name, v in (("i", i), ("j", j)):
        if not isinstance(v, int) or not 0 <= v <= ctx.lambda2:
            raise InvalidArgument(f"{name}={v!r} outside 0..{ctx.lambda2}")
    coeffs = [0] * ctx.dim
    for t, c in _truncated_terms(i, j, ctx):
        coeffs[t] = c
    return ctx.element(coeffs)


# (characteristic, m) -> largest table built so far; smaller lambda2 slice it,
# since entries with i, j, t <= lambda2 do not depend on lambda2.
_TABLES: dict[tuple[int, int], np.ndarray] = {}

_NUMPY_PRIME_LIMIT = 1 << 20


def _pascal_mod(rows: int, p: int) -> np.ndarray:
    """``P[a, b] = C(a, b) mod p`` from exact integer binomials."""
    out = np.zeros((rows, rows), dtype=np.int64)
    for a in range(rows):
        out[a, : a + 1] = [math.comb(a, b) % p for b in range(a + 1)]
    return out


def _table(ctx: AlgebraContext) -> np.ndarray:
    """``T[i, j, t]`` = coefficient of ``b(t)`` in ``b(i) b(j)``, reduced mod p.

    This is a vectorised cache of :func:`mult_basis`; degrees ``t > lambda2``
    are dropped because ``t`` only ranges over the table.
    """
    key = (ctx.characteristic, ctx.m)
    n = ctx.dim
    cached = _TABLES.get(key)
    if cached is not None and cached.shape[0] >= n:
        return cached[:n, :n, :n]
    size = max(n, 65)
    p = ctx.characteristic
    pascal = _pascal_mod(ctx.m + 2 * size + 1, p)
    i, j, s = np.meshgrid(np.arange(size), np.arange(size), np.arange(size), indexing="ij")
    t = j + s
    ok = (s <= i) & (t < size)
    i, j, s, t = i[ok], j[ok], s[ok], t[ok]
    coeff = pascal[t, i] * pascal[t, s] % p * pascal[ctx.m + j + i, i - s] % p
    table = np.zeros((size, size, size), dtype=np.int64)
    table[i, j, t] = coeff
    table.setflags(write=False)
    _TABLES[key] = table
    return table[:n, :n, :n]


def multiply(x: AlgebraElement, y: AlgebraElement) -> AlgebraElement:
    """Bilinear extension of :func:`mult_basis`."""
    x._same(y)
    ctx = x.context
    p = ctx.characteristic
    if p and p < _NUMPY_PRIME_LIMIT:
        xs = x.support()
        if not xs or not y:
            return ctx.zero()
        table = _table(ctx)
        xv = np.array([x.coeffs[i] for i in xs], dtype=np.int64)
        yv = np.array(y.coeffs, dtype=np.int64)
        partial = np.tensordot(xv, table[xs], axes=1) % p  # (j, t)
        z = (yv @ partial) % p
        return AlgebraElement(ctx, tuple(z.tolist()))
    coeffs = [ctx.coerce(0)] * ctx.dim
    ys = y.support()
    for i in x.support():
        for j in ys:
            xy = x.coeffs[i] * y.coeffs[j]
            for t, c in _truncated_terms(i, j, ctx):
                coeffs[t] += xy * c
    return ctx.element(coeffs)


# -- positive characteristic ------------------------------------------------


def _require_char(ctx: AlgebraContext, what: str, p: int | None = None) -> None:
    c = ctx.characteristic
    if (p is None and c == 0) or (p is not None and c != p):
        need = "positive characteristic" if p is None else f"characteristic {p}"
        raise Unsupported(f"{what} needs {need}, got {c}")


def factorize_basis(i: int, ctx: AlgebraContext) -> AlgebraElement:
    """Evaluate ``prod_t b(i_t p^t)`` over the p-adic digits of ``i``.

    The result should be exactly ``b(i)``; it is computed by multiplying the
    factors, not by looking ``b(i)`` up.
    """
    _require_char(ctx, "factorize_basis")
    if not 0 <= i <= ctx.lambda2:
        raise InvalidArgument(f"i={i} outside 0..{ctx.lambda2}")
    p = ctx.characteristic
    result = ctx.one()
    for t, d in enumerate(p_adic(i, p).digits):
        if d:
            result = result * ctx.basis(d * p**t)
    return result


def _check_power_of_two(t: int, ctx: AlgebraContext) -> None:
    _require_char(ctx, "square reduction", 2)
    if t < 0 or 2**t > ctx.lambda2:
        raise InvalidArgument(f"2^{t} exceeds lambda2={ctx.lambda2}")


def gamma(t: int, ctx: AlgebraContext) -> AlgebraElement:
    """``Gamma(t) = sum_{l=1}^{2^t-1} C(m, l) b(2^t - l)`` via its recursion.

    ``Gamma(0) = 0``, ``Gamma(1) = b(1)^2`` and
    ``Gamma(t) = b(2^{t-1})^2 + m_{t-1} Gamma(t-1)``, where the squares are
    themselves produced by the same recursion.
    """
    if t:
        _check_power_of_two(t - 1, ctx)
    else:
        _require_char(ctx, "gamma", 2)
    return _recursion(t, ctx)[0]


def _recursion(t: int, ctx: AlgebraContext) -> tuple[AlgebraElement, list[AlgebraElement]]:
    """Return ``Gamma(t)`` and ``[b(2^s)^2 for s < t]``."""
    m = ctx.m
    g = ctx.zero()
    squares: list[AlgebraElement] = []
    for s in range(t):
        squares.append(ctx.basis(2**s) * (g + digit(m, s)))
        # advance g from Gamma(s) to Gamma(s + 1)
        g = squares[s] + g * digit(m, s) if s else squares[0]
    return g, squares


def square_reduction(t: int, ctx: AlgebraContext) -> AlgebraElement:
    """``b(2^t)^2`` computed as ``b(2^t) (m_t + Gamma(t))``."""
    _check_power_of_two(t, ctx)
    g, _ = _recursion(t, ctx)
    return ctx.basis(2**t) * (g + digit(ctx.m, t))


def square_reduction_factor(s: int, ctx: AlgebraContext) -> AlgebraElement:
    """``psi_{m,s} = m_s + sum_{i=v-1}^{s-1} b(2^i)^2`` with ``b(2^s)^2 = b(2^s) psi``.

    ``v`` is the largest value in ``0..s`` with ``m_{v-1} = 0`` (``m_{-1} = 0``).
    Squares are taken with :func:`multiply` directly.
    """
    _check_power_of_two(s, ctx)
    m = ctx.m
    v = max(w for w in range(s + 1) if digit(m, w - 1) == 0)
    psi = ctx.scalar(digit(m, s))
    for i in range(max(v - 1, 0), s):
        b = ctx.basis(2**i)
        psi = psi + b * b
    return psi


def power_reduction_check(t: int, n: int, ctx: AlgebraContext) -> bool:
    """True iff ``b(p^t)^n = (n!)^2 b(n p^t) +`` terms of lower degree."""
    _require_char(ctx, "power_reduction_check")
    p = ctx.characteristic
    if not 1 <= n < p:
        raise InvalidArgument(f"n={n} must satisfy 1 <= n < p={p}")
    top = n * p**t
    if t < 0 or top > ctx.lambda2:
        raise InvalidArgument(f"n*p^t={top} exceeds lambda2={ctx.lambda2}")
    power = ctx.basis(p**t) ** n
    return power.degree == top and power.coeffs[top] == math.factorial(n) ** 2 % p


# -- characteristic zero -----------------------------------------------------


@dataclass(frozen=True)
class FPolynomial:
    """``F_k(T) = prod_{a=0}^{k-1} (T - a(m+a+1))`` with integer coefficients, constant term first."""

    m: int
    k: int
    coeffs: tuple[int, ...]

    @property
    def roots(self) -> list[int]:
        return [a * (self.m + a + 1) for a in range(self.k)]

    def __call__(self, x):
        acc = 0 * x
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def factored(self) -> str:
        parts = []
        for root in self.roots:
            parts.append("T" if root == 0 else f"(T-{root})")
        return "".join(parts) if len(parts) > 1 else parts[0]

    def __str__(self) -> str:
        terms = []
        for power in range(self.k, -1, -1):
            c = self.coeffs[power]
            if not c:
                continue
            mono = "" if power == 0 else ("T" if power == 1 else f"T^{power}")
            mag = abs(c)
            body = mono if (mag == 1 and mono) else (f"{mag}*{mono}" if mono else str(mag))
            sign = "-" if c < 0 else "+"
            terms.append((sign, body))
        out = ("-" if terms[0][0] == "-" else "") + terms[0][1]
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out


def f_polynomial(k: int, m: int) -> FPolynomial:
    if k < 1 or m < 0:
        raise InvalidArgument(f"need k >= 1 and m >= 0, got k={k}, m={m}")
    coeffs = [1]
    for root in (a * (m + a + 1) for a in range(k)):
        # multiply by (T - root)
        nxt = [0] * (len(coeffs) + 1)
        for i, c in enumerate(coeffs):
            nxt[i + 1] += c
            nxt[i] -= root * c
        coeffs = nxt
    return FPolynomial(m, k, tuple(coeffs))


def _b1(ctx: AlgebraContext) -> AlgebraElement:
    return ctx.basis(1) if ctx.lambda2 >= 1 else ctx.zero()


def char0_basis_identity(k: int, ctx: AlgebraContext) -> bool:
    """True iff ``(k!)^2 b(k) = F_k(b(1))`` in ``ctx`` (characteristic 0)."""
    if ctx.characteristic != 0:
        raise Unsupported("char0_basis_identity needs characteristic 0")
    if not 1 <= k <= ctx.lambda2:
        raise InvalidArgument(f"k={k} outside 1..{ctx.lambda2}")
    lhs = ctx.basis(k) * math.factorial(k) ** 2
    return lhs == f_polynomial(k, ctx.m)(_b1(ctx))


def minimal_polynomial_check(ctx: AlgebraContext) -> bool:
    """``F_{lambda2+1}(b(1)) = 0`` while ``F_k(b(1)) != 0`` for every ``k <= lambda2``."""
    if ctx.characteristic != 0:
        raise Unsupported("minimal_polynomial_check needs characteristic 0")
    x = _b1(ctx)
    if f_polynomial(ctx.lambda2 + 1, ctx.m)(x):
        return False
    return all(f_polynomial(k, ctx.m)(x) for k in range(1, ctx.lambda2 + 1))


def powers_of_b1_independent(ctx: AlgebraContext) -> bool:
    """``1, b(1), ..., b(1)^lambda2`` are linearly independent over Q."""
    if ctx.characteristic != 0:
        raise Unsupported("powers_of_b1_independent needs characteristic 0")
    x = _b1(ctx)
    rows: list[Sequence] = []
    power = ctx.one()
    for _ in range(ctx.dim):
        rows.append(power.coeffs)
        power = power * x
    return rank_rational(rows) == ctx.dim
