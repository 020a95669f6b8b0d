"""Primitive orthogonal idempotents of ``S_K(lambda)`` in characteristic two.

For every ``g`` with ``B(m, g) = binom(m + 2g, g)`` odd and ``g <= lambda2``,

    e_{m,g} = prod_{u in J} b(2^u) * prod_{u in I} (1 - b(2^u)),

where ``I`` / ``J`` are the positions at which ``m + 2g`` has a 1 and ``g``
has a 0 / 1.  These elements are checked here, exactly, to be idempotent,
pairwise orthogonal and to sum to the identity; the verification functions
return reports instead of raising so that grid sweeps always complete.
"""

from __future__ import annotations

import itertools
import json
import math
from dataclasses import dataclass, field
from typing import Iterable

from .centraliser_algebra import AlgebraContext, AlgebraElement, square_reduction_factor
from .errors import CostBoundExceeded, InvalidArgument, OutOfDegree, Unsupported, ZeroElement
from .linalg import rank_gf2
from .padic_arith import IndexSets, digit, index_sets, kostka_cell, kostka_entry

__all__ = [
    "IdempotentDescriptor",
    "VerificationReport",
    "BlockDescription",
    "describe",
    "build_idempotent",
    "build_truncated",
    "admissible_g",
    "verify_complete_set",
    "zero_columns",
    "orthogonality_check",
    "block_description",
    "block_basis_elements",
    "block_basis_independent",
    "block_basis_spans",
    "exhaustive_idempotent_scan",
    "subset_sums",
    "SCAN_LIMIT",
]

SCAN_LIMIT = 12


@dataclass(frozen=True)
class IdempotentDescriptor:
    """Symbolic form of ``e_{m,g}``.

    ``factors`` lists ``("b", u)`` for ``u`` in ``J`` and then ``("1-b", u)``
    for ``u`` in ``I``, both ascending.  ``degree`` is the largest nonzero
    column of the binary table of ``B(m, g)`` (None when ``m + 2g = 0``).
    """

    m: int
    g: int
    index_sets: IndexSets
    factors: tuple[tuple[str, int], ...]
    degree: int | None
    truncation: int | None = None
    strict: bool = False

    def positions(self) -> list[int]:
        return [u for _, u in self.factors]

    def factored(self) -> str:
        parts = []
        for kind, u in self.factors:
            parts.append(f"b({2**u})" if kind == "b" else f"(1+b({2**u}))")
        return "*".join(parts) if parts else "1"


def describe(m: int, g: int, t: int | None = None, strict: bool = False) -> IdempotentDescriptor:
    """Factor list of ``e_{m,g}``, or of its truncation to positions ``<= t`` (``< t`` if strict)."""
    if not kostka_entry(m, g, 2):
        raise ZeroElement(f"B({m},{g}) = binom({m + 2 * g},{g}) is even; e_{{{m},{g}}} would be zero")
    sets = index_sets(m, g)

    def keep(u):
        return t is None or (u < t if strict else u <= t)

    factors = tuple(("b", u) for u in sorted(sets.J) if keep(u))
    factors += tuple(("1-b", u) for u in sorted(sets.I) if keep(u))
    return IdempotentDescriptor(m, g, sets, factors, kostka_cell(m, g, 2).degree, t, strict)


def _check_context(m: int, g: int, ctx: AlgebraContext) -> None:
    if ctx.characteristic != 2:
        raise Unsupported(f"idempotents are only constructed in characteristic 2, got {ctx.characteristic}")
    if ctx.m != m:
        raise InvalidArgument(f"context has m={ctx.m}, asked for m={m}")
    if g < 0:
        raise InvalidArgument(f"g must be a natural number, got {g}")
    if m + 2 * g > ctx.r:
        raise OutOfDegree(f"m+2g = {m + 2 * g} exceeds r = {ctx.r}")


def _evaluate(desc: IdempotentDescriptor, ctx: AlgebraContext) -> AlgebraElement:
    result = ctx.one()
    for kind, u in desc.factors:
        a = 2**u
        if a > ctx.lambda2:
            # b(a) = 0 here; a J-factor cannot reach this when g <= lambda2
            assert kind == "1-b", f"J-position {u} beyond lambda2={ctx.lambda2}"
            continue
        b = ctx.basis(a)
        result = result * (b if kind == "b" else 1 - b)
    return result


def build_idempotent(m: int, g: int, ctx: AlgebraContext) -> AlgebraElement:
    _check_context(m, g, ctx)
    return _evaluate(describe(m, g), ctx)


def build_truncated(m: int, g: int, t: int, ctx: AlgebraContext, strict: bool = False) -> AlgebraElement:
    """``(e_{m,g})_{<=t}``, or ``(e_{m,g})_{<t}`` with ``strict=True``."""
    _check_context(m, g, ctx)
    return _evaluate(describe(m, g, t, strict), ctx)


def admissible_g(m: int, ctx: AlgebraContext) -> list[int]:
    """All ``g`` with ``B(m, g)`` odd and ``m + 2g <= r``, ascending."""
    if ctx.characteristic != 2:
        raise Unsupported("admissible_g needs characteristic 2")
    if ctx.m != m:
        raise InvalidArgument(f"context has m={ctx.m}, asked for m={m}")
    return [g for g in range(ctx.lambda2 + 1) if kostka_entry(m, g, 2)]


@dataclass
class VerificationReport:
    m: int
    lambda2: int
    r: int
    admissible_g: list[int]
    nonzero: list[bool] = field(default_factory=list)
    idempotent: list[bool] = field(default_factory=list)
    orthogonal: list[tuple[int, int, bool]] = field(default_factory=list)
    sum_is_identity: bool = False
    count_matches: bool = False

    @property
    def passed(self) -> bool:
        return (
            all(self.nonzero)
            and all(self.idempotent)
            and all(ok for _, _, ok in self.orthogonal)
            and self.sum_is_identity
            and self.count_matches
        )

    def to_dict(self) -> dict:
        return {
            "m": self.m,
            "lambda2": self.lambda2,
            "r": self.r,
            "admissible_g": list(self.admissible_g),
            "idempotent": list(self.idempotent),
            "orthogonal": [{"g": g, "d": d, "ok": ok} for g, d, ok in self.orthogonal],
            "sum_is_identity": self.sum_is_identity,
            "count_matches": self.count_matches,
            "pass": self.passed,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


def verify_complete_set(m: int, ctx: AlgebraContext) -> VerificationReport:
    """Run every check on the complete idempotent set in one context.

    The count check is made against ``math.comb`` parities, independently of
    the Lucas-theorem path used by :func:`admissible_g`, and also requires the
    constructed elements to be pairwise distinct.
    """
    gs = admissible_g(m, ctx)
    report = VerificationReport(m, ctx.lambda2, ctx.r, gs)
    elems = {g: build_idempotent(m, g, ctx) for g in gs}
    for g in gs:
        e = elems[g]
        report.nonzero.append(bool(e))
        report.idempotent.append(e * e == e)
    for g, d in itertools.combinations(gs, 2):
        report.orthogonal.append((g, d, (elems[g] * elems[d]).is_zero()))
    total = ctx.zero()
    for e in elems.values():
        total = total + e
    report.sum_is_identity = total == ctx.one()
    expected = sum(1 for g in range(ctx.lambda2 + 1) if math.comb(m + 2 * g, g) % 2)
    distinct = len(set(elems.values()))
    report.count_matches = expected == len(gs) == distinct
    return report


def zero_columns(m: int, g: int, ctx: AlgebraContext) -> list[int]:
    """Positions ``s`` with ``2^s <= lambda2`` where both digits of ``B(m, g)`` vanish."""
    total = m + 2 * g
    out = []
    s = 0
    while 2**s <= ctx.lambda2:
        if digit(total, s) == 0 and digit(g, s) == 0:
            out.append(s)
        s += 1
    return out


def orthogonality_check(m: int, g: int, s: int, ctx: AlgebraContext) -> bool:
    """``e^2 b(2^s)^2 = 0`` and ``(e_{<s})^2 psi_{m,s} = 0`` for a zero column ``s``."""
    _check_context(m, g, ctx)
    if not kostka_entry(m, g, 2):
        raise ZeroElement(f"B({m},{g}) is even")
    if s < 0 or 2**s > ctx.lambda2:
        raise InvalidArgument(f"2^{s} exceeds lambda2={ctx.lambda2}")
    if digit(m + 2 * g, s) or digit(g, s):
        raise InvalidArgument(f"column {s} of B({m},{g}) is not zero")
    e = build_idempotent(m, g, ctx)
    b = ctx.basis(2**s)
    full = (e * e) * (b * b)
    below = build_truncated(m, g, s, ctx, strict=True)
    partial = (below * below) * square_reduction_factor(s, ctx)
    return full.is_zero() and partial.is_zero()


@dataclass(frozen=True)
class BlockDescription:
    m: int
    g: int
    basis_degrees: tuple[int, ...]
    generator_degrees: tuple[int, ...]

    @property
    def dimension(self) -> int:
        return len(self.basis_degrees)

    def to_dict(self) -> dict:
        return {
            "m": self.m,
            "g": self.g,
            "basis_degrees": list(self.basis_degrees),
            "generator_degrees": list(self.generator_degrees),
            "dimension": self.dimension,
        }


def block_description(m: int, g: int, ctx: AlgebraContext) -> BlockDescription:
    """Basis and generator degrees of the block ``e_{m,g} S_K(lambda)``.

    A degree ``a`` qualifies when its binary 1s sit only where ``m + 2g`` has
    a 0 and ``a + g <= lambda2``.  The lowest term of ``e_{m,g} b(a)`` is
    ``b(g + a)`` with coefficient 1, so the second condition is exactly
    ``e_{m,g} b(a) != 0`` once degrees above ``lambda2`` are dropped.
    Generators are the powers of two among the basis degrees.
    """
    _check_context(m, g, ctx)
    if not kostka_entry(m, g, 2):
        raise InvalidArgument(f"g={g} is not admissible for m={m}")
    total = m + 2 * g
    basis = tuple(a for a in range(ctx.lambda2 - g + 1) if a & total == 0)
    gens = tuple(a for a in basis if a and a & (a - 1) == 0)
    return BlockDescription(m, g, basis, gens)


def block_basis_elements(m: int, g: int, ctx: AlgebraContext) -> list[AlgebraElement]:
    desc = block_description(m, g, ctx)
    e = build_idempotent(m, g, ctx)
    return [e * ctx.basis(a) for a in desc.basis_degrees]


def block_basis_independent(m: int, g: int, ctx: AlgebraContext) -> bool:
    elems = block_basis_elements(m, g, ctx)
    return rank_gf2(x.coeffs for x in elems) == len(elems)


def block_basis_spans(m: int, g: int, ctx: AlgebraContext) -> bool:
    """The block basis has as many elements as ``e_{m,g} b(a)`` over all ``a`` span."""
    e = build_idempotent(m, g, ctx)
    full = rank_gf2((e * ctx.basis(a)).coeffs for a in range(ctx.dim))
    return full == block_description(m, g, ctx).dimension


def exhaustive_idempotent_scan(ctx: AlgebraContext, limit: int = SCAN_LIMIT) -> frozenset[AlgebraElement]:
    """Every ``x`` in the F_2-span of the basis with ``x * x == x``, by brute force."""
    if ctx.characteristic != 2:
        raise Unsupported("exhaustive_idempotent_scan needs characteristic 2")
    if ctx.lambda2 > limit:
        raise CostBoundExceeded(f"lambda2={ctx.lambda2} exceeds scan limit {limit}")
    found = set()
    for bits in itertools.product((0, 1), repeat=ctx.dim):
        x = ctx.element(bits)
        if x * x == x:
            found.add(x)
    return frozenset(found)


def subset_sums(elements: Iterable[AlgebraElement], ctx: AlgebraContext) -> frozenset[AlgebraElement]:
    elements = list(elements)
    out = set()
    for mask in itertools.product((0, 1), repeat=len(elements)):
        total = ctx.zero()
        for keep, e in zip(mask, elements):
            if keep:
                total = total + e
        out.add(total)
    return frozenset(out)
