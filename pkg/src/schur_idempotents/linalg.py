"""Exact rank computations over F_p and Q."""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

import numpy as np


def _pack(row) -> int:
    bits = np.asarray(row, dtype=np.int64) & 1
    return int.from_bytes(np.packbits(bits.astype(np.uint8), bitorder="little").tobytes(), "little")


def rank_gf2(rows: Iterable[Sequence[int]]) -> int:
    """Rank over F_2; each row is packed into a Python int and reduced by XOR."""
    basis: dict[int, int] = {}  # leading bit -> reduced row
    for row in rows:
        v = _pack(row)
        while v:
            top = v.bit_length() - 1
            if top not in basis:
                basis[top] = v
                break
            v ^= basis[top]
    return len(basis)


def rank_mod_p(matrix, p: int) -> int:
    """Rank over F_p, reducing one row at a time against the pivots found so far.

    Entries are reduced mod p first.  ``p`` must be small enough that
    ``p * p`` fits in int64.
    """
    a = np.array(matrix, dtype=np.int64) % p
    if a.ndim != 2 or a.size == 0:
        return 0
    if p == 2:
        return rank_gf2(a)
    pivots: list[tuple[int, np.ndarray]] = []
    for row in a:
        v = row.copy()
        for col, prow in pivots:
            if v[col]:
                v = (v - v[col] * prow) % p
        nz = np.flatnonzero(v)
        if nz.size:
            col = int(nz[0])
            v = v * pow(int(v[col]), -1, p) % p
            pivots.append((col, v))
    return len(pivots)


def rank_rational(rows: Sequence[Sequence]) -> int:
    """Rank over Q of a matrix with integer or Fraction entries."""
    a = [[Fraction(x) for x in row] for row in rows]
    if not a:
        return 0
    ncols = len(a[0])
    rank = 0
    for col in range(ncols):
        piv = next((i for i in range(rank, len(a)) if a[i][col] != 0), None)
        if piv is None:
            continue
        a[rank], a[piv] = a[piv], a[rank]
        pivot_row = a[rank]
        for i in range(rank + 1, len(a)):
            f = a[i][col] / pivot_row[col]
            if f:
                a[i] = [x - f * y for x, y in zip(a[i], pivot_row)]
        rank += 1
        if rank == len(a):
            break
    return rank
