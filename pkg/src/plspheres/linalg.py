"""Exact linear algebra over prime fields and the rationals.

Prime-field elimination is done here with numpy int64 arrays, which is exact
as long as ``p < 2**31`` (products of two residues stay below ``2**62``).
Rational elimination delegates to FLINT via ``python-flint``.
"""

from __future__ import annotations

from fractions import Fraction

import numpy as np

MERSENNE31 = 2147483647


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    i = 3
    while i * i <= n:
        if n % i == 0:
            return False
        i += 2
    return True


def rref_mod_p(rows, p: int, ncols: int | None = None) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form over GF(p); returns (nonzero rows, pivot columns)."""
    if p >= 2**31:
        raise ValueError("modulus must be below 2**31")
    a = np.array(rows, dtype=np.int64)
    if a.size == 0:
        width = ncols if ncols is not None else (a.shape[1] if a.ndim == 2 else 0)
        return np.zeros((0, width), dtype=np.int64), []
    a %= p
    nrows, width = a.shape
    pivots: list[int] = []
    r = 0
    for col in range(width):
        if r == nrows:
            break
        nz = np.flatnonzero(a[r:, col])
        if nz.size == 0:
            continue
        piv = r + int(nz[0])
        if piv != r:
            a[[r, piv]] = a[[piv, r]]
        inv = pow(int(a[r, col]), p - 2, p)
        a[r] = (a[r] * inv) % p
        colv = a[:, col].copy()
        colv[r] = 0
        hit = np.flatnonzero(colv)
        if hit.size:
            a[hit] = (a[hit] - (np.outer(colv[hit], a[r]) % p)) % p
        pivots.append(col)
        r += 1
    return a[:r], pivots


def rank_mod_p(rows, p: int) -> int:
    a = np.array(rows, dtype=np.int64)
    if a.size == 0:
        return 0
    a %= p
    nrows, width = a.shape
    r = 0
    for col in range(width):
        if r == nrows:
            break
        nz = np.flatnonzero(a[r:, col])
        if nz.size == 0:
            continue
        piv = r + int(nz[0])
        if piv != r:
            a[[r, piv]] = a[[piv, r]]
        inv = pow(int(a[r, col]), p - 2, p)
        a[r] = (a[r] * inv) % p
        below = a[r + 1:, col]
        hit = np.flatnonzero(below) + r + 1
        if hit.size:
            a[hit] = (a[hit] - (np.outer(a[hit, col], a[r]) % p)) % p
        r += 1
    return r


def rref_rational(rows, ncols: int) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form over Q; entries may be ints or Fractions."""
    import flint

    rows = [list(r) for r in rows]
    if not rows or ncols == 0:
        return [], []
    m = flint.fmpq_mat(len(rows), ncols, [_to_fmpq(x) for r in rows for x in r])
    red, rank = m.rref()
    out = []
    pivots = []
    for i in range(rank):
        row = [Fraction(int(red[i, j].p), int(red[i, j].q)) for j in range(ncols)]
        pivots.append(next(j for j, x in enumerate(row) if x != 0))
        out.append(row)
    return out, pivots


def rank_rational(rows, ncols: int) -> int:
    import flint

    rows = [list(r) for r in rows]
    if not rows or ncols == 0:
        return 0
    return flint.fmpq_mat(len(rows), ncols, [_to_fmpq(x) for r in rows for x in r]).rank()


def _to_fmpq(x):
    import flint

    if isinstance(x, Fraction):
        return flint.fmpq(x.numerator, x.denominator)
    return flint.fmpq(int(x))
