"""Exact linear algebra over a small finite field GF(q).

Elements of GF(q) are integers in ``range(q)``.  For a prime field they are
residues; for ``q = p^e`` they encode the coefficient vector of the element
in base ``p`` (digit ``s`` is the coefficient of ``w^s``).  Prime fields use
plain modular arithmetic, extension fields use lookup tables.

All routines take and return ``numpy`` integer arrays and never mutate their
inputs.
"""

from __future__ import annotations

from typing import Sequence

import numpy as np


class SmallField:
    """Arithmetic in GF(q) on integer-encoded elements, scalar and vectorised."""

    def __init__(self, p: int, e: int = 1, add=None, mul=None):
        self.p = p
        self.e = e
        self.q = p**e
        if e == 1:
            self._add = self._mul = None
            self._inv = np.array([0] + [pow(a, -1, p) for a in range(1, p)], dtype=np.int64)
            self._neg = (-np.arange(p, dtype=np.int64)) % p
        else:
            self._add = np.asarray(add, dtype=np.int64)
            self._mul = np.asarray(mul, dtype=np.int64)
            zero_col = np.argmax(self._add == 0, axis=1)
            self._neg = zero_col.astype(np.int64)
            inv = np.zeros(self.q, dtype=np.int64)
            for a in range(1, self.q):
                inv[a] = int(np.argmax(self._mul[a] == 1))
            self._inv = inv

    @classmethod
    def prime(cls, p: int) -> "SmallField":
        return cls(p, 1)

    @property
    def is_prime_field(self) -> bool:
        return self.e == 1

    def __repr__(self) -> str:
        return f"SmallField(q={self.q})"

    def __eq__(self, other) -> bool:
        if not isinstance(other, SmallField) or (self.p, self.e) != (other.p, other.e):
            return False
        if self.e == 1:
            return True
        return bool(np.array_equal(self._mul, other._mul))

    def __hash__(self) -> int:
        return hash((self.p, self.e))

    # vectorised ops (accept scalars or arrays)
    def add(self, a, b):
        if self._add is None:
            return (np.asarray(a) + np.asarray(b)) % self.p
        return self._add[a, b]

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def neg(self, a):
        return self._neg[a]

    def mul(self, a, b):
        if self._mul is None:
            return (np.asarray(a) * np.asarray(b)) % self.p
        return self._mul[a, b]

    def inv(self, a):
        return self._inv[a]

    def digits(self, a: int) -> list[int]:
        """Base-p digits of an encoded element (coefficients of w^0 .. w^{e-1})."""
        out = []
        for _ in range(self.e):
            out.append(a % self.p)
            a //= self.p
        return out

    def from_digits(self, digits: Sequence[int]) -> int:
        value = 0
        for d in reversed(list(digits)):
            value = value * self.p + int(d) % self.p
        return value

    def dot(self, coeffs: np.ndarray, rows: np.ndarray) -> np.ndarray:
        """Linear combinations ``coeffs @ rows`` over GF(q).

        ``coeffs`` has shape (B, k) and ``rows`` shape (k, m).
        """
        coeffs = np.asarray(coeffs, dtype=np.int64)
        rows = np.asarray(rows, dtype=np.int64)
        if self._mul is None:
            return (coeffs @ rows) % self.p
        out = np.zeros((coeffs.shape[0], rows.shape[1]), dtype=np.int64)
        for t in range(rows.shape[0]):
            out = self._add[out, self._mul[coeffs[:, t:t + 1], rows[t][None, :]]]
        return out


def rref(matrix, field: SmallField) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form and pivot columns.

    Pivot is the leftmost nonzero column; within a column the first
    remaining row with a nonzero entry is chosen; pivots are scaled to 1.
    """
    a = np.array(matrix, dtype=np.int64, copy=True)
    if a.ndim != 2:
        raise ValueError("rref expects a 2-d array")
    rows, cols = a.shape
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.nonzero(a[r:, c])[0]
        if nz.size == 0:
            continue
        piv = r + int(nz[0])
        if piv != r:
            a[[r, piv]] = a[[piv, r]]
        a[r] = field.mul(field.inv(a[r, c]), a[r])
        for i in range(rows):
            if i != r and a[i, c]:
                a[i] = field.sub(a[i], field.mul(a[i, c], a[r]))
        pivots.append(c)
        r += 1
    return a[:r], pivots


def rank(matrix, field: SmallField) -> int:
    m = np.asarray(matrix)
    if m.size == 0:
        return 0
    return len(rref(m, field)[1])


def nullspace(matrix, field: SmallField) -> np.ndarray:
    """Basis (as rows) of the right kernel ``{x : matrix @ x = 0}``."""
    a = np.asarray(matrix, dtype=np.int64)
    cols = a.shape[1]
    if a.shape[0] == 0:
        return np.eye(cols, dtype=np.int64)
    r, pivots = rref(a, field)
    free = [c for c in range(cols) if c not in pivots]
    basis = np.zeros((len(free), cols), dtype=np.int64)
    for row, f in enumerate(free):
        basis[row, f] = 1
        for i, pc in enumerate(pivots):
            basis[row, pc] = field.neg(r[i, f])
    return basis


def inverse(matrix, field: SmallField) -> np.ndarray:
    a = np.asarray(matrix, dtype=np.int64)
    n = a.shape[0]
    aug = np.concatenate([a, np.eye(n, dtype=np.int64)], axis=1)
    r, pivots = rref(aug, field)
    if pivots[:n] != list(range(n)) or len(pivots) < n:
        raise ArithmeticError("matrix is singular")
    return r[:, n:]


def solve_in_span(basis_rows, vector, field: SmallField) -> np.ndarray | None:
    """Coefficients ``x`` with ``x @ basis_rows == vector``, or None if outside the span."""
    b = np.asarray(basis_rows, dtype=np.int64)
    v = np.asarray(vector, dtype=np.int64)
    k = b.shape[0]
    if k == 0:
        return np.zeros(0, dtype=np.int64) if not v.any() else None
    aug = np.concatenate([b.T, v[:, None]], axis=1)
    r, pivots = rref(aug, field)
    if k in pivots:
        return None
    x = np.zeros(k, dtype=np.int64)
    for i, pc in enumerate(pivots):
        x[pc] = r[i, k]
    return x


def in_span(basis_rows, vector, field: SmallField) -> bool:
    return solve_in_span(basis_rows, vector, field) is not None


def same_span(rows_a, rows_b, field: SmallField) -> bool:
    ra = np.asarray(rows_a, dtype=np.int64)
    rb = np.asarray(rows_b, dtype=np.int64)
    ka, kb = rank(ra, field), rank(rb, field)
    if ka != kb:
        return False
    if ka == 0:
        return True
    return rank(np.concatenate([ra, rb]), field) == ka


def batched_rank(mats: np.ndarray, field: SmallField) -> np.ndarray:
    """Ranks of a stack of matrices of shape (B, rows, cols)."""
    a = np.asarray(mats)
    if a.ndim != 3:
        raise ValueError("expected a (B, rows, cols) stack")
    if field.q == 2 and a.shape[2] <= 62:
        return _batched_rank_gf2(a)
    return _batched_rank_general(a, field)


def pack_gf2(a: np.ndarray) -> np.ndarray:
    """Rows of 0/1 matrices (..., rows, cols) as integer bitmasks (..., rows)."""
    cols = a.shape[-1]
    return ((np.asarray(a, dtype=np.int64) & 1) << np.arange(cols, dtype=np.int64)).sum(axis=-1)


def _batched_rank_gf2(a: np.ndarray) -> np.ndarray:
    return batched_rank_packed(pack_gf2(a), a.shape[2])


def batched_rank_packed(packed: np.ndarray, cols: int) -> np.ndarray:
    """GF(2) ranks of matrices given as (B, rows) row bitmasks; elimination is XOR."""
    packed = np.array(packed, dtype=np.int64, copy=True)
    bsz, rows = packed.shape
    used = np.zeros((bsz, rows), dtype=bool)
    r = np.zeros(bsz, dtype=np.int64)
    idx = np.arange(bsz)
    for c in range(cols):
        bit = ((packed >> c) & 1).astype(bool)
        cand = bit & ~used
        has = cand.any(axis=1)
        if not has.any():
            continue
        piv = np.argmax(cand, axis=1)
        pivrow = np.where(has, packed[idx, piv], 0)
        hit = bit & has[:, None]
        hit[idx, piv] = False
        packed ^= np.where(hit, pivrow[:, None], 0)
        used[idx[has], piv[has]] = True
        r += has
    return r


def _batched_rank_general(a: np.ndarray, field: SmallField) -> np.ndarray:
    # Gauss-Jordan without row swaps: pivot rows are only marked as used
    a = np.array(a, dtype=np.int32 if field.is_prime_field else np.int64, copy=True)
    bsz, rows, cols = a.shape
    used = np.zeros((bsz, rows), dtype=bool)
    r = np.zeros(bsz, dtype=np.int64)
    idx = np.arange(bsz)
    for c in range(cols):
        col = a[:, :, c]
        cand = (col != 0) & ~used
        has = cand.any(axis=1)
        if not has.any():
            continue
        piv = np.argmax(cand, axis=1)
        pivrow = a[idx, piv]
        pivrow = field.mul(field.inv(pivrow[:, c])[:, None], pivrow).astype(a.dtype)
        factors = np.where(has[:, None], col, 0)
        factors[idx, piv] = 0
        upd = field.mul(factors[:, :, None], pivrow[:, None, c:])
        a[:, :, c:] = field.sub(a[:, :, c:], upd)
        used[idx[has], piv[has]] = True
        r += has
    return r
