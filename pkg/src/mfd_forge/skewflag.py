"""Skew polynomials in sigma-bar = sigma - id, the kernel flag, and matrix representations.

Here ``n = p^m`` and sigma is the q-Frobenius of L over F (characteristic p),
so sigma-bar is nilpotent of order n and its kernels

    F_i = ker(sigma_bar^i),  i = 0..n,

form a full flag of F-subspaces of L.  A basis B = (b_1, ..., b_n) of L is
compatible with the flag when span(b_1..b_i) = F_i for every i.  The matrix of
an F-linear map f w.r.t. B has column c equal to the B-coordinates of f(b_c).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from . import linalg
from .errors import CoordinateNotInSubfield, NotPrimePowerOrder, OrderMismatch, SpecMismatch
from .ferrers import FerrersDiagram
from .field import FieldElement, TowerSpec, gamma_power, is_in_base_subfield


def _is_power_of(n: int, p: int) -> bool:
    while n % p == 0:
        n //= p
    return n == 1


@dataclass(frozen=True)
class SkewPoly:
    """sum_i coeffs[i] * sigma_bar^i, with ``len(coeffs) == n``."""

    tower: TowerSpec
    coeffs: tuple[FieldElement, ...]

    def __post_init__(self):
        if len(self.coeffs) != self.tower.n:
            raise ValueError(f"expected {self.tower.n} coefficients, got {len(self.coeffs)}")
        for c in self.coeffs:
            self.tower.check(c)

    @classmethod
    def monomial(cls, tower: TowerSpec, coeff: FieldElement, power: int) -> "SkewPoly":
        cs = [tower.big.zero()] * tower.n
        cs[power] = coeff
        return cls(tower, tuple(cs))

    @classmethod
    def from_terms(cls, tower: TowerSpec, terms: Sequence[tuple[int, FieldElement]]) -> "SkewPoly":
        cs = [tower.big.zero()] * tower.n
        for power, coeff in terms:
            cs[power] = cs[power] + coeff
        return cls(tower, tuple(cs))

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.coeffs)

    @property
    def degree(self) -> int | None:
        """sigma-bar degree; None for the zero polynomial."""
        for i in range(len(self.coeffs) - 1, -1, -1):
            if not self.coeffs[i].is_zero():
                return i
        return None

    def __add__(self, other: "SkewPoly") -> "SkewPoly":
        if other.tower is not self.tower:
            raise SpecMismatch("skew polynomials over different towers")
        return SkewPoly(self.tower, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def terms(self) -> list[tuple[int, list[int]]]:
        """Serialised form: (sigma-bar power, coefficient list) for nonzero terms."""
        return [(i, list(c.coeffs)) for i, c in enumerate(self.coeffs) if not c.is_zero()]

    def __call__(self, alpha: FieldElement) -> FieldElement:
        return evaluate(self, alpha)


def _sigma_bar_vec(tower: TowerSpec, v: np.ndarray) -> np.ndarray:
    return (tower.frobenius @ v - v) % tower.p


def evaluate(f: SkewPoly, alpha: FieldElement) -> FieldElement:
    tower = f.tower
    tower.check(alpha)
    v = alpha.to_array()
    acc = tower.big.zero()
    for i, lam in enumerate(f.coeffs):
        if i:
            v = _sigma_bar_vec(tower, v)
        if not lam.is_zero():
            acc = acc + lam * FieldElement(tower.big, tuple(int(x) for x in v))
    return acc


def compose(f: SkewPoly, g: SkewPoly):
    """The map alpha -> f(g(alpha)); products are checked through evaluation only."""
    return lambda alpha: evaluate(f, evaluate(g, alpha))


def f_linear_solve(tower: TowerSpec, vectors: Sequence[FieldElement]) -> np.ndarray:
    """Reduced echelon basis (rows of F-coordinates) of the F-span of ``vectors``."""
    for v in vectors:
        tower.check(v)
    if not vectors:
        return np.zeros((0, tower.n), dtype=np.int64)
    rows = tower.coords_many(np.array([v.coeffs for v in vectors], dtype=np.int64))
    echelon, _ = linalg.rref(rows, tower.base)
    return echelon


def sigma_bar_power_matrix(tower: TowerSpec, j: int) -> np.ndarray:
    """Matrix over F (in the gamma power basis) of sigma_bar^j, images as columns."""
    vecs = np.array([g.coeffs for g in tower.power_basis()], dtype=np.int64)
    for _ in range(j):
        vecs = (vecs @ tower.frobenius.T - vecs) % tower.p
    return tower.coords_many(vecs).T


@dataclass(frozen=True, eq=False)
class FlagData:
    tower: TowerSpec
    spaces: tuple[np.ndarray, ...] = field(repr=False)   # echelon F-basis rows of F_0..F_n
    basis: tuple[FieldElement, ...] = field(repr=False)
    _basis_inv: np.ndarray = field(repr=False)          # gamma-coords -> B-coords

    @property
    def n(self) -> int:
        return self.tower.n

    def b_coords(self, alpha: FieldElement) -> np.ndarray:
        return self.b_coords_many(alpha.to_array()[None, :])[0]

    def b_coords_many(self, raw: np.ndarray) -> np.ndarray:
        g = self.tower.coords_many(raw)
        return self.tower.base.dot(g, self._basis_inv.T)

    def dim(self, i: int) -> int:
        return int(self.spaces[i].shape[0])

    def contains(self, i: int, alpha: FieldElement) -> bool:
        """Membership of alpha in F_i."""
        return linalg.in_span(self.spaces[i], self.tower.coords(alpha), self.tower.base)


def _require_modular(tower: TowerSpec) -> None:
    if not _is_power_of(tower.n, tower.p):
        raise NotPrimePowerOrder(f"n = {tower.n} is not a power of the characteristic {tower.p}")


def flag_spaces(tower: TowerSpec) -> tuple[np.ndarray, ...]:
    _require_modular(tower)
    field_ = tower.base
    spaces = []
    for i in range(tower.n + 1):
        m = sigma_bar_power_matrix(tower, i)
        ker = linalg.nullspace(m, field_)
        spaces.append(linalg.rref(ker, field_)[0] if ker.shape[0] else ker)
    return tuple(spaces)


def _default_basis(tower: TowerSpec, spaces: Sequence[np.ndarray]) -> list[np.ndarray]:
    field_ = tower.base
    chosen: list[np.ndarray] = []
    for i in range(1, tower.n + 1):
        span = np.array(chosen, dtype=np.int64).reshape(len(chosen), tower.n)
        ech, piv = linalg.rref(span, field_) if chosen else (span, [])
        for cand in spaces[i]:
            if chosen and linalg.in_span(span, cand, field_):
                continue
            v = cand.copy()
            for row, pc in zip(ech, piv):
                if v[pc]:
                    v = field_.sub(v, field_.mul(v[pc], row))
            lead = int(np.nonzero(v)[0][0])
            v = field_.mul(field_.inv(v[lead]), v)
            chosen.append(v)
            break
    return chosen


def verify_compatible_basis(tower: TowerSpec, candidate: Sequence[FieldElement],
                            spaces: Sequence[np.ndarray] | None = None) -> tuple[bool, str | None]:
    """Check that each prefix of ``candidate`` spans the matching flag space."""
    if len(candidate) != tower.n:
        return False, f"expected {tower.n} elements, got {len(candidate)}"
    for b in candidate:
        tower.check(b)
    if spaces is None:
        spaces = flag_spaces(tower)
    field_ = tower.base
    rows = tower.coords_many(np.array([b.coeffs for b in candidate], dtype=np.int64))
    for i in range(1, tower.n + 1):
        if not linalg.same_span(rows[:i], spaces[i], field_):
            return False, f"span of the first {i} elements is not F_{i}"
    return True, None


def build_flag(tower: TowerSpec, basis: Sequence[FieldElement] | None = None) -> FlagData:
    """Kernel flag of sigma-bar plus a compatible basis (``basis`` if given, else deterministic)."""
    from .errors import InvalidBasis

    spaces = flag_spaces(tower)
    if basis is None:
        rows = np.array(_default_basis(tower, spaces), dtype=np.int64)
        elems = tuple(tower.from_coords(r) for r in rows)
    else:
        ok, detail = verify_compatible_basis(tower, basis, spaces)
        if not ok:
            raise InvalidBasis(detail)
        elems = tuple(basis)
        rows = tower.coords_many(np.array([b.coeffs for b in elems], dtype=np.int64))
    basis_inv = linalg.inverse(rows.T, tower.base)
    return FlagData(tower, spaces, elems, basis_inv)


def basis_from_exponents(tower: TowerSpec, exponents: Sequence[int]) -> list[FieldElement]:
    return [gamma_power(tower, e) for e in exponents]


def matrix_of(f: SkewPoly, flag: FlagData) -> np.ndarray:
    """n x n matrix over F (encoded entries) of f in the basis of ``flag``."""
    tower = flag.tower
    if f.tower is not tower:
        raise SpecMismatch("polynomial and flag use different towers")
    images = np.array([evaluate(f, b).coeffs for b in flag.basis], dtype=np.int64)
    mat = flag.b_coords_many(images).T
    # consistency: re-expand each column and compare with the image
    recon = tower.from_coords_many(tower.base.dot(mat.T, _basis_gamma_rows(flag)))
    if not np.array_equal(recon, images % tower.p):
        raise CoordinateNotInSubfield("image is not an F-combination of the basis")
    return mat


def _basis_gamma_rows(flag: FlagData) -> np.ndarray:
    return flag.tower.coords_many(np.array([b.coeffs for b in flag.basis], dtype=np.int64))


def monotone_space_basis(D: FerrersDiagram, flag: FlagData, max_degree: int | None = None
                         ) -> list[SkewPoly]:
    """Generators b_t * sigma_bar^(i-1) for t <= c_i and i-1 <= max_degree.

    Ordered by i, then t.  ``max_degree=None`` keeps every sigma-bar power.
    """
    tower = flag.tower
    if D.n != tower.n:
        raise OrderMismatch(f"diagram order {D.n} differs from tower degree {tower.n}")
    top = tower.n - 1 if max_degree is None else min(max_degree, tower.n - 1)
    out = []
    for i in range(1, top + 2):
        for t in range(1, D[i] + 1):
            out.append(SkewPoly.monomial(tower, flag.basis[t - 1], i - 1))
    return out


def is_f_matrix(tower: TowerSpec, mat: np.ndarray) -> bool:
    """Every encoded entry lies in F (always true for encoded matrices; checked via L)."""
    return all(is_in_base_subfield(tower, tower.embed(int(a))) for a in np.unique(mat))
