"""Finite fields GF(p^k) and the tower F = GF(q) < L = GF(q^n).

L is always realised as a single extension of F_p of degree e*n given by a
monic irreducible modulus; elements are coefficient tuples in the power basis
of the modulus root ``gamma``.  The subfield F is recovered as the fixed field
of the q-Frobenius, and F-coordinates of an element of L are taken in the
power basis ``1, gamma, ..., gamma^(n-1)``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field as dc_field
from functools import lru_cache
from typing import Iterable, Sequence

import numpy as np

from .errors import DegreeMismatch, DivisionByZero, NotPrime, ReducibleModulus, SpecMismatch
from .linalg import SmallField, inverse, nullspace, rref


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def prime_factors(n: int) -> list[int]:
    out, f = [], 2
    while f * f <= n:
        if n % f == 0:
            out.append(f)
            while n % f == 0:
                n //= f
        f += 1
    if n > 1:
        out.append(n)
    return out


# polynomials over F_p: lists of ints, ascending degree, no trailing zeros


def _trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _poly_mod(a: list[int], f: list[int], p: int) -> list[int]:
    a = [x % p for x in a]
    _trim(a)
    df = len(f) - 1
    inv_lead = pow(f[-1], -1, p)
    while len(a) - 1 >= df:
        c = a[-1] * inv_lead % p
        shift = len(a) - 1 - df
        for i, fi in enumerate(f):
            a[shift + i] = (a[shift + i] - c * fi) % p
        _trim(a)
    return a


def _poly_mulmod(a: list[int], b: list[int], f: list[int], p: int) -> list[int]:
    if not a or not b:
        return []
    prod = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                prod[i + j] += x * y
    return _poly_mod(prod, f, p)


def _poly_powmod(a: list[int], e: int, f: list[int], p: int) -> list[int]:
    result = [1]
    base = _poly_mod(list(a), f, p)
    while e:
        if e & 1:
            result = _poly_mulmod(result, base, f, p)
        base = _poly_mulmod(base, base, f, p)
        e >>= 1
    return result


def _poly_sub(a: list[int], b: list[int], p: int) -> list[int]:
    n = max(len(a), len(b))
    out = [((a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0)) % p for i in range(n)]
    return _trim(out)


def _poly_gcd(a: list[int], b: list[int], p: int) -> list[int]:
    a, b = _trim(list(a)), _trim(list(b))
    while b:
        a, b = b, _poly_mod(a, b, p)
    return a


def is_irreducible(modulus: Sequence[int], p: int) -> bool:
    """Ben-Or's irreducibility test for a polynomial over F_p.

    f of degree k is irreducible iff gcd(x^(p^i) - x, f) = 1 for i <= k/2.
    Reducible candidates usually have a small factor and fail early, which
    keeps the smallest-modulus search fast.
    """
    f = _trim([int(c) % p for c in modulus])
    k = len(f) - 1
    if k < 1:
        return False
    if k == 1:
        return True
    x = [0, 1]
    h = x
    for _ in range(k // 2):
        h = _poly_powmod(h, p, f, p)
        if len(_poly_gcd(f, _poly_sub(h, x, p), p)) != 1:
            return False
    return True


@lru_cache(maxsize=None)
def smallest_irreducible(p: int, k: int) -> tuple[int, ...]:
    """Lexicographically smallest monic irreducible of degree k.

    Candidates are compared as ascending coefficient lists (constant term
    first), so the constant term is the most significant position.
    """
    if k == 1:
        return (0, 1)
    # a zero constant term means x divides the candidate
    for low in itertools.product(range(1, p), *[range(p)] * (k - 1)):
        cand = list(low) + [1]
        if is_irreducible(cand, p):
            return tuple(cand)
    raise RuntimeError(f"no irreducible polynomial of degree {k} over F_{p}")  # pragma: no cover


@dataclass(frozen=True)
class FieldSpec:
    """GF(p^k) as F_p[x]/(modulus); modulus coefficients ascending, monic."""

    p: int
    k: int
    modulus: tuple[int, ...]

    @property
    def order(self) -> int:
        return self.p**self.k

    def element(self, coeffs: Iterable[int]) -> "FieldElement":
        c = [int(x) % self.p for x in coeffs]
        if len(c) > self.k:
            c = _poly_mod(c, list(self.modulus), self.p)
        c = c + [0] * (self.k - len(c))
        return FieldElement(self, tuple(c))

    def zero(self) -> "FieldElement":
        return FieldElement(self, (0,) * self.k)

    def one(self) -> "FieldElement":
        return FieldElement(self, (1,) + (0,) * (self.k - 1))

    def gen(self) -> "FieldElement":
        """The modulus root gamma."""
        return self.element([0, 1])

    def elements(self):
        for c in itertools.product(range(self.p), repeat=self.k):
            yield FieldElement(self, tuple(c))


def make_field(p: int, k: int, modulus: Sequence[int] | None = None) -> FieldSpec:
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")
    if k < 1:
        raise DegreeMismatch(f"extension degree must be >= 1, got {k}")
    if modulus is None:
        return FieldSpec(p, k, smallest_irreducible(p, k))
    mod = [int(c) for c in modulus]
    if any(not 0 <= c < p for c in mod):
        mod = [c % p for c in mod]
    _trim(mod)
    if len(mod) - 1 != k:
        raise DegreeMismatch(f"modulus has degree {len(mod) - 1}, expected {k}")
    if mod[-1] != 1:
        raise DegreeMismatch("modulus must be monic")
    if not is_irreducible(mod, p):
        raise ReducibleModulus(f"{format_poly(mod)} is reducible over F_{p}")
    return FieldSpec(p, k, tuple(mod))


def format_poly(coeffs: Sequence[int], var: str = "x") -> str:
    terms = []
    for i in range(len(coeffs) - 1, -1, -1):
        c = coeffs[i]
        if not c:
            continue
        mono = "" if i == 0 else (var if i == 1 else f"{var}^{i}")
        if i == 0:
            terms.append(str(c))
        else:
            terms.append(mono if c == 1 else f"{c}{mono}")
    return " + ".join(terms) or "0"


@dataclass(frozen=True)
class FieldElement:
    spec: FieldSpec
    coeffs: tuple[int, ...]

    def _check(self, other: "FieldElement") -> None:
        if not isinstance(other, FieldElement) or other.spec != self.spec:
            raise SpecMismatch("operands live in different fields")

    def __add__(self, other: "FieldElement") -> "FieldElement":
        self._check(other)
        p = self.spec.p
        return FieldElement(self.spec, tuple((a + b) % p for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "FieldElement") -> "FieldElement":
        self._check(other)
        p = self.spec.p
        return FieldElement(self.spec, tuple((a - b) % p for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> "FieldElement":
        p = self.spec.p
        return FieldElement(self.spec, tuple((-a) % p for a in self.coeffs))

    def __mul__(self, other) -> "FieldElement":
        if isinstance(other, (int, np.integer)):
            p = self.spec.p
            return FieldElement(self.spec, tuple(a * int(other) % p for a in self.coeffs))
        self._check(other)
        return self.spec.element(_poly_mulmod(list(self.coeffs), list(other.coeffs),
                                              list(self.spec.modulus), self.spec.p))

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "FieldElement":
        if e < 0:
            return self.inverse() ** (-e)
        return self.spec.element(_poly_powmod(list(self.coeffs), e, list(self.spec.modulus), self.spec.p))

    def inverse(self) -> "FieldElement":
        if self.is_zero():
            raise DivisionByZero("zero has no inverse")
        return self ** (self.spec.order - 2)

    def __truediv__(self, other: "FieldElement") -> "FieldElement":
        self._check(other)
        return self * other.inverse()

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __bool__(self) -> bool:
        return not self.is_zero()

    def to_array(self) -> np.ndarray:
        return np.array(self.coeffs, dtype=np.int64)

    def __repr__(self) -> str:
        return f"[{','.join(map(str, self.coeffs))}]"

    def __str__(self) -> str:
        return format_poly(self.coeffs, "g")


def add(a: FieldElement, b: FieldElement) -> FieldElement:
    return a + b


def sub(a: FieldElement, b: FieldElement) -> FieldElement:
    return a - b


def mul(a: FieldElement, b: FieldElement) -> FieldElement:
    return a * b


def inv(a: FieldElement) -> FieldElement:
    return a.inverse()


def power(a: FieldElement, e: int) -> FieldElement:
    return a**e


def small_field_from_spec(spec: FieldSpec) -> SmallField:
    """Integer-encoded GF(p^k) with lookup tables built from ``spec``."""
    if spec.k == 1:
        return SmallField.prime(spec.p)
    q = spec.order
    elems = [FieldElement(spec, tuple(_digits(a, spec.p, spec.k))) for a in range(q)]
    index = {el.coeffs: a for a, el in enumerate(elems)}
    addt = np.zeros((q, q), dtype=np.int64)
    mult = np.zeros((q, q), dtype=np.int64)
    for a in range(q):
        for b in range(q):
            addt[a, b] = index[(elems[a] + elems[b]).coeffs]
            mult[a, b] = index[(elems[a] * elems[b]).coeffs] if b >= a else mult[b, a]
    return SmallField(spec.p, spec.k, addt, mult)


def _digits(a: int, p: int, k: int) -> list[int]:
    out = []
    for _ in range(k):
        out.append(a % p)
        a //= p
    return out


@dataclass(frozen=True, eq=False)
class TowerSpec:
    """F = GF(p^e) inside L = GF(p^(e n)), with sigma the q-Frobenius.

    Built by :func:`make_tower`; every cache is filled at construction.
    """

    p: int
    e: int
    n: int
    big: FieldSpec
    base_spec: FieldSpec
    base: SmallField
    frobenius: np.ndarray = dc_field(repr=False)      # matrix of alpha -> alpha^q over F_p
    subfield_basis: tuple[FieldElement, ...] = dc_field(repr=False)
    omega: FieldElement = dc_field(repr=False)        # image of the base-field generator in L
    _embed: np.ndarray = dc_field(repr=False)         # (q, e*n): F-element index -> coeffs in L
    _coord_basis: np.ndarray = dc_field(repr=False)   # columns: w^s gamma^i, ordered by i then s
    _coord_inv: np.ndarray = dc_field(repr=False)

    @property
    def q(self) -> int:
        return self.p**self.e

    @property
    def degree(self) -> int:
        return self.e * self.n

    @property
    def gamma(self) -> FieldElement:
        return self.big.gen()

    def key(self) -> tuple:
        return (self.p, self.e, self.n, self.big.modulus, self.base_spec.modulus)

    def power_basis(self) -> list[FieldElement]:
        """The F-basis 1, gamma, ..., gamma^(n-1) of L."""
        g = self.gamma
        out = [self.big.one()]
        for _ in range(self.n - 1):
            out.append(out[-1] * g)
        return out

    def check(self, alpha: FieldElement) -> None:
        if not isinstance(alpha, FieldElement) or alpha.spec != self.big:
            raise SpecMismatch("element does not live in this tower's big field")

    def coords(self, alpha: FieldElement) -> np.ndarray:
        """F-coordinates of alpha in the gamma power basis (length n, encoded in F)."""
        self.check(alpha)
        return self.coords_many(alpha.to_array()[None, :])[0]

    def coords_many(self, vectors: np.ndarray) -> np.ndarray:
        """Batch version of :meth:`coords` on raw F_p coefficient rows (N, e*n)."""
        v = (np.asarray(vectors, dtype=np.int64) @ self._coord_inv.T) % self.p
        v = v.reshape(v.shape[0], self.n, self.e)
        weights = self.p ** np.arange(self.e, dtype=np.int64)
        return v @ weights

    def from_coords(self, coords: Sequence[int]) -> FieldElement:
        vec = self.from_coords_many(np.asarray(coords, dtype=np.int64)[None, :])[0]
        return FieldElement(self.big, tuple(int(x) for x in vec))

    def from_coords_many(self, coords: np.ndarray) -> np.ndarray:
        """Raw F_p coefficient rows of sum_i c_i gamma^i for each row c of ``coords``."""
        c = np.asarray(coords, dtype=np.int64)
        digits = np.stack([(c // self.p**s) % self.p for s in range(self.e)], axis=-1)
        flat = digits.reshape(c.shape[0], self.n * self.e)
        return (flat @ self._coord_basis.T) % self.p

    def embed(self, a: int) -> FieldElement:
        """The element of L corresponding to the encoded F-element ``a``."""
        return FieldElement(self.big, tuple(int(x) for x in self._embed[a]))

    def scalar_mul(self, a: int, alpha: FieldElement) -> FieldElement:
        return self.embed(a) * alpha


def _frobenius_matrix(big: FieldSpec, q: int) -> np.ndarray:
    g = big.gen()
    gq = g**q
    cols = [big.one()]
    for _ in range(big.k - 1):
        cols.append(cols[-1] * gq)
    return np.array([c.coeffs for c in cols], dtype=np.int64).T


@lru_cache(maxsize=64)
def make_tower(p: int, e: int, n: int, modulus: tuple[int, ...] | None = None,
               base_modulus: tuple[int, ...] | None = None) -> TowerSpec:
    """Tower F = GF(p^e) < L = GF(p^(e n)); ``modulus`` defines L over F_p."""
    big = make_field(p, e * n, modulus)
    base_spec = make_field(p, e, base_modulus)
    base = small_field_from_spec(base_spec)
    q = p**e
    frob = _frobenius_matrix(big, q)
    fp = SmallField.prime(p)
    k = e * n
    kernel = nullspace((frob - np.eye(k, dtype=np.int64)) % p, fp)
    echelon, _ = rref(kernel, fp)
    if echelon.shape[0] != e:
        raise ArithmeticError("fixed field of the Frobenius has the wrong dimension")
    sub_basis = tuple(FieldElement(big, tuple(int(x) for x in row)) for row in echelon)

    if e == 1:
        omega = big.one()
        embed = np.zeros((q, k), dtype=np.int64)
        embed[:, 0] = np.arange(q)
    else:
        omega = None
        for digits in itertools.product(range(p), repeat=e):
            cand = big.zero()
            for d, b in zip(digits, sub_basis):
                cand = cand + b * d
            val = big.zero()
            for c in reversed(base_spec.modulus):
                val = val * cand + big.one() * c
            if val.is_zero():
                omega = cand
                break
        assert omega is not None
        wpow = [big.one()]
        for _ in range(e - 1):
            wpow.append(wpow[-1] * omega)
        embed = np.zeros((q, k), dtype=np.int64)
        for a in range(q):
            acc = big.zero()
            for d, w in zip(_digits(a, p, e), wpow):
                acc = acc + w * d
            embed[a] = acc.coeffs

    g = big.gen()
    # columns of the F_p basis (w^s gamma^i), ordered by i then s
    basis_vecs = []
    gi = big.one()
    for _ in range(n):
        w = big.one()
        for _ in range(e):
            basis_vecs.append((w * gi).coeffs)
            w = w * omega
        gi = gi * g
    m = np.array(basis_vecs, dtype=np.int64).T
    coord_inv = inverse(m, fp)
    return TowerSpec(p, e, n, big, base_spec, base, frob, sub_basis, omega, embed, m, coord_inv)


def tower_from_field_string(field: str, n: int, modulus=None) -> TowerSpec:
    p, e = parse_field(field)
    return make_tower(p, e, n, tuple(modulus) if modulus is not None else None)


def parse_field(text: str) -> tuple[int, int]:
    """Parse ``"p^e"`` (or a bare prime ``"p"``)."""
    text = text.strip()
    if "^" in text:
        a, b = text.split("^", 1)
        p, e = int(a), int(b)
    else:
        p, e = int(text), 1
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")
    if e < 1:
        raise DegreeMismatch(f"bad exponent in field {text!r}")
    return p, e


def parse_modulus(text: str) -> tuple[int, ...]:
    return tuple(int(t) for t in text.replace(" ", "").split(",") if t)


def gamma_power(tower: TowerSpec, exponent: int) -> FieldElement:
    if exponent < 0:
        raise ValueError("exponent must be nonnegative")
    return tower.gamma**exponent


def frobenius_q(tower: TowerSpec, alpha: FieldElement) -> FieldElement:
    tower.check(alpha)
    v = (tower.frobenius @ alpha.to_array()) % tower.p
    return FieldElement(tower.big, tuple(int(x) for x in v))


def sigma_bar(tower: TowerSpec, alpha: FieldElement) -> FieldElement:
    return frobenius_q(tower, alpha) - alpha


def sigma_bar_power(tower: TowerSpec, alpha: FieldElement, j: int) -> FieldElement:
    if j < 0:
        raise ValueError("j must be nonnegative")
    tower.check(alpha)
    v = alpha.to_array()
    for _ in range(j):
        v = (tower.frobenius @ v - v) % tower.p
    return FieldElement(tower.big, tuple(int(x) for x in v))


def is_in_base_subfield(tower: TowerSpec, alpha: FieldElement) -> bool:
    return frobenius_q(tower, alpha) == alpha
