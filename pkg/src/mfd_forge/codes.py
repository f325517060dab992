"""Constructions of maximum Ferrers diagram (MFD) codes.

Paths:

* ``p-monotone`` / ``p-convex``: order n = p^m, characteristic p.  The code is
  the image under the flag-basis representation of the skew polynomials
  sum_{i <= n-d+1} lambda_i sigma_bar^(i-1) with lambda_i in F_{c_i}.
* ``strictly-monotone`` / ``initially-convex``: any order, any field.  Zero
  columns are prepended up to order p^m, the previous path is applied, and the
  top-right n x n block is kept.
* ``mds-constructible``: reduce to a shifted upper-triangular diagram D'' and
  intersect its code with the matrices supported on a subdiagram D'.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Sequence

import numpy as np

from . import ferrers as fd
from . import linalg
from .errors import (
    NotInitiallyConvex,
    NotMdsConstructible,
    NotPMonotone,
    NotStrictlyMonotone,
    NotSubdiagram,
    OrderNotPowerOfChar,
    OutOfRange,
    UnsupportedDiagramClass,
)
from .ferrers import FerrersDiagram
from .field import make_field, make_tower, parse_field, small_field_from_spec
from .linalg import SmallField
from .skewflag import FlagData, basis_from_exponents, build_flag, matrix_of, monotone_space_basis


@dataclass
class FerrersCode:
    p: int
    e: int
    n: int
    d: int
    diagram: FerrersDiagram
    generators: list[np.ndarray]
    path: str
    trace: dict = field(default_factory=dict)
    base_modulus: tuple[int, ...] | None = None

    @property
    def q(self) -> int:
        return self.p**self.e

    @property
    def dimension(self) -> int:
        return len(self.generators)

    @property
    def field(self) -> SmallField:
        return base_field(self.p, self.e, self.base_modulus)

    def flat(self) -> np.ndarray:
        if not self.generators:
            return np.zeros((0, self.n * self.n), dtype=np.int64)
        return np.array([g.reshape(-1) for g in self.generators], dtype=np.int64)

    def with_generators(self, gens: list[np.ndarray], **changes) -> "FerrersCode":
        kw = dict(p=self.p, e=self.e, n=self.n, d=self.d, diagram=self.diagram, generators=gens,
                  path=self.path, trace=dict(self.trace), base_modulus=self.base_modulus)
        kw.update(changes)
        return FerrersCode(**kw)


@lru_cache(maxsize=None)
def base_field(p: int, e: int, base_modulus: tuple[int, ...] | None = None) -> SmallField:
    return small_field_from_spec(make_field(p, e, base_modulus))


@lru_cache(maxsize=32)
def cached_flag(p: int, e: int, n: int, modulus: tuple[int, ...] | None = None,
                basis_exponents: tuple[int, ...] | None = None) -> FlagData:
    tower = make_tower(p, e, n, modulus)
    basis = basis_from_exponents(tower, basis_exponents) if basis_exponents is not None else None
    return build_flag(tower, basis)


def _is_power_of(n: int, p: int) -> bool:
    while n % p == 0:
        n //= p
    return n == 1


def _check_d(D: FerrersDiagram, d: int) -> None:
    if not 1 <= d <= D.n:
        raise OutOfRange(f"d must lie in 1..{D.n}, got {d}")


def _tuple(x):
    return tuple(x) if x is not None else None


def antitranspose(A: np.ndarray) -> np.ndarray:
    """Entry (i, j) <- entry (n+1-j, n+1-i)."""
    return np.asarray(A)[::-1, ::-1].T.copy()


def echelonize(gens: Sequence[np.ndarray], field_: SmallField, n: int) -> list[np.ndarray]:
    """Reduced echelon generators w.r.t. row-major flattening."""
    if not len(gens):
        return []
    flat = np.array([g.reshape(-1) for g in gens], dtype=np.int64)
    rows, _ = linalg.rref(flat, field_)
    return [r.reshape(n, n) for r in rows]


def trivial_code(D: FerrersDiagram, p: int, e: int = 1) -> FerrersCode:
    """d = 1: every matrix supported on D, spanned by unit matrices (row-major order)."""
    gens = []
    for i, j in sorted(fd.to_cells(D)):
        m = np.zeros((D.n, D.n), dtype=np.int64)
        m[i - 1, j - 1] = 1
        gens.append(m)
    return FerrersCode(p, e, D.n, 1, D, gens, "trivial", {"path": "trivial"})


def construct_p_monotone(D: FerrersDiagram, d: int, p: int, e: int = 1,
                         modulus: Sequence[int] | None = None,
                         basis: Sequence[int] | None = None) -> FerrersCode:
    """Image of the degree-bounded skew polynomial space L[sigma; D]_{n-d}.

    ``basis`` is an optional list of gamma exponents for a compatible basis.
    """
    _check_d(D, d)
    if not _is_power_of(D.n, p):
        raise OrderNotPowerOfChar(f"order {D.n} is not a power of {p}")
    if not fd.is_p_monotone(D, p):
        raise NotPMonotone(f"({D}) is not {p}-monotone")
    flag = cached_flag(p, e, D.n, _tuple(modulus), _tuple(basis))
    polys = monotone_space_basis(D, flag, D.n - d)
    gens = [matrix_of(f, flag) for f in polys]
    trace = {
        "path": "p-monotone",
        "order": D.n,
        "modulus": list(flag.tower.big.modulus),
        "basis": [list(b.coeffs) for b in flag.basis],
        "max_sigma_bar_degree": D.n - d,
        "polynomials": [[(i, list(c)) for i, c in f.terms()] for f in polys],
    }
    return FerrersCode(p, e, D.n, d, D, gens, "p-monotone", trace)


def construct_p_convex(D: FerrersDiagram, d: int, p: int, e: int = 1,
                       modulus=None, basis=None) -> FerrersCode:
    adj = fd.adjoint(D)
    inner = construct_p_monotone(adj, d, p, e, modulus, basis)
    gens = [antitranspose(g) for g in inner.generators]
    trace = {"path": "p-convex", "adjoint": list(adj.columns), "inner": inner.trace}
    return FerrersCode(p, e, D.n, d, D, gens, "p-convex", trace)


def construct_strictly_monotone(D: FerrersDiagram, d: int, p: int, e: int = 1,
                                modulus=None, basis=None) -> FerrersCode:
    """Strictly p-monotone D (in particular any strictly monotone D), any order."""
    _check_d(D, d)
    if not fd.is_strictly_p_monotone(D, p):
        raise NotStrictlyMonotone(f"({D}) is not strictly monotone (nor strictly {p}-monotone)")
    big, offset = fd.embed_strictly_monotone(D, p)
    inner = construct_p_monotone(big, d, p, e, modulus, basis)
    n = D.n
    gens = []
    for g in inner.generators:
        if g[n:, :].any() or g[:, :offset].any():
            raise AssertionError("embedded generator has entries outside the top-right block")
        gens.append(g[:n, offset:].copy())
    trace = {
        "path": "strictly-monotone",
        "embedded_diagram": list(big.columns),
        "embedded_order": big.n,
        "offset": offset,
        "inner": inner.trace,
    }
    return FerrersCode(p, e, n, d, D, gens, "strictly-monotone", trace)


def construct_initially_convex(D: FerrersDiagram, d: int, p: int, e: int = 1,
                               modulus=None, basis=None) -> FerrersCode:
    if not fd.is_initially_p_convex(D, p):
        raise NotInitiallyConvex(f"({D}) is not initially convex (nor initially {p}-convex)")
    adj = fd.adjoint(D)
    inner = construct_strictly_monotone(adj, d, p, e, modulus, basis)
    gens = [antitranspose(g) for g in inner.generators]
    trace = {"path": "initially-convex", "adjoint": list(adj.columns), "inner": inner.trace}
    return FerrersCode(p, e, D.n, d, D, gens, "initially-convex", trace)


def intersect_with_support(C: FerrersCode, target: FerrersDiagram) -> FerrersCode:
    """Subcode of C made of the codewords supported on ``target``."""
    if not target.is_subdiagram_of(C.diagram):
        raise NotSubdiagram(f"({target}) is not contained in ({C.diagram})")
    n = C.n
    field_ = C.field
    inside = np.zeros((n, n), dtype=bool)
    for i, j in fd.to_cells(target):
        inside[i - 1, j - 1] = True
    outside = np.nonzero(~inside.reshape(-1))[0]
    flat = C.flat()
    if flat.shape[0] == 0:
        gens: list[np.ndarray] = []
    else:
        combos = linalg.nullspace(flat[:, outside].T, field_)
        sub = field_.dot(combos, flat) if combos.shape[0] else np.zeros((0, n * n), dtype=np.int64)
        gens = echelonize([r.reshape(n, n) for r in sub], field_, n) if sub.shape[0] else []
    trace = dict(C.trace)
    trace["intersected_with"] = list(target.columns)
    return C.with_generators(gens, diagram=target, trace=trace)


def mds_plan(D: FerrersDiagram, d: int) -> dict:
    """Choice of j, the index set Y, ell and the diagrams D', D''."""
    n = D.n
    j = min(fd.singleton_indices(D, d))
    S = fd.region("S", n, d, j)
    L = fd.region("L", n, d, j)
    cells = fd.to_cells(D)
    Y = [i for i in range(1, n - d + 2) if cells & fd.diagonal(n, i) & S.cells]
    plan = {"j": j, "Y": Y}
    if not Y:
        return plan
    ell = min(Y)
    d2 = FerrersDiagram(n, tuple(max(0, col - ell + 1) for col in range(1, n + 1)))
    band = set()
    for i in range(ell, n + 1):
        band |= fd.diagonal(n, i) & L.cells
    d1 = fd.from_cells((cells & S.cells) | band, n)
    plan.update(ell=ell, D_prime=d1, D_double_prime=d2)
    return plan


def construct_mds_constructible(D: FerrersDiagram, d: int, p: int, e: int = 1,
                                modulus=None, basis=None) -> FerrersCode:
    if not 2 <= d <= D.n:
        raise OutOfRange(f"d must lie in 2..{D.n}, got {d}")
    if not fd.is_mds_constructible(D, d):
        raise NotMdsConstructible(f"({D}, d={d}) is not MDS-constructible")
    plan = mds_plan(D, d)
    trace = {"path": "mds-constructible", "j": plan["j"], "Y": plan["Y"]}
    if not plan["Y"]:
        trace["note"] = "Y is empty, so the bound is 0"
        return FerrersCode(p, e, D.n, d, D, [], "mds-constructible", trace)
    d1, d2 = plan["D_prime"], plan["D_double_prime"]
    inner = construct_strictly_monotone(d2, d, p, e, modulus, basis)
    sub = intersect_with_support(inner, d1)
    trace.update(
        ell=plan["ell"],
        D_prime=list(d1.columns),
        D_double_prime=list(d2.columns),
        nu_min_D_double_prime=fd.nu_min(d2, d),
        removed_cells=len(d2) - len(d1),
        inner_dimension=inner.dimension,
        inner=inner.trace,
        relabelled="code on D' is reused on D (D' is a subdiagram with the same bound)",
    )
    return FerrersCode(p, e, D.n, d, D, sub.generators, "mds-constructible", trace)


def construct(D: FerrersDiagram, d: int, field: str | tuple[int, int] = "2^1",
              modulus=None, basis=None) -> FerrersCode:
    """Route (D, d) to the first construction whose hypotheses hold."""
    p, e = parse_field(field) if isinstance(field, str) else field
    _check_d(D, d)
    if d == 1:
        code = trivial_code(D, p, e)
    elif fd.is_strictly_monotone(D):
        code = construct_strictly_monotone(D, d, p, e, modulus, basis)
    elif fd.is_initially_convex(D):
        code = construct_initially_convex(D, d, p, e, modulus, basis)
    elif _is_power_of(D.n, p) and fd.is_p_monotone(D, p):
        code = construct_p_monotone(D, d, p, e, modulus, basis)
    elif _is_power_of(D.n, p) and fd.is_p_convex(D, p):
        code = construct_p_convex(D, d, p, e, modulus, basis)
    elif fd.is_strictly_p_monotone(D, p):
        code = construct_strictly_monotone(D, d, p, e, modulus, basis)
    elif fd.is_initially_p_convex(D, p):
        code = construct_initially_convex(D, d, p, e, modulus, basis)
    elif fd.is_mds_constructible(D, d):
        code = construct_mds_constructible(D, d, p, e, modulus, basis)
    else:
        raise UnsupportedDiagramClass(
            f"({D}, d={d}) over GF({p}^{e}) is outside the supported classes: it is not strictly "
            f"(p-)monotone, not initially (p-)convex, not MDS-constructible, and general "
            f"{p}-monotone or {p}-convex diagrams need order a power of {p} (got {D.n}); "
            f"prepending zero columns only preserves strict monotonicity"
        )
    if e > 1:
        code.base_modulus = tuple(make_field(p, e).modulus)
    return code


# serialisation


def _encode_entry(a: int, f: SmallField):
    return int(a) if f.e == 1 else f.digits(int(a))


def _decode_entry(x, f: SmallField) -> int:
    return int(x) % f.p if f.e == 1 else f.from_digits(x)


def code_to_dict(C: FerrersCode) -> dict:
    f = C.field
    return {
        "q": C.q,
        "p": C.p,
        "e": C.e,
        "n": C.n,
        "d": C.d,
        "diagram": list(C.diagram.columns),
        "dimension": C.dimension,
        "path": C.path,
        "trace": C.trace,
        "base_modulus": list(make_field(C.p, C.e, C.base_modulus).modulus) if C.e > 1 else None,
        "generators": [[[_encode_entry(a, f) for a in row] for row in g] for g in C.generators],
    }


def code_from_dict(data: dict) -> FerrersCode:
    p, e, n = int(data["p"]), int(data["e"]), int(data["n"])
    bm = tuple(data["base_modulus"]) if data.get("base_modulus") else None
    f = base_field(p, e, bm)
    gens = [np.array([[_decode_entry(x, f) for x in row] for row in g], dtype=np.int64)
            for g in data["generators"]]
    return FerrersCode(p, e, n, int(data["d"]), fd.from_columns(data["diagram"]), gens,
                       data.get("path", "external"), data.get("trace", {}), bm)


def code_to_json(C: FerrersCode, **kw) -> str:
    return json.dumps(code_to_dict(C), default=_json_default, **kw)


def _json_default(o):
    if isinstance(o, np.integer):
        return int(o)
    if isinstance(o, np.ndarray):
        return o.tolist()
    if isinstance(o, FerrersDiagram):
        return list(o.columns)
    raise TypeError(f"cannot serialise {type(o).__name__}")


def render_matrix(A: np.ndarray, f: SmallField) -> str:
    if f.e == 1:
        return "\n".join(" ".join(str(int(a)) for a in row) for row in A)
    return "\n".join(" ".join("[" + ",".join(map(str, f.digits(int(a)))) + "]" for a in row)
                     for row in A)
