"""Bit-exact reproduction of the pinned worked examples in :mod:`mfd_forge.golden`."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from . import ferrers as fd
from . import golden as G
from . import verify
from .codes import construct, construct_p_monotone
from .field import gamma_power, make_tower
from .skewflag import SkewPoly, build_flag, flag_spaces, matrix_of, verify_compatible_basis


@dataclass
class ReproResult:
    scenario: str
    passed: bool
    lines: list[str] = field(default_factory=list)

    def to_dict(self) -> dict:
        return {"scenario": self.scenario, "passed": self.passed, "details": self.lines}


def _same(gens, want) -> bool:
    return len(gens) == len(want) and all(np.array_equal(a, b) for a, b in zip(gens, want))


def fer5_nu() -> ReproResult:
    D = fd.from_columns(G.FER5_DIAGRAM)
    nu = tuple(fd.nu_values(D, G.FER5_D))
    low = fd.nu_min(D, G.FER5_D)
    oracle = verify.nu_min_oracle(D, G.FER5_D)
    ok = nu == G.FER5_NU and low == oracle == G.FER5_NU_MIN
    return ReproResult("fer5-nu", ok, [f"nu = {nu}", f"nu_min = {low} (deletion count {oracle})"])


def nu_table() -> ReproResult:
    ok, lines = True, []
    for cols, rows in G.NU_TABLE.items():
        D = fd.from_columns(cols)
        for d, want in rows.items():
            got = (fd.nu_min(D, d), fd.nu_mds(D, d))
            ok &= got == want
            lines.append(f"D={D} d={d}: nu_min={got[0]} nu_MDS={got[1]} expected {want}")
    return ReproResult("nu-table", ok, lines)


def _basis_check(p: int, n: int, modulus, exps) -> tuple[bool, list[str]]:
    tower = make_tower(p, 1, n, modulus)
    spaces = flag_spaces(tower)
    dims = [int(s.shape[0]) for s in spaces]
    basis = [gamma_power(tower, k) for k in exps]
    good, detail = verify_compatible_basis(tower, basis, spaces)
    ok = dims == list(range(n + 1)) and good
    return ok, [f"GF({p}^{n}): dim F_i = {dims}", f"basis {exps}: " + ("compatible" if good else detail)]


def f5_compatible_basis() -> ReproResult:
    ok5, l5 = _basis_check(5, 5, G.F5_MODULUS, G.F5_BASIS)
    ok2, l2 = _basis_check(2, 8, G.F2_MODULUS, G.F2_BASIS)
    return ReproResult("f5-compatible-basis", ok5 and ok2, l5 + l2)


def f2_n8_phi() -> ReproResult:
    tower = make_tower(2, 1, 8, G.F2_MODULUS)
    flag = build_flag(tower, [gamma_power(tower, k) for k in G.F2_BASIS])
    f = SkewPoly.from_terms(tower, [(i, gamma_power(tower, k)) for i, k in G.F2_PHI_TERMS])
    mat = matrix_of(f, flag)
    ok = np.array_equal(mat, G.F2_PHI)
    return ReproResult("f2-n8-phi", ok, ["".join(map(str, r)) for r in mat])


def _code_lines(C, rep) -> list[str]:
    return [f"{C.dimension} generators, expected dimension {rep.expected_dimension}",
            f"min rank {rep.min_rank} over {rep.codewords_checked} nonzero codewords ({rep.method})"]


def f5_mfd_d4() -> ReproResult:
    D = fd.from_columns(G.F5_MFD_DIAGRAM)
    C = construct_p_monotone(D, G.F5_MFD_D, 5, modulus=G.F5_MODULUS, basis=G.F5_BASIS)
    rep = verify.is_mfd(C)
    ok = (_same(C.generators, G.F5_MFD_GENERATORS) and rep.passed and rep.method == "exhaustive"
          and rep.codewords_checked == 624 and rep.min_rank == 4)
    return ReproResult("f5-mfd-d4", ok, _code_lines(C, rep))


def f2_ut_d4() -> ReproResult:
    D = fd.from_columns(G.F2_UT_DIAGRAM)
    C = construct(D, G.F2_UT_D, "2^1", modulus=G.F2_MODULUS, basis=G.F2_BASIS)
    rep = verify.is_mfd(C)
    ok = (_same(C.generators, G.F2_UT_GENERATORS) and rep.passed and rep.method == "exhaustive"
          and rep.codewords_checked == 63 and rep.min_rank == 4)
    return ReproResult("f2-ut-d4", ok, _code_lines(C, rep))


def mds_ex17() -> ReproResult:
    D = fd.from_columns(G.MDS_DIAGRAM)
    ok, lines = True, []
    for fs, count in (("2^1", 511), ("3^1", 19682)):
        C = construct(D, G.MDS_D, fs)
        trace = {k: C.trace.get(k) for k in G.MDS_TRACE}
        rep = verify.is_mfd(C)
        ok &= (C.path == "mds-constructible" and trace == G.MDS_TRACE
               and C.dimension == G.MDS_DIMENSION and rep.passed
               and rep.codewords_checked == count and rep.min_rank >= G.MDS_D)
        lines.append(f"GF({fs}): trace {trace}")
        lines += [f"GF({fs}): " + s for s in _code_lines(C, rep)]
    return ReproResult("mds-ex17", ok, lines)


SCENARIOS: dict[str, Callable[[], ReproResult]] = {
    "fer5-nu": fer5_nu,
    "f5-compatible-basis": f5_compatible_basis,
    "f5-mfd-d4": f5_mfd_d4,
    "f2-n8-phi": f2_n8_phi,
    "f2-ut-d4": f2_ut_d4,
    "mds-ex17": mds_ex17,
    "nu-table": nu_table,
}


def run(scenario: str) -> ReproResult:
    try:
        fn = SCENARIOS[scenario]
    except KeyError:
        raise KeyError(f"unknown scenario {scenario!r}; choose from {', '.join(SCENARIOS)}") from None
    return fn()
