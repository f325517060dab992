"""Acceptance criteria, one test per criterion.

Run ``pytest tests/test_acceptance.py -v`` (or the whole suite); a summary
with one PASS/FAIL line per criterion is printed at the end of the session.
``python tests/test_acceptance.py`` prints the same lines without pytest.
"""

import itertools
from functools import lru_cache

import numpy as np

from mfd_forge import golden, linalg, verify
from mfd_forge import ferrers as fd
from mfd_forge.codes import construct, construct_p_monotone
from mfd_forge.field import gamma_power, make_tower
from mfd_forge.skewflag import (
    SkewPoly,
    build_flag,
    f_linear_solve,
    flag_spaces,
    matrix_of,
    sigma_bar_power_matrix,
    verify_compatible_basis,
)

CAP = 2**20


def _same(gens, want):
    return len(gens) == len(want) and all(np.array_equal(a, b) for a, b in zip(gens, want))


# 1-2: bounds


def test_criterion_1_nu_bound_worked_deletions():
    D = fd.from_columns((0, 1, 1, 4, 5))
    assert fd.nu_values(D, 3) == [5, 3, 2]
    assert fd.nu_min(D, 3) == 2
    assert verify.nu_min_oracle(D, 3) == 2


def test_criterion_2_nu_versus_mds_table():
    for cols, rows in golden.NU_TABLE.items():
        D = fd.from_columns(cols)
        got = {d: (fd.nu_min(D, d), fd.nu_mds(D, d)) for d in range(2, 6)}
        assert got == rows, (cols, got)
    D2 = fd.from_columns((1, 2, 4, 5, 5))
    assert (fd.nu_min(D2, 2), fd.nu_mds(D2, 2)) == (12, 10)
    assert (fd.nu_min(D2, 3), fd.nu_mds(D2, 3)) == (7, 6)


# 3-4: flag, basis and representation


def test_criterion_3_flag_and_compatible_bases():
    for p, n, modulus, exps in ((5, 5, golden.F5_MODULUS, golden.F5_BASIS),
                                (2, 8, golden.F2_MODULUS, golden.F2_BASIS)):
        T = make_tower(p, 1, n, modulus)
        spaces = flag_spaces(T)
        assert [s.shape[0] for s in spaces] == list(range(n + 1))
        ok, detail = verify_compatible_basis(T, [gamma_power(T, k) for k in exps], spaces)
        assert ok, detail


def test_criterion_4_representation_matrix():
    T = make_tower(2, 1, 8, golden.F2_MODULUS)
    flag = build_flag(T, [gamma_power(T, k) for k in golden.F2_BASIS])
    f = SkewPoly.from_terms(T, [(0, T.big.one()), (2, gamma_power(T, 68))])
    assert np.array_equal(matrix_of(f, flag), golden.F2_PHI)


# 5-7: codes


def test_criterion_5_mfd_code_over_f5():
    D = fd.from_columns(golden.F5_MFD_DIAGRAM)
    C = construct_p_monotone(D, 4, 5, modulus=golden.F5_MODULUS, basis=golden.F5_BASIS)
    assert _same(C.generators, golden.F5_MFD_GENERATORS)
    res = verify.min_rank_exhaustive(C, cap=CAP)
    assert res.checked == 624 and res.min_rank == 4
    rep = verify.is_mfd(C, cap=CAP)
    assert rep.passed and rep.certificate
    assert rep.dimension == 4 == fd.nu_min(D, 4)


def test_criterion_6_mfd_code_over_f2():
    D = fd.from_columns(golden.F2_UT_DIAGRAM)
    C = construct(D, 4, "2^1", modulus=golden.F2_MODULUS, basis=golden.F2_BASIS)
    assert _same(C.generators, golden.F2_UT_GENERATORS)
    res = verify.min_rank_exhaustive(C, cap=CAP)
    assert res.checked == 63 and res.min_rank == 4
    assert verify.is_mfd(C, cap=CAP).passed


def test_criterion_7_mds_route():
    D = fd.from_columns(golden.MDS_DIAGRAM)
    for field, count in (("2^1", 511), ("3^1", 19682)):
        C = construct(D, 4, field)
        assert C.path == "mds-constructible"
        assert {k: C.trace[k] for k in golden.MDS_TRACE} == golden.MDS_TRACE
        assert C.dimension == 9
        res = verify.min_rank_exhaustive(C, cap=CAP)
        assert res.checked == count and res.min_rank >= 4
        rep = verify.is_mfd(C, cap=CAP)
        assert rep.passed and rep.certificate


# 8: property suite


def _random_strictly_monotone(rng, n):
    zeros = int(rng.integers(0, n + 1))
    vals = sorted(rng.choice(np.arange(1, n + 1), size=n - zeros, replace=False).tolist())
    return fd.from_columns([0] * zeros + vals)


def _random_diagram(rng, max_n=9):
    n = int(rng.integers(1, max_n + 1))
    return fd.from_columns(sorted(rng.integers(0, n + 1, size=n).tolist()))


def check_random_strictly_monotone_codes(count=200, seed=2024):
    rng = np.random.default_rng(seed)
    exhaustive = 0
    for _ in range(count):
        n = int(rng.integers(1, 10))
        D = _random_strictly_monotone(rng, n)
        d = int(rng.integers(1, n + 1))
        field = ("2^1", "3^1", "5^1")[int(rng.integers(0, 3))]
        C = construct(D, d, field)
        if C.dimension and C.q**C.dimension - 1 <= CAP:
            rep = verify.is_mfd(C, cap=CAP)
            assert rep.method == "exhaustive" and rep.passed and rep.certificate, (D, d, field)
            exhaustive += 1
        else:
            assert verify.check_support(C) and verify.dimension(C) == verify.nu_min_oracle(D, d)
    return exhaustive


def check_flag_kernels():
    for p, e, n in ((2, 1, 4), (2, 1, 8), (3, 1, 9), (5, 1, 5), (2, 2, 4), (3, 2, 3)):
        T = make_tower(p, e, n)
        f = T.base
        spaces = flag_spaces(T)
        assert [s.shape[0] for s in spaces] == list(range(n + 1))
        for i in range(1, n + 1):
            assert all(linalg.in_span(spaces[i], v, f) for v in spaces[i - 1])
        for j in range(n + 1):
            M = sigma_bar_power_matrix(T, j)
            for i in range(n + 1):
                img = f.dot(spaces[i], M.T) if spaces[i].shape[0] else spaces[i]
                target = spaces[max(0, i - j)]
                # double inclusion of spans
                assert all(linalg.in_span(target, v, f) for v in img if v.any())
                assert all(linalg.in_span(img, v, f) for v in target)


def check_absorbing():
    checked = 0
    for p, n in ((2, 4), (2, 8), (3, 9)):
        T = make_tower(p, 1, n)
        spaces = flag_spaces(T)
        h = 0
        while n % p**h == 0:
            b = p**h
            for a in range(1, n // b + 1):
                for c in range(1, n // b + 1):
                    if b * (a + c) > n:
                        continue
                    target = spaces[b * (a + c - 1)]
                    us = [T.from_coords(r) for r in spaces[b * a]]
                    vs = [T.from_coords(r) for r in spaces[b * c]]
                    for u, v in itertools.product(us, vs):
                        prod = f_linear_solve(T, [u * v])
                        assert all(linalg.in_span(target, r, T.base) for r in prod)
                        checked += 1
            h += 1
    return checked


def check_degree_kernel(count=500, seed=11):
    rng = np.random.default_rng(seed)
    towers = [(2, 1, 4), (2, 1, 8), (3, 1, 9), (5, 1, 5), (2, 2, 4)]
    flags = {t: build_flag(make_tower(*t)) for t in towers}
    for _ in range(count):
        t = towers[int(rng.integers(0, len(towers)))]
        flag = flags[t]
        T = flag.tower
        deg = int(rng.integers(0, T.n))
        coeffs = [T.big.element(rng.integers(0, T.p, size=T.degree)) for _ in range(deg + 1)]
        while coeffs[-1].is_zero():
            coeffs[-1] = T.big.element(rng.integers(0, T.p, size=T.degree))
        coeffs += [T.big.zero()] * (T.n - deg - 1)
        f = SkewPoly(T, tuple(coeffs))
        assert f.degree == deg
        assert linalg.rank(matrix_of(f, flag), T.base) >= T.n - deg


def check_adjoint(count=1000, seed=5):
    rng = np.random.default_rng(seed)
    for _ in range(count):
        D = _random_diagram(rng)
        A = fd.adjoint(D)
        assert fd.adjoint(A) == D and len(A) == len(D)
        for d in range(1, D.n + 1):
            assert fd.nu_min(A, d) == fd.nu_min(D, d)


def check_nu_oracle(count=1000, seed=6):
    rng = np.random.default_rng(seed)
    for _ in range(count):
        D = _random_diagram(rng)
        d = int(rng.integers(1, D.n + 1))
        assert fd.nu_min(D, d) == verify.nu_min_oracle(D, d)
        cells = D.cells()
        for j in range(d):
            literal = sum(1 for (r, c) in cells if r > d - j - 1 and c <= D.n - j)
            assert fd.nu_j(D, d, j) == literal


def _all_diagrams(max_n):
    for n in range(1, max_n + 1):
        for cols in itertools.combinations_with_replacement(range(n + 1), n):
            yield fd.from_columns(cols)


def check_strictly_monotone_are_mds_constructible(max_n=7):
    count = 0
    for D in _all_diagrams(max_n):
        if fd.is_strictly_monotone(D) or fd.is_initially_convex(D):
            for d in range(2, D.n + 1):
                assert fd.is_mds_constructible(D, d), (D, d)
                count += 1
    return count


@lru_cache(maxsize=None)
def _regions(n, d, j):
    S = fd.region("S", n, d, j).cells
    T = fd.region("T", n, d, j).cells
    L = fd.region("L", n, d, j).cells
    diags = [fd.diagonal(n, i) for i in range(1, n + 1)]
    return S, T, L, diags


def check_mds_diagonal_structure(max_n=7):
    pairs = 0
    for D in _all_diagrams(max_n):
        n = D.n
        cells = D.cells()
        for d in range(2, n + 1):
            if not fd.is_mds_constructible(D, d):
                continue
            for j in fd.singleton_indices(D, d):
                S, T, L, diags = _regions(n, d, j)
                assert cells & S == cells & T, (D, d, j)
                X = {i for i in range(1, n - d + 2) if len(cells & diags[i - 1]) >= d}
                Y = {i for i in range(1, n - d + 2) if cells & diags[i - 1] & S}
                assert X == Y, (D, d, j)
                for i in Y:
                    assert diags[i - 1] & L <= cells, (D, d, j, i)
                pairs += 1
    return pairs


def test_criterion_8_property_suite():
    failures = []
    for name, fn in [
        ("random strictly monotone codes", check_random_strictly_monotone_codes),
        ("flag kernels", check_flag_kernels),
        ("absorbing products", check_absorbing),
        ("degree-kernel bound", check_degree_kernel),
        ("adjoint involution and invariance", check_adjoint),
        ("nu cross-oracle", check_nu_oracle),
        ("strictly monotone pairs are MDS-constructible", check_strictly_monotone_are_mds_constructible),
        ("MDS diagonal structure", check_mds_diagonal_structure),
    ]:
        try:
            fn()
        except AssertionError as exc:
            failures.append(f"{name}: {exc}")
    assert not failures, "; ".join(failures)


CRITERIA = [
    test_criterion_1_nu_bound_worked_deletions,
    test_criterion_2_nu_versus_mds_table,
    test_criterion_3_flag_and_compatible_bases,
    test_criterion_4_representation_matrix,
    test_criterion_5_mfd_code_over_f5,
    test_criterion_6_mfd_code_over_f2,
    test_criterion_7_mds_route,
    test_criterion_8_property_suite,
]


if __name__ == "__main__":
    import sys

    bad = 0
    for fn in CRITERIA:
        num, _, label = fn.__name__[len("test_criterion_"):].partition("_")
        try:
            fn()
            verdict = "PASS"
        except AssertionError as exc:
            verdict, bad = f"FAIL ({exc})", bad + 1
        print(f"criterion {num}: {verdict}  {label.replace('_', ' ')}")
    sys.exit(1 if bad else 0)
