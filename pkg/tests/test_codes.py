import json

import numpy as np
import pytest

from mfd_forge import errors, golden, verify
from mfd_forge import ferrers as fd
from mfd_forge.codes import (
    antitranspose,
    code_from_dict,
    code_to_dict,
    code_to_json,
    construct,
    construct_initially_convex,
    construct_mds_constructible,
    construct_p_convex,
    construct_p_monotone,
    construct_strictly_monotone,
    intersect_with_support,
    mds_plan,
    render_matrix,
    trivial_code,
)


def _same(gens, want):
    return len(gens) == len(want) and all(np.array_equal(a, b) for a, b in zip(gens, want))


def test_f5_generators_exact():
    D = fd.from_columns(golden.F5_MFD_DIAGRAM)
    C = construct_p_monotone(D, 4, 5, modulus=golden.F5_MODULUS, basis=golden.F5_BASIS)
    assert _same(C.generators, golden.F5_MFD_GENERATORS)
    assert C.trace["max_sigma_bar_degree"] == 1


def test_f2_strictly_monotone_generators_exact():
    D = fd.from_columns(golden.F2_UT_DIAGRAM)
    C = construct_strictly_monotone(D, 4, 2, modulus=golden.F2_MODULUS, basis=golden.F2_BASIS)
    assert _same(C.generators, golden.F2_UT_GENERATORS)
    assert C.trace["embedded_diagram"] == [0, 0, 1, 2, 3, 4, 5, 6] and C.trace["offset"] == 2


def test_mds_trace():
    C = construct(fd.from_columns(golden.MDS_DIAGRAM), 4, "2^1")
    assert C.path == "mds-constructible"
    for key, val in golden.MDS_TRACE.items():
        assert C.trace[key] == val
    assert C.dimension == golden.MDS_DIMENSION


@pytest.mark.parametrize("cols,d,field,path", [
    ((1, 2, 3, 4, 5, 6), 4, "3^1", "strictly-monotone"),
    ((0, 1, 2, 2, 3), 2, "2^1", "initially-convex"),
    ((4, 4, 4, 4, 8, 8, 8, 8), 5, "2^1", "p-monotone"),
    ((1, 2, 4, 5, 5), 3, "5^1", "p-monotone"),
    ((2, 3, 3, 4, 5), 3, "5^1", "p-convex"),
    ((2, 2, 4, 4), 2, "2^1", "p-monotone"),
    ((0, 2, 2, 3, 3, 5, 6, 8), 4, "3^1", "mds-constructible"),
    ((1, 2, 4, 5, 5), 4, "2^1", "mds-constructible"),
    ((0, 3, 3, 3), 1, "2^1", "trivial"),
])
def test_dispatch_and_verify(cols, d, field, path):
    D = fd.from_columns(cols)
    C = construct(D, d, field)
    assert C.path == path
    rep = verify.is_mfd(C)
    assert rep.passed and rep.certificate, rep.to_dict()
    assert C.dimension == fd.nu_min(D, d)


def test_unsupported_class_message():
    with pytest.raises(errors.UnsupportedDiagramClass, match="power of 2"):
        construct(fd.from_columns((1, 2, 4, 5, 5)), 2, "2^1")


def test_construction_errors():
    with pytest.raises(errors.OrderNotPowerOfChar):
        construct_p_monotone(fd.from_columns((1, 2, 3)), 2, 2)
    with pytest.raises(errors.NotPMonotone):
        construct_p_monotone(fd.from_columns((0, 3, 3, 3)), 2, 2)
    with pytest.raises(errors.NotStrictlyMonotone):
        construct_strictly_monotone(fd.from_columns((1, 2, 4, 5, 5)), 2, 2)
    with pytest.raises(errors.NotInitiallyConvex):
        construct_initially_convex(fd.from_columns((2, 2, 4, 5, 5)), 2, 2)
    with pytest.raises(errors.NotMdsConstructible):
        construct_mds_constructible(fd.from_columns((1, 2, 4, 5, 5)), 2, 2)
    with pytest.raises(errors.OutOfRange):
        construct(fd.from_columns((1, 2, 3)), 4)
    with pytest.raises(errors.InvalidBasis):
        construct_p_monotone(fd.from_columns((1, 2, 3, 4)), 2, 2, basis=(1, 0, 2, 3))


def test_p_convex_is_antitransposed_monotone():
    D = fd.from_columns((2, 3, 3, 4, 5))
    C = construct_p_convex(D, 3, 5)
    inner = construct_p_monotone(fd.adjoint(D), 3, 5)
    assert _same(C.generators, [antitranspose(g) for g in inner.generators])
    A = np.arange(9).reshape(3, 3)
    assert np.array_equal(antitranspose(antitranspose(A)), A)
    assert antitranspose(A)[0, 0] == A[2, 2] and antitranspose(A)[0, 2] == A[0, 2]


def test_intersect_with_support():
    C = construct(fd.upper_triangular(4), 2, "2^1")
    sub = intersect_with_support(C, fd.from_columns((0, 1, 2, 3)))
    assert verify.check_support(sub)
    assert sub.dimension == 3
    with pytest.raises(errors.NotSubdiagram):
        intersect_with_support(C, fd.full(4))


def test_mds_plan_fields():
    plan = mds_plan(fd.from_columns(golden.MDS_DIAGRAM), 4)
    assert plan["j"] == 1 and plan["ell"] == 2 and plan["Y"][0] == 2
    assert plan["D_prime"].is_subdiagram_of(plan["D_double_prime"])


def test_trivial_code():
    D = fd.from_columns((0, 1, 3))
    C = trivial_code(D, 3)
    assert C.dimension == len(D) and verify.is_mfd(C).passed


def test_extension_field_codes():
    C = construct(fd.upper_triangular(4), 3, "2^2")
    assert C.q == 4 and C.base_modulus == (1, 1, 1)
    rep = verify.is_mfd(C)
    assert rep.passed and rep.codewords_checked == 4**C.dimension - 1
    text = render_matrix(C.generators[0], C.field)
    assert text.splitlines()[0].startswith("[1,0] [0,0]")


@pytest.mark.parametrize("field", ["3^1", "2^2"])
def test_json_round_trip(field):
    C = construct(fd.from_columns((0, 1, 2, 3, 4)), 3, field)
    data = json.loads(code_to_json(C))
    back = code_from_dict(data)
    assert _same(back.generators, C.generators)
    assert back.diagram == C.diagram and (back.p, back.e, back.d) == (C.p, C.e, C.d)
    assert code_to_dict(back)["generators"] == data["generators"]
