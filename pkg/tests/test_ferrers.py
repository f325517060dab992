import pytest
from hypothesis import given, strategies as st

from mfd_forge import errors
from mfd_forge import ferrers as fd
from mfd_forge.verify import nu_min_oracle


@st.composite
def diagrams(draw, max_n=9):
    n = draw(st.integers(1, max_n))
    cols = sorted(draw(st.lists(st.integers(0, n), min_size=n, max_size=n)))
    return fd.from_columns(cols)


def test_validation_errors():
    with pytest.raises(errors.NotNondecreasing):
        fd.from_columns((2, 1, 3))
    with pytest.raises(errors.ColumnExceedsOrder):
        fd.from_columns((0, 4, 4))
    with pytest.raises(errors.NotTopRightJustified):
        fd.from_cells({(1, 1)}, 2)
    with pytest.raises(ValueError, match="entry 2"):
        fd.parse_diagram("0,a,1")


def test_cells_round_trip():
    D = fd.from_columns((0, 1, 1, 4, 5))
    assert len(D) == 11
    assert fd.from_cells(D.cells(), 5) == D
    assert (4, 4) in D and (2, 2) not in D
    assert str(fd.parse_diagram("(0, 1,1,4,5)")) == "0,1,1,4,5"


def test_adjoint_example():
    assert fd.adjoint(fd.from_columns((0, 1, 1, 4, 5))).columns == (1, 2, 2, 2, 4)
    T = fd.upper_triangular(6)
    assert fd.adjoint(T) == T


def test_nu_worked_deletions():
    D = fd.from_columns((0, 1, 1, 4, 5))
    assert fd.nu_values(D, 3) == [5, 3, 2]
    assert fd.nu_min(D, 3) == 2


@pytest.mark.parametrize("cols,table", [
    ((0, 0, 1, 3, 4), {2: (4, 4), 3: (1, 1), 4: (0, 0), 5: (0, 0)}),
    ((1, 2, 4, 5, 5), {2: (12, 10), 3: (7, 6), 4: (3, 3), 5: (1, 1)}),
])
def test_nu_versus_mds_table(cols, table):
    D = fd.from_columns(cols)
    for d, (lo, mds) in table.items():
        assert (fd.nu_min(D, d), fd.nu_mds(D, d)) == (lo, mds)
        assert fd.is_mds_constructible(D, d) == (lo == mds)


def test_triangular_nu():
    for n in range(1, 8):
        assert fd.nu_min(fd.upper_triangular(n), n) == 1
        assert fd.nu_min(fd.full(n), 1) == n * n


def test_p_height_and_contraction():
    D = fd.from_columns((4, 4, 4, 4, 8, 8, 8, 8))
    assert fd.p_height(D, 2) == 2
    assert fd.p_contraction(D, 2).columns == (1, 2)
    assert fd.is_p_monotone(D, 2)
    assert fd.p_height(fd.from_columns((0, 2, 2, 2)), 2) == 0
    assert fd.p_height(fd.from_columns((0, 0, 2, 2)), 2) == 1
    assert fd.p_height(fd.from_columns((0, 1, 2)), 3) == 0


def test_class_predicates():
    assert fd.is_strictly_monotone(fd.from_columns((0, 0, 1, 3, 4)))
    assert not fd.is_strictly_monotone(fd.from_columns((1, 2, 4, 5, 5)))
    assert fd.is_monotone(fd.from_columns((1, 2, 4, 5, 5)))
    assert fd.is_initially_convex(fd.from_columns((1, 2, 2, 3, 4)))
    assert not fd.is_initially_convex(fd.from_columns((2, 2, 3, 4, 5)))
    assert fd.is_convex(fd.from_columns((2, 2, 3, 4, 5)))


def test_regions():
    n, d, j = 8, 4, 1
    S, T, L = (fd.region(k, n, d, j) for k in "STL")
    assert len(S) + len(L) == n * n
    assert T.cells <= S.cells
    assert all(i <= c for i, c in T.cells)
    assert (len(S), len(L), len(T)) == (42, 22, 15)
    with pytest.raises(errors.OutOfRange):
        fd.region("S", 5, 1, 0)


def test_singleton_and_mds_example():
    D = fd.from_columns((0, 2, 2, 3, 3, 5, 6, 8))
    assert fd.nu_min(D, 4) == fd.nu_mds(D, 4) == 9
    assert fd.singleton_indices(D, 4) == {1}
    assert fd.is_j_singleton(D, 4, 1)


def test_embed_strictly_monotone():
    D = fd.upper_triangular(6)
    assert fd.embed_strictly_monotone(D, 2) == (fd.from_columns((0, 0, 1, 2, 3, 4, 5, 6)), 2)
    assert fd.embed_strictly_monotone(D, 3) == (fd.from_columns((0, 0, 0, 1, 2, 3, 4, 5, 6)), 3)
    E = fd.upper_triangular(4)
    assert fd.embed_strictly_monotone(E, 2) == (E, 0)
    with pytest.raises(errors.NotStrictlyPMonotone):
        fd.embed_strictly_monotone(fd.from_columns((1, 2, 4, 5, 5)), 2)


def test_profile_serialises():
    prof = fd.profile(fd.from_columns((1, 2, 4, 5, 5)), primes=(2, 5), ds=[2, 4])
    out = prof.to_dict()
    assert out["size"] == 17
    assert [r["nu_min"] for r in out["distances"]] == [12, 3]
    assert out["primes"]["5"]["p_monotone"]


@given(diagrams())
def test_adjoint_involution_and_nu(D):
    A = fd.adjoint(D)
    assert fd.adjoint(A) == D and len(A) == len(D)
    for d in range(1, D.n + 1):
        assert fd.nu_min(A, d) == fd.nu_min(D, d)


@given(diagrams(), st.data())
def test_nu_matches_deletion_count(D, data):
    d = data.draw(st.integers(1, D.n))
    assert fd.nu_min(D, d) == nu_min_oracle(D, d)


@given(diagrams(), st.sampled_from([2, 3]))
def test_adjoint_p_structure(D, p):
    A = fd.adjoint(D)
    assert fd.p_height(A, p) == fd.p_height(D, p)
    assert fd.p_contraction(A, p) == fd.adjoint(fd.p_contraction(D, p))
    assert fd.is_p_monotone(D, p) == fd.is_p_convex(A, p)
    assert fd.is_strictly_p_monotone(D, p) == fd.is_initially_p_convex(A, p)


@given(diagrams())
def test_monotone_properties(D):
    if fd.is_monotone(D):
        n = D.n
        for i, j in D.cells():
            if i < n and j < n:
                assert (i + 1, j + 1) in D



@given(diagrams(), st.sampled_from([2, 3, 5]))
def test_p_monotone_bound_by_column_deletion(D, p):
    # the minimum is reached by deleting the last d-1 columns only
    if fd.is_p_monotone(D, p):
        for d in range(1, D.n + 1):
            vals = fd.nu_values(D, d)
            assert min(vals) == vals[-1] == sum(D.columns[: D.n - d + 1])


def test_nu_chain_not_monotone_in_general():
    # the full diagram is p-monotone, yet nu_1 exceeds nu_0 for d = 3
    assert fd.nu_values(fd.full(3), 3) == [3, 4, 3]


@given(diagrams())
def test_embedding_keeps_strictness(D):
    for p in (2, 3):
        if fd.is_strictly_p_monotone(D, p):
            E, off = fd.embed_strictly_monotone(D, p)
            assert fd.is_strictly_p_monotone(E, p)
            assert E.columns[off:] == D.columns and not any(E.columns[:off])
