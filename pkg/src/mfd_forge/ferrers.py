"""Ferrers diagram combinatorics.

A diagram of order n is stored as its nondecreasing column counts
``(c_1, ..., c_n)``.  Cells are ``(row, column)`` pairs, 1-based, row 1 at the
top; column ``j`` holds the cells ``(1, j), ..., (c_j, j)``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

from .errors import (
    ColumnExceedsOrder,
    NotNondecreasing,
    NotStrictlyPMonotone,
    NotTopRightJustified,
    OutOfRange,
)

Cell = tuple[int, int]


@dataclass(frozen=True)
class FerrersDiagram:
    n: int
    columns: tuple[int, ...]

    def __post_init__(self):
        if self.n < 1:
            raise OutOfRange("order must be positive")
        if len(self.columns) != self.n:
            raise OutOfRange(f"expected {self.n} columns, got {len(self.columns)}")
        prev = 0
        for j, c in enumerate(self.columns, start=1):
            if c < 0 or c > self.n:
                raise ColumnExceedsOrder(f"column {j} has {c} cells, order is {self.n}")
            if c < prev:
                raise NotNondecreasing(f"column {j} ({c}) is shorter than column {j - 1} ({prev})")
            prev = c

    def __len__(self) -> int:
        return sum(self.columns)

    def __contains__(self, cell: Cell) -> bool:
        i, j = cell
        return 1 <= j <= self.n and 1 <= i <= self.columns[j - 1]

    def __getitem__(self, j: int) -> int:
        """1-based column count ``c_j``."""
        return self.columns[j - 1]

    def __str__(self) -> str:
        return ",".join(map(str, self.columns))

    def cells(self) -> frozenset[Cell]:
        return to_cells(self)

    def grid(self, dot: str = "*", blank: str = ".") -> str:
        return "\n".join(
            " ".join(dot if i <= c else blank for c in self.columns) for i in range(1, self.n + 1)
        )

    def is_subdiagram_of(self, other: "FerrersDiagram") -> bool:
        return self.n == other.n and all(a <= b for a, b in zip(self.columns, other.columns))


def from_columns(columns: Iterable[int]) -> FerrersDiagram:
    cols = tuple(int(c) for c in columns)
    return FerrersDiagram(len(cols), cols)


def from_cells(cells: Iterable[Cell], n: int) -> FerrersDiagram:
    cellset = set(cells)
    for i, j in cellset:
        if not (1 <= i <= n and 1 <= j <= n):
            raise OutOfRange(f"cell {(i, j)} outside the {n}x{n} grid")
    for i, j in cellset:
        if (j < n and (i, j + 1) not in cellset) or (i > 1 and (i - 1, j) not in cellset):
            raise NotTopRightJustified(f"cell {(i, j)} breaks top-right justification")
    return FerrersDiagram(n, tuple(sum(1 for i in range(1, n + 1) if (i, j) in cellset)
                                   for j in range(1, n + 1)))


def to_cells(D: FerrersDiagram) -> frozenset[Cell]:
    return frozenset((i, j) for j, c in enumerate(D.columns, start=1) for i in range(1, c + 1))


def parse_diagram(text: str) -> FerrersDiagram:
    """Parse ``"0,1,1,4,5"``; the error names the offending position."""
    parts = [t.strip() for t in text.strip().strip("()[]").split(",")]
    cols = []
    for pos, t in enumerate(parts, start=1):
        try:
            cols.append(int(t))
        except ValueError:
            raise ValueError(f"diagram entry {pos} is not an integer: {t!r}") from None
    return from_columns(cols)


def empty(n: int) -> FerrersDiagram:
    return FerrersDiagram(n, (0,) * n)


def full(n: int) -> FerrersDiagram:
    return FerrersDiagram(n, (n,) * n)


def upper_triangular(n: int) -> FerrersDiagram:
    """T_n = (1, 2, ..., n)."""
    return FerrersDiagram(n, tuple(range(1, n + 1)))


def adjoint(D: FerrersDiagram) -> FerrersDiagram:
    """Reflection across the antidiagonal: (i, j) -> (n+1-j, n+1-i)."""
    n = D.n
    cols = []
    for j in range(1, n + 1):
        # new column j collects old row n+1-j; old row r has cells in columns with c >= r
        r = n + 1 - j
        cols.append(sum(1 for c in D.columns if c >= r))
    return FerrersDiagram(n, tuple(cols))


def antitranspose_cell(cell: Cell, n: int) -> Cell:
    i, j = cell
    return (n + 1 - j, n + 1 - i)


def _height_ok(D: FerrersDiagram, p: int, h: int) -> bool:
    b = p**h
    n = D.n
    if n % b or any(c % b for c in D.columns):
        return False
    for Q in range(n // b):
        block = {D.columns[n - r - 1] for r in range(Q * b, (Q + 1) * b)}
        if len(block) != 1:
            return False
    return True


def p_height(D: FerrersDiagram, p: int) -> int:
    hmax = 0
    while D.n % p ** (hmax + 1) == 0:
        hmax += 1
    for h in range(hmax, 0, -1):
        if _height_ok(D, p, h):
            return h
    return 0


def p_contraction(D: FerrersDiagram, p: int) -> FerrersDiagram:
    b = p ** p_height(D, p)
    return FerrersDiagram(D.n // b, tuple(D.columns[b * i - 1] // b for i in range(1, D.n // b + 1)))


# class predicates


def is_monotone(D: FerrersDiagram) -> bool:
    c, n = D.columns, D.n
    return all(c[i + 1] > c[i] for i in range(n - 1) if 0 < c[i] < n)


def is_strictly_monotone(D: FerrersDiagram) -> bool:
    c = D.columns
    return all(c[i + 1] > c[i] for i in range(D.n - 1) if c[i] > 0)


def is_convex(D: FerrersDiagram) -> bool:
    c = D.columns
    return all(c[i + 1] - c[i] <= 1 for i in range(D.n - 1))


def is_initially_convex(D: FerrersDiagram) -> bool:
    return D.columns[0] <= 1 and is_convex(D)


def is_p_monotone(D: FerrersDiagram, p: int) -> bool:
    return is_monotone(p_contraction(D, p))


def is_p_convex(D: FerrersDiagram, p: int) -> bool:
    return is_convex(p_contraction(D, p))


def is_strictly_p_monotone(D: FerrersDiagram, p: int) -> bool:
    return is_strictly_monotone(p_contraction(D, p))


def is_initially_p_convex(D: FerrersDiagram, p: int) -> bool:
    return is_initially_convex(p_contraction(D, p))


# Singleton-like bound


def _check_d(D: FerrersDiagram, d: int) -> None:
    if not 1 <= d <= D.n:
        raise OutOfRange(f"d must lie in 1..{D.n}, got {d}")


def nu_j(D: FerrersDiagram, d: int, j: int) -> int:
    _check_d(D, d)
    if not 0 <= j <= d - 1:
        raise OutOfRange(f"j must lie in 0..{d - 1}, got {j}")
    return sum(max(0, c - d + 1 + j) for c in D.columns[: D.n - j])


def nu_values(D: FerrersDiagram, d: int) -> list[int]:
    return [nu_j(D, d, j) for j in range(d)]


def nu_min(D: FerrersDiagram, d: int) -> int:
    _check_d(D, d)
    if d == 1:
        return len(D)
    return min(nu_values(D, d))


def diagonal(n: int, i: int) -> frozenset[Cell]:
    """Delta_i^n = {(j, j+i-1) : 1 <= j <= n-i+1}."""
    if not 1 <= i <= n:
        raise OutOfRange(f"diagonal index must lie in 1..{n}, got {i}")
    return frozenset((j, j + i - 1) for j in range(1, n - i + 2))


def diagonal_count(D: FerrersDiagram, i: int) -> int:
    if not 1 <= i <= D.n:
        raise OutOfRange(f"diagonal index must lie in 1..{D.n}, got {i}")
    return sum(1 for j in range(1, D.n - i + 2) if (j, j + i - 1) in D)


def nu_mds(D: FerrersDiagram, d: int) -> int:
    _check_d(D, d)
    return sum(max(0, diagonal_count(D, i) - d + 1) for i in range(1, D.n + 1))


def is_mds_constructible(D: FerrersDiagram, d: int) -> bool:
    _check_d(D, d)
    if d == 1:
        return True
    return nu_min(D, d) == nu_mds(D, d)


def singleton_indices(D: FerrersDiagram, d: int) -> frozenset[int]:
    if not 2 <= d <= D.n:
        raise OutOfRange(f"d must lie in 2..{D.n}, got {d}")
    vals = nu_values(D, d)
    m = min(vals)
    return frozenset(j for j, v in enumerate(vals) if v == m)


def is_j_singleton(D: FerrersDiagram, d: int, j: int) -> bool:
    if not 0 <= j <= d - 1:
        raise OutOfRange(f"j must lie in 0..{d - 1}, got {j}")
    return j in singleton_indices(D, d)


@dataclass(frozen=True)
class Region:
    kind: str
    n: int
    d: int
    j: int
    cells: frozenset[Cell] = field(repr=False)

    def __len__(self) -> int:
        return len(self.cells)

    def __contains__(self, cell: Cell) -> bool:
        return cell in self.cells


def region(kind: str, n: int, d: int, j: int) -> Region:
    """The sets S_{n,d,j}, T_{n,d,j} = S cap T_n and L_{n,d,j} = complement of S."""
    if not 2 <= d <= n:
        raise OutOfRange(f"d must lie in 2..{n}, got {d}")
    if not 0 <= j <= d - 1:
        raise OutOfRange(f"j must lie in 0..{d - 1}, got {j}")
    kind = kind.upper()
    s = frozenset((i, l) for i in range(d - j, n + 1) for l in range(1, n - j + 1))
    if kind == "S":
        cells = s
    elif kind == "T":
        cells = frozenset((i, l) for i, l in s if i <= l)
    elif kind == "L":
        cells = frozenset((i, l) for i in range(1, n + 1) for l in range(1, n + 1)) - s
    else:
        raise ValueError(f"unknown region kind {kind!r}")
    return Region(kind, n, d, j, cells)


def embed_strictly_monotone(D: FerrersDiagram, p: int) -> tuple[FerrersDiagram, int]:
    """Prepend zero columns to reach order p^m, the least power of p that is >= n.

    Returns the enlarged diagram and the number of prepended columns.
    """
    if not is_strictly_p_monotone(D, p):
        raise NotStrictlyPMonotone(f"({D}) is not strictly {p}-monotone")
    target = 1
    while target < D.n:
        target *= p
    offset = target - D.n
    return FerrersDiagram(target, (0,) * offset + D.columns), offset


@dataclass
class DistanceRecord:
    d: int
    nu: list[int]
    nu_min: int
    nu_mds: int
    mds_constructible: bool
    singleton: list[int]


@dataclass
class DiagramProfile:
    diagram: FerrersDiagram
    adjoint: FerrersDiagram
    size: int
    flags: dict[str, bool]
    p_heights: dict[int, int]
    contractions: dict[int, FerrersDiagram]
    p_flags: dict[int, dict[str, bool]]
    records: list[DistanceRecord]

    def to_dict(self) -> dict:
        return {
            "n": self.diagram.n,
            "columns": list(self.diagram.columns),
            "size": self.size,
            "adjoint": list(self.adjoint.columns),
            "flags": self.flags,
            "primes": {
                str(p): {
                    "height": self.p_heights[p],
                    "contraction": list(self.contractions[p].columns),
                    **self.p_flags[p],
                }
                for p in self.p_heights
            },
            "distances": [
                {
                    "d": r.d,
                    "nu": r.nu,
                    "nu_min": r.nu_min,
                    "nu_mds": r.nu_mds,
                    "mds_constructible": r.mds_constructible,
                    "singleton": r.singleton,
                }
                for r in self.records
            ],
        }


def profile(D: FerrersDiagram, primes: Iterable[int] = (2, 3, 5), ds: Iterable[int] | None = None
            ) -> DiagramProfile:
    primes = list(primes)
    ds = list(ds) if ds is not None else list(range(1, D.n + 1))
    flags = {
        "monotone": is_monotone(D),
        "strictly_monotone": is_strictly_monotone(D),
        "convex": is_convex(D),
        "initially_convex": is_initially_convex(D),
    }
    p_flags = {
        p: {
            "p_monotone": is_p_monotone(D, p),
            "p_convex": is_p_convex(D, p),
            "strictly_p_monotone": is_strictly_p_monotone(D, p),
            "initially_p_convex": is_initially_p_convex(D, p),
        }
        for p in primes
    }
    records = []
    for d in ds:
        records.append(DistanceRecord(
            d=d,
            nu=nu_values(D, d),
            nu_min=nu_min(D, d),
            nu_mds=nu_mds(D, d),
            mds_constructible=is_mds_constructible(D, d),
            singleton=sorted(singleton_indices(D, d)) if d >= 2 else [0],
        ))
    return DiagramProfile(
        diagram=D,
        adjoint=adjoint(D),
        size=len(D),
        flags=flags,
        p_heights={p: p_height(D, p) for p in primes},
        contractions={p: p_contraction(D, p) for p in primes},
        p_flags=p_flags,
        records=records,
    )
