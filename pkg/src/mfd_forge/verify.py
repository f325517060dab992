"""Independent checks for Ferrers diagram codes.

Nothing here looks at how a code was built: support, dimension and minimum
rank are recomputed from the generator matrices alone, and the bound is
recounted by deleting cells from the diagram instead of using the closed
formula in :mod:`mfd_forge.ferrers`.
"""

from __future__ import annotations

import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from typing import Optional

import numpy as np

from . import ferrers as fd
from . import linalg
from .codes import FerrersCode
from .errors import CapExceeded, NoNonzeroCodewords, OutOfRange
from .ferrers import FerrersDiagram

DEFAULT_CAP = 2**20
CHUNK = 1 << 15


def default_cap() -> int:
    env = os.environ.get("MFD_FORGE_CAP")
    return int(env) if env else DEFAULT_CAP


def check_support(C: FerrersCode, D: FerrersDiagram | None = None) -> bool:
    D = C.diagram if D is None else D
    if D.n != C.n:
        return False
    mask = np.zeros((C.n, C.n), dtype=bool)
    for i, j in fd.to_cells(D):
        mask[i - 1, j - 1] = True
    return all(not np.asarray(g)[~mask].any() for g in C.generators)


def dimension(C: FerrersCode) -> int:
    return linalg.rank(C.flat(), C.field)


def _coeff_block(start: int, stop: int, q: int, k: int) -> np.ndarray:
    idx = np.arange(start, stop, dtype=np.int64)
    return (idx[:, None] // (q ** np.arange(k, dtype=np.int64))[None, :]) % q


class _Enumerator:
    """Codewords by index, summed from small tables of partial combinations.

    Generators are split into chunks of ``s`` consecutive ones; table j holds
    all q^s combinations of chunk j, so a codeword costs one lookup per chunk.
    Over GF(2) the tables hold packed row bitmasks and chunks combine by XOR.
    """

    def __init__(self, flat: np.ndarray, n: int, f: linalg.SmallField, table_size: int = 4096):
        self.n, self.f, self.q = n, f, f.q
        k = flat.shape[0]
        self.gf2 = f.q == 2 and n <= 62
        s = 1
        while f.q ** (s + 1) <= table_size and s < k:
            s += 1
        self.chunks = []
        for t0 in range(0, k, s):
            width = min(s, k - t0)
            combos = f.dot(_coeff_block(0, f.q**width, f.q, width), flat[t0:t0 + width])
            if self.gf2:
                combos = linalg.pack_gf2(combos.reshape(-1, n, n))
            self.chunks.append((f.q**t0, f.q**width, combos))

    def ranks(self, lo: int, hi: int) -> np.ndarray:
        idx = np.arange(lo, hi, dtype=np.int64)
        acc = None
        for scale, size, table in self.chunks:
            part = table[(idx // scale) % size]
            if acc is None:
                acc = part
            elif self.gf2:
                acc = acc ^ part
            elif self.f.is_prime_field:
                acc = acc + part
            else:
                acc = self.f.add(acc, part)
        if self.gf2:
            return linalg.batched_rank_packed(acc, self.n)
        if self.f.is_prime_field:
            acc %= self.f.p
        return linalg.batched_rank(acc.reshape(-1, self.n, self.n), self.f)


def _projective_ranges(q: int, k: int) -> list[tuple[int, int]]:
    """Index ranges of codewords whose most significant nonzero coefficient is 1.

    Every nonzero codeword is a scalar multiple of exactly one of these, with
    the same rank, and that representative has the smallest index in its class.
    """
    return [(q**t, 2 * q**t) for t in range(k)]


def _split(ranges: list[tuple[int, int]], size: int) -> list[tuple[int, int]]:
    out = []
    for lo, hi in ranges:
        out += [(a, min(hi, a + size)) for a in range(lo, hi, size)]
    return out


def _scan(args) -> tuple[int, int]:
    """Minimum rank and its first index over a list of index ranges."""
    flat, n, p, e, base_modulus, ranges = args
    from .codes import base_field

    enum = _Enumerator(flat, n, base_field(p, e, base_modulus))
    best, best_idx = n + 1, -1
    for lo, hi in ranges:
        ranks = enum.ranks(lo, hi)
        pos = int(np.argmin(ranks))
        if ranks[pos] < best:
            best, best_idx = int(ranks[pos]), lo + pos
    return best, best_idx


@dataclass
class MinRankResult:
    min_rank: int
    witness_index: int
    witness_coeffs: list[int]
    witness: np.ndarray
    checked: int
    representatives: int


def min_rank_exhaustive(C: FerrersCode, cap: int | None = None, workers: int = 1) -> MinRankResult:
    """Minimum rank over all nonzero codewords.

    The index of a codeword is sum_t a_t q^t for its generator coefficients
    a_t.  Only one representative per line through the origin is ranked
    (scalar multiples share the rank), which covers all q^k - 1 nonzero
    codewords.  Ties go to the smallest index, so the result does not depend
    on how the ranges are split between workers.
    """
    cap = default_cap() if cap is None else cap
    k, q, n = C.dimension, C.q, C.n
    if k == 0:
        raise NoNonzeroCodewords("the zero code has no nonzero codewords")
    total = q**k - 1
    if total > cap:
        raise CapExceeded(f"{total} codewords exceed the cap {cap}; use min_rank_sampled instead")
    flat = C.flat()
    pieces = _split(_projective_ranges(q, k), CHUNK)
    workers = max(1, min(workers, len(pieces)))
    jobs = [(flat, n, C.p, C.e, C.base_modulus, pieces[w::workers]) for w in range(workers)]
    if workers == 1:
        parts = [_scan(j) for j in jobs]
    else:
        with ProcessPoolExecutor(workers) as ex:
            parts = list(ex.map(_scan, jobs))
    best, idx = min(parts)
    coeffs = _coeff_block(idx, idx + 1, q, k)[0]
    witness = C.field.dot(coeffs[None, :], flat).reshape(n, n)
    reps = sum(hi - lo for lo, hi in pieces)
    return MinRankResult(best, idx, [int(a) for a in coeffs], witness, total, reps)


@dataclass
class SampledResult:
    smallest_rank_seen: int
    trials: int
    seed: int
    violation: bool
    witness_coeffs: list[int]
    certificate: bool = False   # sampling never proves anything


def min_rank_sampled(C: FerrersCode, trials: int, seed: int = 0,
                     design_distance: int | None = None) -> SampledResult:
    """Random nonzero codewords; the smallest rank seen only bounds the minimum from above."""
    if trials < 1:
        raise ValueError("trials must be >= 1")
    k, q, n = C.dimension, C.q, C.n
    if k == 0:
        raise NoNonzeroCodewords("the zero code has no nonzero codewords")
    d = C.d if design_distance is None else design_distance
    rng = np.random.default_rng(seed)
    f = C.field
    flat = C.flat()
    best, best_coeffs = n + 1, None
    done = 0
    while done < trials:
        b = min(CHUNK, trials - done)
        coeffs = rng.integers(0, q, size=(b, k), dtype=np.int64)
        zero = ~coeffs.any(axis=1)
        coeffs[zero, 0] = 1
        ranks = linalg.batched_rank(f.dot(coeffs, flat).reshape(-1, n, n), f)
        pos = int(np.argmin(ranks))
        if ranks[pos] < best:
            best, best_coeffs = int(ranks[pos]), coeffs[pos]
        done += b
    return SampledResult(best, trials, seed, best < d, [int(a) for a in best_coeffs])


def nu_min_oracle(D: FerrersDiagram, d: int) -> int:
    """Fewest cells left after deleting the first d-j-1 rows and the last j columns."""
    n = D.n
    if not 1 <= d <= n:
        raise OutOfRange(f"d must lie in 1..{n}, got {d}")
    cells = fd.to_cells(D)
    counts = []
    for j in range(d):
        top = d - j - 1
        counts.append(sum(1 for (r, c) in cells if r > top and c <= n - j))
    return min(counts)


@dataclass
class VerificationReport:
    support_ok: bool
    dimension: int
    expected_dimension: int
    design_distance: int
    min_rank: Optional[int]
    min_rank_is_upper_bound: bool
    method: str                       # "exhaustive" | "sampled" | "none"
    codewords_checked: int
    witness: Optional[list] = None
    elapsed: float = 0.0
    certificate: bool = False
    notes: list[str] = field(default_factory=list)

    @property
    def dimension_ok(self) -> bool:
        return self.dimension == self.expected_dimension

    @property
    def distance_ok(self) -> bool:
        if self.min_rank is None:
            return self.dimension == 0
        return self.min_rank >= self.design_distance

    @property
    def passed(self) -> bool:
        return self.support_ok and self.dimension_ok and self.distance_ok

    def to_dict(self) -> dict:
        out = asdict(self)
        out.update(dimension_ok=self.dimension_ok, distance_ok=self.distance_ok, passed=self.passed)
        return out


def is_mfd(C: FerrersCode, D: FerrersDiagram | None = None, d: int | None = None,
           cap: int | None = None, trials: int | None = None, seed: int = 0,
           workers: int = 1) -> VerificationReport:
    """Support, dimension against the recounted bound, and minimum rank.

    Above the enumeration cap the minimum rank is sampled (``trials``
    codewords, default 10^4) and the report is flagged as not a certificate.
    """
    t0 = time.perf_counter()
    D = C.diagram if D is None else D
    d = C.d if d is None else d
    support = check_support(C, D)
    dim = dimension(C)
    expected = nu_min_oracle(D, d)
    notes = []
    if dim != C.dimension:
        notes.append(f"generators are dependent: {C.dimension} listed, rank {dim}")
    if dim == 0:
        rep = VerificationReport(support, dim, expected, d, None, False, "none", 0,
                                 certificate=support and expected == 0, notes=notes)
    else:
        try:
            res = min_rank_exhaustive(_independent(C), cap, workers)
            rep = VerificationReport(support, dim, expected, d, res.min_rank, False, "exhaustive",
                                     res.checked, res.witness.tolist(), notes=notes)
            rep.certificate = rep.passed
        except CapExceeded:
            s = min_rank_sampled(_independent(C), trials or 10_000, seed, d)
            notes.append("sampled minimum rank: an upper bound only, not a proof")
            rep = VerificationReport(support, dim, expected, d, s.smallest_rank_seen, True,
                                     "sampled", s.trials, notes=notes)
    rep.elapsed = time.perf_counter() - t0
    return rep


def _independent(C: FerrersCode) -> FerrersCode:
    if linalg.rank(C.flat(), C.field) == C.dimension:
        return C
    rows, _ = linalg.rref(C.flat(), C.field)
    return C.with_generators([r.reshape(C.n, C.n) for r in rows])
