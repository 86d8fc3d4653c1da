"""Symmetric m x m matrices over a finite field, with exact rank.

A SymMatrix stores only its upper triangle, row-major, as a tuple of
element indices into its field; the full matrix is reconstructed on
demand.  The ambient space Sym(F, m) has q^(m(m+1)/2) matrices and the
distance between two of them is the rank of their difference.

Ambient enumeration is lexicographic over the upper-triangle coordinate
tuple and is budget-guarded: the budget is checked before any work.
Enumeration can be partitioned into disjoint index ranges whose census
counts merge by addition.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Optional, Sequence, Union

from symrank.errors import BudgetExceeded
from symrank.gf import Field, FieldElement

__all__ = [
    "DEFAULT_AMBIENT_BUDGET",
    "SymMatrix",
    "RankProfile",
    "rank",
    "distance",
    "enumerate_sym",
    "enumerate_sym_range",
    "rank_census",
    "puncture_matrix",
    "sym_dim",
    "matrix_to_json",
    "matrix_from_json",
]

DEFAULT_AMBIENT_BUDGET = 2 ** 25


def sym_dim(m: int) -> int:
    """F_q-dimension of the space of symmetric m x m matrices."""
    return m * (m + 1) // 2


def _offset(m: int, i: int, j: int) -> int:
    """Position of entry (i, j), i <= j, in the packed upper triangle."""
    return i * m - i * (i - 1) // 2 + (j - i)


class SymMatrix:
    """A symmetric matrix over a finite field, packed upper triangle."""

    __slots__ = ("field", "m", "upper")

    def __init__(self, field: Field, m: int, upper: Sequence[int]):
        if m < 1:
            raise ValueError(f"matrix order {m} must be >= 1")
        if len(upper) != sym_dim(m):
            raise ValueError(f"expected {sym_dim(m)} upper-triangle entries, "
                             f"got {len(upper)}")
        card = field.cardinality
        for v in upper:
            if not 0 <= v < card:
                raise ValueError(f"entry index {v} out of range for {field!r}")
        self.field = field
        self.m = m
        self.upper = tuple(upper)

    # --- constructors -------------------------------------------------------

    @classmethod
    def zero(cls, field: Field, m: int) -> "SymMatrix":
        return cls(field, m, (0,) * sym_dim(m))

    @classmethod
    def identity(cls, field: Field, m: int) -> "SymMatrix":
        upper = [0] * sym_dim(m)
        for i in range(m):
            upper[_offset(m, i, i)] = 1
        return cls(field, m, upper)

    @classmethod
    def from_entries(cls, field: Field,
                     rows: Sequence[Sequence[Union[int, FieldElement]]]) -> "SymMatrix":
        """Build from a full m x m array, validating symmetry."""
        m = len(rows)
        idx = [[0] * m for _ in range(m)]
        for i, row in enumerate(rows):
            if len(row) != m:
                raise ValueError("matrix is not square")
            for j, v in enumerate(row):
                if isinstance(v, FieldElement):
                    if v.field != field:
                        raise ValueError("entry from the wrong field")
                    idx[i][j] = v.index
                else:
                    idx[i][j] = int(v)
        for i in range(m):
            for j in range(i + 1, m):
                if idx[i][j] != idx[j][i]:
                    raise ValueError(f"entries ({i},{j}) and ({j},{i}) differ")
        upper = [idx[i][j] for i in range(m) for j in range(i, m)]
        return cls(field, m, upper)

    # --- access --------------------------------------------------------------

    def entry_index(self, i: int, j: int) -> int:
        if not (0 <= i < self.m and 0 <= j < self.m):
            raise ValueError(f"entry ({i},{j}) out of range")
        if i > j:
            i, j = j, i
        return self.upper[_offset(self.m, i, j)]

    def entry(self, i: int, j: int) -> FieldElement:
        return FieldElement(self.field, self.entry_index(i, j))

    def to_rows_idx(self) -> list[list[int]]:
        """Full matrix as index rows (mutable working copy)."""
        m = self.m
        return [[self.entry_index(i, j) for j in range(m)] for i in range(m)]

    @property
    def is_zero(self) -> bool:
        return all(v == 0 for v in self.upper)

    # --- algebra --------------------------------------------------------------

    def _same_space(self, other: "SymMatrix") -> None:
        if not isinstance(other, SymMatrix):
            raise ValueError("not a symmetric matrix")
        if other.field != self.field or other.m != self.m:
            raise ValueError("matrices from different spaces")

    def __add__(self, other: "SymMatrix") -> "SymMatrix":
        self._same_space(other)
        add = self.field.add_i
        return SymMatrix(self.field, self.m,
                         tuple(add(a, b) for a, b in zip(self.upper, other.upper)))

    def __sub__(self, other: "SymMatrix") -> "SymMatrix":
        self._same_space(other)
        sub = self.field.sub_i
        return SymMatrix(self.field, self.m,
                         tuple(sub(a, b) for a, b in zip(self.upper, other.upper)))

    def __neg__(self) -> "SymMatrix":
        neg = self.field.neg_i
        return SymMatrix(self.field, self.m, tuple(neg(a) for a in self.upper))

    def scale(self, c: Union[int, FieldElement]) -> "SymMatrix":
        ci = c.index if isinstance(c, FieldElement) else int(c)
        mul = self.field.mul_i
        return SymMatrix(self.field, self.m, tuple(mul(ci, a) for a in self.upper))

    def rank(self) -> int:
        return _rank_rows(self.field, self.to_rows_idx())

    # --- identity ---------------------------------------------------------------

    def __eq__(self, other) -> bool:
        return (isinstance(other, SymMatrix) and other.field == self.field
                and other.m == self.m and other.upper == self.upper)

    def __hash__(self) -> int:
        return hash((self.field, self.m, self.upper))

    def __repr__(self) -> str:
        return f"SymMatrix({self.field!r}, m={self.m}, upper={self.upper})"


# ---------------------------------------------------------------------------
# rank


def _rank_rows_gf2(rows: list[int], m: int) -> int:
    """Rank of bit-packed rows over F_2."""
    r = 0
    for col in range(m):
        bit = 1 << col
        piv = -1
        for i in range(r, len(rows)):
            if rows[i] & bit:
                piv = i
                break
        if piv < 0:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        prow = rows[r]
        for i in range(r + 1, len(rows)):
            if rows[i] & bit:
                rows[i] ^= prow
        r += 1
    return r


def _rank_rows(field: Field, rows: list[list[int]]) -> int:
    """Rank by Gaussian elimination; consumes the working copy."""
    if not rows:
        return 0
    if field.cardinality == 2:
        packed = [sum(1 << j for j, v in enumerate(row) if v) for row in rows]
        return _rank_rows_gf2(packed, len(rows[0]))
    nrows = len(rows)
    ncols = len(rows[0])
    sub = field.sub_i
    mul = field.mul_i
    inv = field.inv_i
    r = 0
    for col in range(ncols):
        piv = -1
        for i in range(r, nrows):
            if rows[i][col]:
                piv = i
                break
        if piv < 0:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        prow = rows[r]
        ipiv = inv(prow[col])
        for i in range(r + 1, nrows):
            f = rows[i][col]
            if f:
                fac = mul(f, ipiv)
                row = rows[i]
                for j in range(col, ncols):
                    if prow[j]:
                        row[j] = sub(row[j], mul(fac, prow[j]))
        r += 1
        if r == nrows:
            break
    return r


def rank(M: SymMatrix) -> int:
    return M.rank()


def distance(A: SymMatrix, B: SymMatrix) -> int:
    """Rank distance: rank(A - B)."""
    return (A - B).rank()


# ---------------------------------------------------------------------------
# ambient enumeration


def enumerate_sym(F: Field, m: int,
                  budget: int = DEFAULT_AMBIENT_BUDGET) -> Iterator[SymMatrix]:
    """All symmetric m x m matrices, lexicographic over upper triangles.

    Refuses eagerly when q^(m(m+1)/2) exceeds the budget.
    """
    n = sym_dim(m)
    total = F.cardinality ** n
    if total > budget:
        raise BudgetExceeded(f"ambient Sym(F{F.cardinality}, {m})", total, budget)
    return _iter_range(F, m, 0, total)


def enumerate_sym_range(F: Field, m: int, start: int, stop: int,
                        budget: int = DEFAULT_AMBIENT_BUDGET) -> Iterator[SymMatrix]:
    """Slice [start, stop) of the lexicographic enumeration.

    Disjoint ranges partition the ambient space, so census counts from
    ranges merge by addition.
    """
    n = sym_dim(m)
    total = F.cardinality ** n
    if not (0 <= start <= stop <= total):
        raise ValueError(f"range [{start}, {stop}) out of bounds for {total}")
    if stop - start > budget:
        raise BudgetExceeded(f"ambient range of Sym(F{F.cardinality}, {m})",
                             stop - start, budget)
    return _iter_range(F, m, start, stop)


def _iter_range(F: Field, m: int, start: int, stop: int) -> Iterator[SymMatrix]:
    n = sym_dim(m)
    q = F.cardinality
    # index i maps to the i-th upper tuple in lexicographic order: the
    # base-q digits of i, most significant digit first
    upper = [0] * n
    i = start
    for pos in range(n - 1, -1, -1):
        upper[pos] = i % q
        i //= q
    while start < stop:
        yield SymMatrix(F, m, tuple(upper))
        start += 1
        for pos in range(n - 1, -1, -1):
            upper[pos] += 1
            if upper[pos] < q:
                break
            upper[pos] = 0


@dataclass(frozen=True)
class RankProfile:
    """Counts of matrices by rank: counts[r] is the number of rank r."""

    q: int
    m: int
    counts: tuple[int, ...]

    @property
    def total(self) -> int:
        return sum(self.counts)


def rank_census(F: Field, m: int,
                budget: int = DEFAULT_AMBIENT_BUDGET,
                start: int = 0, stop: Optional[int] = None) -> RankProfile:
    """Exact rank distribution over (a range of) the ambient space."""
    n = sym_dim(m)
    total = F.cardinality ** n
    if stop is None:
        stop = total
    counts = [0] * (m + 1)
    for M in enumerate_sym_range(F, m, start, stop, budget):
        counts[M.rank()] += 1
    profile = RankProfile(F.cardinality, m, tuple(counts))
    if start == 0 and stop == total:
        assert profile.total == total
        assert profile.counts[0] == 1
    return profile


# ---------------------------------------------------------------------------
# puncturing


def puncture_matrix(M: SymMatrix, k: int) -> SymMatrix:
    """Delete row and column k; the result stays symmetric.

    Rank can drop by at most 2 and never grows.
    """
    if not 0 <= k < M.m:
        raise ValueError(f"index {k} out of range for order {M.m}")
    if M.m == 1:
        raise ValueError("cannot puncture a 1 x 1 matrix")
    keep = [i for i in range(M.m) if i != k]
    upper = [M.entry_index(a, b) for ai, a in enumerate(keep)
             for b in keep[ai:]]
    return SymMatrix(M.field, M.m - 1, upper)


# ---------------------------------------------------------------------------
# JSON interchange: field is carried externally, entries are coordinate
# vectors over the field's immediate base


def matrix_to_json(M: SymMatrix) -> dict:
    return {"m": M.m, "upper": [M.field.digits(v) for v in M.upper]}


def matrix_from_json(field: Field, d: dict) -> SymMatrix:
    m = int(d["m"])
    upper = [field.from_coords([int(c) for c in coords]).index
             for coords in d["upper"]]
    return SymMatrix(field, m, upper)
