"""Linear codes of symmetric matrices under the rank distance.

A SymCode is an F_q-linear span of independent symmetric m x m basis
matrices.  Everything measurable about a code here is exact: minimum
distance by full codeword enumeration, packing and covering
certificates by scanning the ambient space, covering density as a
Fraction.  Every enumeration is budget-guarded and refuses eagerly.

The packing radius used by certificates defaults to the design
distance when the code carries one (a certificate against the measured
distance alone is vacuous), else to the measured distance; an explicit
radius always wins.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from typing import Iterator, Optional, Sequence

from symrank.errors import BudgetExceeded, ConstructionError
from symrank.gf import Field, FieldElement, field_from_json, field_to_json
from symrank.matspace import (DEFAULT_AMBIENT_BUDGET, SymMatrix, enumerate_sym,
                              matrix_from_json, matrix_to_json, sym_dim)
from symrank.counting import ball_size, packing_radius, singleton_max_dim

__all__ = [
    "DEFAULT_CODEWORD_BUDGET",
    "SymCode",
    "CoveringStats",
    "BoundCheck",
    "VerificationReport",
    "ALL_CHECKS",
    "codewords",
    "min_distance",
    "is_mrd",
    "is_perfect",
    "covering_density",
    "verify_packing",
    "covering_stats",
    "verify_covering",
    "verify_report",
    "random_subcode",
    "code_to_json",
    "code_from_json",
]

DEFAULT_CODEWORD_BUDGET = 2 ** 20


def _independent(field: Field, mats: Sequence[SymMatrix]) -> bool:
    """Whether the matrices are F_q-linearly independent."""
    from symrank.matspace import _rank_rows

    rows = [list(M.upper) for M in mats]
    return _rank_rows(field, rows) == len(mats)


class SymCode:
    """An F_q-linear code of symmetric matrices, given by a basis.

    The basis matrices must live in one space and be linearly
    independent; both are validated on construction.  d_design records
    the construction's intended minimum distance, when there is one.
    """

    __slots__ = ("field", "m", "basis", "d_design")

    def __init__(self, field: Field, m: int, basis: Sequence[SymMatrix],
                 d_design: Optional[int] = None):
        basis = tuple(basis)
        if not basis:
            raise ValueError("a code needs at least one basis matrix")
        for M in basis:
            if not isinstance(M, SymMatrix):
                raise ValueError("basis entries must be symmetric matrices")
            if M.field != field or M.m != m:
                raise ValueError("basis matrix from the wrong space")
        if not _independent(field, basis):
            raise ValueError("basis matrices are linearly dependent")
        if d_design is not None and not 1 <= d_design <= m:
            raise ValueError(f"design distance {d_design} out of range 1..{m}")
        self.field = field
        self.m = m
        self.basis = basis
        self.d_design = d_design

    @property
    def k(self) -> int:
        """Dimension over F_q."""
        return len(self.basis)

    @property
    def cardinality(self) -> int:
        return self.field.cardinality ** self.k

    def __repr__(self) -> str:
        return (f"SymCode(q={self.field.cardinality}, m={self.m}, "
                f"k={self.k}, d_design={self.d_design})")


# ---------------------------------------------------------------------------
# enumeration and exact measurement


def codewords(C: SymCode,
              budget: int = DEFAULT_CODEWORD_BUDGET) -> Iterator[SymMatrix]:
    """All q^k codewords, coefficient-lexicographic, zero first."""
    if C.cardinality > budget:
        raise BudgetExceeded(f"codewords of {C!r}", C.cardinality, budget)
    return _iter_codewords(C)


def _iter_codewords(C: SymCode) -> Iterator[SymMatrix]:
    q = C.field.cardinality
    scaled = [[B.scale(c) for c in range(q)] for B in C.basis]
    k = C.k

    def rec(i: int, acc: SymMatrix) -> Iterator[SymMatrix]:
        if i == k:
            yield acc
            return
        for c in range(q):
            yield from rec(i + 1, acc + scaled[i][c])

    return rec(0, SymMatrix.zero(C.field, C.m))


def min_distance(C: SymCode, budget: int = DEFAULT_CODEWORD_BUDGET) -> int:
    """Exact minimum rank over the nonzero codewords."""
    best = C.m + 1
    it = codewords(C, budget)
    next(it)  # zero comes first
    for W in it:
        r = W.rank()
        if r < best:
            best = r
            if best == 1:
                break
    assert best <= C.m, "nonzero codeword scan came up empty"
    return best


def is_mrd(C: SymCode, budget: int = DEFAULT_CODEWORD_BUDGET) -> bool:
    """Whether dim C attains the Singleton-type maximum for its measured
    minimum distance."""
    d = min_distance(C, budget)
    return C.k == singleton_max_dim(C.m, d)


def is_perfect(C: SymCode, budget: int = DEFAULT_CODEWORD_BUDGET) -> bool:
    """Exact sphere-packing equality M * B_t = q^{m(m+1)/2} at the
    packing radius of the measured distance."""
    q = C.field.cardinality
    t = packing_radius(min_distance(C, budget))
    return C.cardinality * ball_size(q, C.m, t) == q ** sym_dim(C.m)


def covering_density(C: SymCode, t: Optional[int] = None,
                     budget: int = DEFAULT_CODEWORD_BUDGET) -> Fraction:
    """M * B_t / q^{m(m+1)/2} as an exact Fraction.

    t defaults to the packing radius of the design distance when set,
    else of the measured distance.
    """
    q = C.field.cardinality
    if t is None:
        d = C.d_design if C.d_design is not None else min_distance(C, budget)
        t = packing_radius(d)
    if not 0 <= t <= C.m:
        raise ValueError(f"radius {t} out of range 0..{C.m}")
    return Fraction(C.cardinality * ball_size(q, C.m, t), q ** sym_dim(C.m))


# ---------------------------------------------------------------------------
# certificates


def _radius(C: SymCode, t: Optional[int],
            budget: int) -> int:
    if t is not None:
        if not 0 <= t <= C.m:
            raise ValueError(f"radius {t} out of range 0..{C.m}")
        return t
    d = C.d_design if C.d_design is not None else min_distance(C, budget)
    return packing_radius(d)


def verify_packing(C: SymCode, t: Optional[int] = None,
                   budget: int = DEFAULT_CODEWORD_BUDGET) -> bool:
    """Certify that balls of radius t around codewords are disjoint.

    By linearity that is: every nonzero codeword has rank >= 2t + 1.
    """
    t = _radius(C, t, budget)
    if t == 0:
        return True
    threshold = 2 * t + 1
    it = codewords(C, budget)
    next(it)
    return all(W.rank() >= threshold for W in it)


@dataclass(frozen=True)
class CoveringStats:
    """Exact multiplicity profile of radius-t balls over the ambient space.

    multiplicity of an ambient point = number of codewords within
    distance t.  Multiplicities are tracked exactly up to 255 and
    saturate there; the covered / exactly-once verdicts only need
    0 / 1 / >= 2.
    """

    t: int
    covered: bool
    min_multiplicity: int
    max_multiplicity: int

    @property
    def exactly_once(self) -> bool:
        return self.min_multiplicity == 1 and self.max_multiplicity == 1


def covering_stats(C: SymCode, t: Optional[int] = None,
                   ambient_budget: int = DEFAULT_AMBIENT_BUDGET,
                   codeword_budget: int = DEFAULT_CODEWORD_BUDGET) -> CoveringStats:
    """Scan the ambient space and tally, for every point, how many
    codewords lie within distance t.

    Work is proportional to M * B_t + q^{m(m+1)/2} and is refused when
    either factor breaks its budget.
    """
    fld = C.field
    q = fld.cardinality
    n = sym_dim(C.m)
    total = q ** n
    if total > ambient_budget:
        raise BudgetExceeded(f"ambient Sym(F{q}, {C.m})", total, ambient_budget)
    t = _radius(C, t, codeword_budget)
    pairs = C.cardinality * ball_size(q, C.m, t)
    if pairs > ambient_budget:
        raise BudgetExceeded("covering scan (codewords x ball)", pairs,
                             ambient_budget)

    # every ambient point within distance t of a codeword is codeword +
    # (matrix of rank <= t); collect the ball once, then shift it over
    # the code and tally multiplicities per packed ambient index
    ball = [M.upper for M in enumerate_sym(fld, C.m, ambient_budget)
            if M.rank() <= t]
    add = fld.add_i
    tally = bytearray(total)
    for W in codewords(C, codeword_budget):
        wu = W.upper
        for bu in ball:
            idx = 0
            for pos in range(n - 1, -1, -1):
                idx = idx * q + add(wu[pos], bu[pos])
            cur = tally[idx]
            if cur < 255:
                tally[idx] = cur + 1
    lo = min(tally)
    hi = max(tally)
    return CoveringStats(t=t, covered=lo >= 1, min_multiplicity=lo,
                         max_multiplicity=hi)


def verify_covering(C: SymCode, t: Optional[int] = None,
                    ambient_budget: int = DEFAULT_AMBIENT_BUDGET,
                    codeword_budget: int = DEFAULT_CODEWORD_BUDGET) -> bool:
    """Certify that radius-t balls around codewords cover the space."""
    return covering_stats(C, t, ambient_budget, codeword_budget).covered


# ---------------------------------------------------------------------------
# aggregate report


ALL_CHECKS = ("mrd", "perfect", "density", "bounds", "packing", "covering")


@dataclass(frozen=True)
class BoundCheck:
    """One evaluated bound: slack is (bound - value) oriented so that
    satisfied means slack >= 0; stored as an exact string."""

    name: str
    satisfied: bool
    slack: str


@dataclass
class VerificationReport:
    q: int
    m: int
    dimension: int
    d_design: Optional[int]
    min_distance: Optional[int] = None
    is_mrd: Optional[bool] = None
    is_perfect: Optional[bool] = None
    packing_ok: Optional[bool] = None
    covering_ok: Optional[bool] = None
    covering_radius: Optional[int] = None
    density: Optional[Fraction] = None
    bound_checks: list = dc_field(default_factory=list)
    refusals: list = dc_field(default_factory=list)

    @property
    def all_passed(self) -> bool:
        """No violated bound and no failed packing certificate.

        A False is_perfect / is_mrd is a measurement, not a failure,
        and so is a False covering certificate on a non-perfect code
        (its balls cannot cover).  A failed packing certificate means
        the design distance lies about the code.  A code that measures
        perfect but fails to cover at the packing radius of its
        measured distance is internally contradictory and fails too.
        """
        if any(not c.satisfied for c in self.bound_checks):
            return False
        if self.packing_ok is False:
            return False
        if (self.covering_ok is False and self.is_perfect is True
                and self.min_distance is not None
                and self.covering_radius == packing_radius(self.min_distance)):
            return False
        return True


def _slack(x) -> str:
    f = Fraction(x)
    if f.denominator == 1:
        return str(f.numerator)
    return f"{f.numerator}/{f.denominator}"


def verify_report(C: SymCode, checks: Optional[Sequence[str]] = None,
                  radius: Optional[int] = None,
                  ambient_budget: int = DEFAULT_AMBIENT_BUDGET,
                  codeword_budget: int = DEFAULT_CODEWORD_BUDGET) -> VerificationReport:
    """Measure a code and evaluate every applicable exact bound.

    checks selects a subset of ALL_CHECKS; budget refusals of individual
    checks are recorded in the report, not raised.  radius overrides the
    packing radius used by the density, packing and covering checks.
    """
    if checks is None:
        selected = set(ALL_CHECKS)
    else:
        selected = set(checks)
        unknown = selected.difference(ALL_CHECKS)
        if unknown:
            raise ValueError(f"unknown checks: {sorted(unknown)}; "
                             f"expected from {list(ALL_CHECKS)}")
    q = C.field.cardinality
    m = C.m
    report = VerificationReport(q=q, m=m, dimension=C.k, d_design=C.d_design)

    d = None
    try:
        d = min_distance(C, codeword_budget)
        report.min_distance = d
    except BudgetExceeded:
        report.refusals.append("min_distance")

    if "mrd" in selected:
        if d is None:
            report.refusals.append("mrd")
        else:
            report.is_mrd = C.k == singleton_max_dim(m, d)

    if "perfect" in selected:
        if d is None:
            report.refusals.append("perfect")
        else:
            t = packing_radius(d)
            report.is_perfect = (C.cardinality * ball_size(q, m, t)
                                 == q ** sym_dim(m))

    if "density" in selected:
        try:
            report.density = covering_density(C, t=radius, budget=codeword_budget)
        except BudgetExceeded:
            report.refusals.append("density")

    if "bounds" in selected:
        if d is None:
            report.refusals.append("bounds")
        else:
            report.bound_checks.extend(_bound_checks(C, d))

    if "packing" in selected:
        try:
            report.packing_ok = verify_packing(C, t=radius, budget=codeword_budget)
        except BudgetExceeded:
            report.refusals.append("packing")

    if "covering" in selected:
        try:
            stats = covering_stats(C, t=radius, ambient_budget=ambient_budget,
                                   codeword_budget=codeword_budget)
            report.covering_ok = stats.covered
            report.covering_radius = stats.t
        except BudgetExceeded:
            report.refusals.append("covering")

    return report


def _bound_checks(C: SymCode, d: int) -> list[BoundCheck]:
    from symrank.counting import (ball_bounds, density_upper_bound,
                                  mrd_density_bounds, sphere_bounds,
                                  sphere_size)

    q = C.field.cardinality
    m = C.m
    out = []

    max_dim = singleton_max_dim(m, d)
    out.append(BoundCheck("singleton", C.k <= max_dim, _slack(max_dim - C.k)))

    t = packing_radius(d)
    bt = ball_size(q, m, t)
    space = q ** sym_dim(m)
    out.append(BoundCheck("sphere_packing", C.cardinality * bt <= space,
                          _slack(space - C.cardinality * bt)))

    sb = sphere_bounds(q, m, t)
    st = sphere_size(q, m, t)
    out.append(BoundCheck("sphere_lower", sb.lower <= st, _slack(st - sb.lower)))
    out.append(BoundCheck("sphere_upper", st <= sb.upper, _slack(sb.upper - st)))
    bb = ball_bounds(q, m, t)
    out.append(BoundCheck("ball_lower", bb.lower <= bt, _slack(bt - bb.lower)))
    out.append(BoundCheck("ball_upper", bt <= bb.upper, _slack(bb.upper - bt)))

    dens = Fraction(C.cardinality * bt, space)
    if C.k == max_dim:
        lo, up = mrd_density_bounds(q, m, d)
        out.append(BoundCheck("mrd_density_lower", lo <= dens, _slack(dens - lo)))
        out.append(BoundCheck("mrd_density_upper", dens <= up, _slack(up - dens)))
        if t in (1, 2):
            exact = density_upper_bound(q, m, d)
            out.append(BoundCheck("mrd_density_exact", dens == exact,
                                  _slack(exact - dens)))
    return out


# ---------------------------------------------------------------------------
# sampling


def random_subcode(field: Field, m: int, k: int, rng) -> SymCode:
    """A uniformly sampled k-dimensional code: keep drawing uniform
    symmetric matrices, discarding those dependent on the picks so far."""
    if not 1 <= k <= sym_dim(m):
        raise ValueError(f"dimension {k} out of range 1..{sym_dim(m)}")
    n = sym_dim(m)
    q = field.cardinality
    picked: list[SymMatrix] = []
    attempts = 0
    while len(picked) < k:
        attempts += 1
        if attempts > 1000 * k:
            raise AssertionError("independent sample did not converge")
        M = SymMatrix(field, m, tuple(rng.randrange(q) for _ in range(n)))
        if _independent(field, picked + [M]):
            picked.append(M)
    return SymCode(field, m, picked)


# ---------------------------------------------------------------------------
# JSON interchange


def code_to_json(C: SymCode) -> dict:
    return {
        "field": field_to_json(C.field),
        "m": C.m,
        "d_design": C.d_design,
        "basis": [matrix_to_json(B) for B in C.basis],
    }


def code_from_json(d: dict) -> SymCode:
    fld = field_from_json(d["field"])
    m = int(d["m"])
    basis = [matrix_from_json(fld, b) for b in d["basis"]]
    dd = d.get("d_design")
    return SymCode(fld, m, basis, None if dd is None else int(dd))
