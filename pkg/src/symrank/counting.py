"""Closed-form counting for the symmetric rank metric, in exact arithmetic.

Everything here is a pure function of integer parameters: sphere and
ball sizes in the rank metric on symmetric m x m matrices over F_q,
power-of-q sandwich bounds for them, the Singleton-type dimension bound
with its maximum-size consequence, sphere-packing limits, covering
densities of maximum codes, and the perfect/quasi-perfect verdicts.

Counts are Python ints, ratios are fractions.Fraction; no floats ever
enter a computation.  q must be a prime power and 1 <= d <= m wherever
a distance appears.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from enum import Enum

__all__ = [
    "ExactCount",
    "ExactRatio",
    "BoundPair",
    "QuasiPerfectVerdict",
    "is_prime_power",
    "prime_power_decomposition",
    "sphere_size",
    "ball_size",
    "ball2_closed_form",
    "sphere_bounds",
    "ball_bounds",
    "singleton_max_dim",
    "singleton_max_size",
    "sphere_packing_max_size",
    "packing_radius",
    "density_upper_bound",
    "mrd_density_bounds",
    "quasi_perfect_verdict",
    "count_to_json",
    "ratio_to_json",
    "ratio_from_json",
]

ExactCount = int
ExactRatio = Fraction


def prime_power_decomposition(q: int) -> tuple[int, int]:
    """Return (p, e) with q = p^e, p prime, or raise ValueError."""
    if q < 2:
        raise ValueError(f"{q} is not a prime power")
    n = q
    p = None
    f = 2
    while f * f <= n:
        if n % f == 0:
            p = f
            break
        f += 1
    if p is None:
        return q, 1
    e = 0
    while n % p == 0:
        n //= p
        e += 1
    if n != 1:
        raise ValueError(f"{q} is not a prime power")
    return p, e


def is_prime_power(q: int) -> bool:
    try:
        prime_power_decomposition(q)
        return True
    except ValueError:
        return False


def _require_q(q: int) -> None:
    if not is_prime_power(q):
        raise ValueError(f"field order {q} is not a prime power")


def _require_qmd(q: int, m: int, d: int) -> None:
    _require_q(q)
    if m < 1:
        raise ValueError(f"matrix order {m} must be >= 1")
    if not 1 <= d <= m:
        raise ValueError(f"distance {d} out of range 1..{m}")


def _require_radius(q: int, m: int, t: int) -> None:
    _require_q(q)
    if m < 1:
        raise ValueError(f"matrix order {m} must be >= 1")
    if not 0 <= t <= m:
        raise ValueError(f"radius {t} out of range 0..{m}")


# ---------------------------------------------------------------------------
# spheres and balls


def sphere_size(q: int, m: int, t: int) -> ExactCount:
    """Number of symmetric m x m matrices over F_q of rank exactly t.

    The count factors as a product of q^{2s}/(q^{2s}-1) terms for
    s = 1..floor(t/2) and (q^{m-s}-1) terms for s = 0..t-1; the division
    is exact, which the implementation asserts by tracking an integer
    numerator and denominator.
    """
    _require_radius(q, m, t)
    num = 1
    den = 1
    for s in range(1, t // 2 + 1):
        num *= q ** (2 * s)
        den *= q ** (2 * s) - 1
    for s in range(t):
        num *= q ** (m - s) - 1
    count, rem = divmod(num, den)
    assert rem == 0, "sphere size is not an integer"
    return count


def ball_size(q: int, m: int, t: int) -> ExactCount:
    """Number of symmetric matrices of rank at most t."""
    _require_radius(q, m, t)
    return sum(sphere_size(q, m, i) for i in range(t + 1))


def ball2_closed_form(q: int, m: int) -> ExactCount:
    """Radius-2 ball size in closed form.

    Equals (q^{2m+1} - q^{m+1} - q^m + q^2) / (q^2 - 1); checked against
    the sphere sum by the tests.
    """
    _require_radius(q, m, 2)
    num = q ** (2 * m + 1) - q ** (m + 1) - q ** m + q ** 2
    count, rem = divmod(num, q ** 2 - 1)
    assert rem == 0, "closed form is not an integer"
    return count


# ---------------------------------------------------------------------------
# power-of-q sandwich bounds


@dataclass(frozen=True)
class BoundPair:
    """An exact lower/upper bracket; both endpoints are Fractions."""

    lower: ExactRatio
    upper: ExactRatio

    def __post_init__(self):
        if self.lower > self.upper:
            raise ValueError(f"empty bracket: {self.lower} > {self.upper}")

    def contains(self, value) -> bool:
        return self.lower <= value <= self.upper

    def contains_strict_lower(self, value) -> bool:
        return self.lower < value <= self.upper


def _qpow(q: int, exp: int) -> ExactRatio:
    return Fraction(q) ** exp


def sphere_bounds(q: int, m: int, i: int) -> BoundPair:
    """Power-of-q bracket for sphere_size(q, m, i).

    lower = q^{(m-1)i - i(i-1)/2}, upper = q^{mi - i(i-1)/2 + floor(i/2)}.
    The lower bound is strict for i >= 1 except at (q, m, i) = (2, 1, 1),
    where the sphere size equals it; at i = 0 both sides equal 1.
    """
    _require_radius(q, m, i)
    lower = _qpow(q, (m - 1) * i - i * (i - 1) // 2)
    upper = _qpow(q, m * i - i * (i - 1) // 2 + i // 2)
    return BoundPair(lower, upper)


def ball_bounds(q: int, m: int, i: int) -> BoundPair:
    """Power-of-q bracket for ball_size(q, m, i); both ends non-strict.

    lower as for the sphere, upper = q^{mi - i(i-1)/2 + floor(i/2) + 1}.
    """
    _require_radius(q, m, i)
    lower = _qpow(q, (m - 1) * i - i * (i - 1) // 2)
    upper = _qpow(q, m * i - i * (i - 1) // 2 + i // 2 + 1)
    return BoundPair(lower, upper)


# ---------------------------------------------------------------------------
# Singleton-type bound and packing limits


def singleton_max_dim(m: int, d: int) -> ExactCount:
    """Largest F_q-dimension of a symmetric code with min distance d.

    m(m-d+2)/2 when m - d is even, (m+1)(m-d+1)/2 when odd.  Codes
    attaining it are the maximum-size (MRD) codes.
    """
    if m < 1:
        raise ValueError(f"matrix order {m} must be >= 1")
    if not 1 <= d <= m:
        raise ValueError(f"distance {d} out of range 1..{m}")
    if (m - d) % 2 == 0:
        return m * (m - d + 2) // 2
    return (m + 1) * (m - d + 1) // 2


def singleton_max_size(q: int, m: int, d: int) -> ExactCount:
    """Cardinality q^singleton_max_dim(m, d) of a maximum-size code."""
    _require_qmd(q, m, d)
    return q ** singleton_max_dim(m, d)


def packing_radius(d: int) -> int:
    """floor((d - 1) / 2)."""
    if d < 1:
        raise ValueError(f"distance {d} must be >= 1")
    return (d - 1) // 2


def sphere_packing_max_size(q: int, m: int, d: int) -> ExactCount:
    """Sphere-packing ceiling: floor(q^{m(m+1)/2} / ball_size(q, m, t)).

    t is the packing radius of d.  Equality of M * ball with the full
    space characterizes perfect codes.
    """
    _require_qmd(q, m, d)
    t = packing_radius(d)
    return q ** (m * (m + 1) // 2) // ball_size(q, m, t)


# ---------------------------------------------------------------------------
# covering density of maximum codes


def density_upper_bound(q: int, m: int, d: int) -> ExactRatio:
    """Exact covering density of a maximum-size code of distance d for
    packing radius t <= 2; a power-of-q upper bound for t >= 3.

    For t in {1, 2} the value is q^{singleton_max_dim} * B_t / q^{m(m+1)/2}
    simplified per parity case; MRD codes attain it exactly, which the
    verification paths check.
    """
    _require_qmd(q, m, d)
    t = packing_radius(d)
    if t == 0:
        return Fraction(1)
    if t == 1:
        if d == 3:
            # odd m: exactly 1; even m: q^{-1}
            return Fraction(1) if m % 2 == 1 else Fraction(1, q)
        # d == 4
        if m % 2 == 0:
            return Fraction(1, q ** (m // 2))
        return Fraction(1, q ** ((m + 3) // 2))
    if t == 2:
        b2 = ball2_closed_form(q, m)
        if d == 5:
            exp = 2 * m if m % 2 == 1 else 2 * m + 2
        else:  # d == 6
            if m % 2 == 0:
                exp = 5 * m // 2
            else:
                exp = 5 * (m + 1) // 2
        return Fraction(b2, q ** exp)
    # t >= 3: power-of-q bound from the ball upper bound
    _, upper = mrd_density_bounds(q, m, d)
    return upper


def mrd_density_bounds(q: int, m: int, d: int) -> tuple[ExactRatio, ExactRatio]:
    """Power-of-q (lower, upper) bracket for the covering density of a
    maximum-size code of minimum distance d.

    The exponents split into four cases by the parity of m and of d;
    every reachable exponent is integral, which the implementation
    asserts.
    """
    _require_qmd(q, m, d)
    t = packing_radius(d)
    base = -t * (t - 1) // 2
    if d == 2 * t + 1:  # d odd
        if m % 2 == 0:
            up = base - t + t // 2 + 1
            lo = base - 2 * t
        else:
            up = base + t // 2 + 1
            lo = base - t
    else:  # d == 2t + 2, d even
        if m % 2 == 1:
            assert (m - 1) % 2 == 0 and (m + 1) % 2 == 0
            up = base - t + t // 2 - (m - 1) // 2
            lo = base - 2 * t - (m + 1) // 2
        else:
            up = base + t // 2 - m // 2 + 1
            lo = base - t - m // 2
    lower = _qpow(q, lo)
    upper = _qpow(q, up)
    if lower > upper:
        raise AssertionError("density bracket inverted")
    return lower, upper


class QuasiPerfectVerdict(str, Enum):
    """Existence verdict for quasi-perfect symmetric codes at distance d."""

    EXISTS_TRIVIAL = "EXISTS_TRIVIAL"
    EXISTS_ODD_ORDERS = "EXISTS_ODD_ORDERS"
    NONE = "NONE"


def quasi_perfect_verdict(d: int) -> QuasiPerfectVerdict:
    """Quasi-perfect families exist exactly at d = 1 (the full space is
    perfect, hence quasi-perfect) and d = 3 (odd m, where maximum codes
    are perfect).  For every other distance the density of maximum codes
    is bounded away from 1.
    """
    if d < 1:
        raise ValueError(f"distance {d} must be >= 1")
    if d == 1:
        return QuasiPerfectVerdict.EXISTS_TRIVIAL
    if d == 3:
        return QuasiPerfectVerdict.EXISTS_ODD_ORDERS
    return QuasiPerfectVerdict.NONE


# ---------------------------------------------------------------------------
# JSON interchange: counts as decimal strings, ratios as num/den strings


def count_to_json(n: ExactCount) -> str:
    return str(n)


def ratio_to_json(r: ExactRatio) -> dict:
    f = Fraction(r)
    return {"num": str(f.numerator), "den": str(f.denominator)}


def ratio_from_json(d: dict) -> ExactRatio:
    return Fraction(int(d["num"]), int(d["den"]))
