"""Symmetric linearized polynomials and the maximum-code constructions.

A q-polynomial over F_{q^m} is f(x) = sum c_i x^{q^i}, i = 0..m-1; it
is an F_q-linear map of F_{q^m} to itself.  The symmetric ones are
those whose Gram matrix G[i][j] = Tr(e_i * f(e_j)) over any F_q-basis
is symmetric, which happens exactly when c_{m-i} = c_i^{q^{m-i}} for
i = 1..m-1 (index arithmetic mod m).  Because the trace form is
nondegenerate, f -> G is an F_q-linear bijection onto the symmetric
matrices, and rank(G) = rank of f as a linear map.

The direct maximum-code construction spans, over b in F_{q^m},

    b x                                   (the j = 0 slot)
    b x^{q^j} + (b x)^{q^{m-j}}           (slots j = 1..(m-d)/2)

for m - d even, giving dimension m(m-d+2)/2 with minimum distance d.
For m - d odd the code of order m+1 and distance d + 2 is built and
every basis matrix punctured at the last index; rank drops at most 2,
so the result has distance >= d, the Singleton bound at distance d+1
caps the dimension below the punctured dimension (m+1)(m-d+1)/2, so
the distance is exactly d and the punctured code is again maximum.
"""

from __future__ import annotations

from typing import Iterator, Optional, Sequence

from symrank.errors import ConstructionError
from symrank.gf import (Field, FieldElement, build_base_field, build_extension,
                        frobenius, trace)
from symrank.matspace import SymMatrix, puncture_matrix
from symrank.codes import SymCode
from symrank.counting import singleton_max_dim

__all__ = [
    "QPoly",
    "polynomial_basis",
    "is_symmetric_qpoly",
    "qpoly_rank",
    "gram",
    "enumerate_symmetric_qpolys",
    "random_symmetric_qpoly",
    "symmetric_qpoly_count",
    "build_schmidt_code",
    "build_punctured_code",
]


class QPoly:
    """A q-polynomial sum c_i x^{q^i} over an extension F_{q^m}."""

    __slots__ = ("ext", "coeffs")

    def __init__(self, ext: Field, coeffs: Sequence[FieldElement]):
        if ext.base is None:
            raise ValueError("q-polynomials live over a constructed extension")
        if len(coeffs) != ext.degree:
            raise ValueError(f"expected {ext.degree} coefficients, "
                             f"got {len(coeffs)}")
        for c in coeffs:
            if not isinstance(c, FieldElement) or c.field != ext:
                raise ValueError("coefficient from the wrong field")
        self.ext = ext
        self.coeffs = tuple(coeffs)

    @classmethod
    def from_indices(cls, ext: Field, indices: Sequence[int]) -> "QPoly":
        return cls(ext, [ext.element(i) for i in indices])

    def __call__(self, x: FieldElement) -> FieldElement:
        if not isinstance(x, FieldElement) or x.field != self.ext:
            raise ValueError("argument from the wrong field")
        fld = self.ext
        q = fld.base_cardinality
        acc = 0
        xi = x.index
        for i, c in enumerate(self.coeffs):
            if c.index:
                acc = fld.add_i(acc, fld.mul_i(c.index, fld.pow_i(xi, q ** i)))
        return FieldElement(fld, acc)

    @property
    def is_zero(self) -> bool:
        return all(c.index == 0 for c in self.coeffs)

    def __add__(self, other: "QPoly") -> "QPoly":
        if not isinstance(other, QPoly) or other.ext != self.ext:
            raise ValueError("polynomials over different fields")
        return QPoly(self.ext, [a + b for a, b in zip(self.coeffs, other.coeffs)])

    def scale(self, c: FieldElement) -> "QPoly":
        return QPoly(self.ext, [c * a for a in self.coeffs])

    def __eq__(self, other) -> bool:
        return (isinstance(other, QPoly) and other.ext == self.ext
                and other.coeffs == self.coeffs)

    def __hash__(self) -> int:
        return hash((self.ext, self.coeffs))

    def __repr__(self) -> str:
        return f"QPoly({self.ext!r}, {[c.index for c in self.coeffs]})"


def polynomial_basis(ext: Field) -> list[FieldElement]:
    """1, a, a^2, ..., a^{m-1} for the polynomial generator a."""
    one = ext.one
    if ext.degree == 1:
        return [one]
    a = ext.gen()
    out = [one]
    for _ in range(ext.degree - 1):
        out.append(out[-1] * a)
    return out


def is_symmetric_qpoly(f: QPoly) -> bool:
    """Check c_{m-i} = c_i^{q^{m-i}} for i = 1..m-1, plus nothing for
    i = 0 (the x term is always symmetric)."""
    m = f.ext.degree
    for i in range(1, m):
        j = m - i
        if f.coeffs[j] != frobenius(f.coeffs[i], j):
            return False
    return True


def qpoly_rank(f: QPoly) -> int:
    """Rank of f as an F_q-linear map, from its matrix over the
    polynomial basis."""
    from symrank.matspace import _rank_rows

    ext = f.ext
    basis = polynomial_basis(ext)
    # column j = coordinates of f(e_j); rank of the coordinate matrix
    rows = [list(f(e).coords) for e in basis]
    return _rank_rows(ext.base, rows)


def _independent_over_base(ext: Field, elems: Sequence[FieldElement]) -> bool:
    from symrank.matspace import _rank_rows

    rows = [list(e.coords) for e in elems]
    return _rank_rows(ext.base, rows) == len(elems)


def gram(f: QPoly, basis: Optional[Sequence[FieldElement]] = None) -> SymMatrix:
    """Symmetric matrix G[i][j] = Tr(e_i * f(e_j)) of a symmetric
    q-polynomial over an F_q-basis (default: the polynomial basis).

    Raises ValueError when f is not symmetric or the basis is not an
    F_q-basis of the extension.
    """
    ext = f.ext
    m = ext.degree
    if basis is None:
        basis = polynomial_basis(ext)
    basis = list(basis)
    if len(basis) != m:
        raise ValueError(f"basis needs {m} elements, got {len(basis)}")
    for e in basis:
        if not isinstance(e, FieldElement) or e.field != ext:
            raise ValueError("basis element from the wrong field")
    if not _independent_over_base(ext, basis):
        raise ValueError("basis elements are linearly dependent")
    if not is_symmetric_qpoly(f):
        raise ValueError("polynomial violates the symmetry condition")
    images = [f(e) for e in basis]
    entries = [[trace(basis[i] * images[j]).index for j in range(m)]
               for i in range(m)]
    for i in range(m):
        for j in range(i + 1, m):
            assert entries[i][j] == entries[j][i], "gram lost symmetry"
    upper = [entries[i][j] for i in range(m) for j in range(i, m)]
    return SymMatrix(ext.base, m, upper)


# ---------------------------------------------------------------------------
# the symmetric space as polynomials


def _free_slots(m: int) -> list[int]:
    """Coefficient indices that may be chosen freely; the rest follow."""
    return list(range(0, (m - 1) // 2 + 1))


def _fixed_subfield_indices(ext: Field) -> list[int]:
    """Indices of elements fixed by x -> x^{q^{m/2}} (even m only)."""
    m = ext.degree
    half = m // 2
    return [i for i in range(ext.cardinality)
            if frobenius(ext.element(i), half) == ext.element(i)]


def _complete(ext: Field, free: dict[int, FieldElement]) -> QPoly:
    m = ext.degree
    coeffs = [ext.zero] * m
    for i, c in free.items():
        coeffs[i] = c
    for i in range(1, (m - 1) // 2 + 1):
        coeffs[m - i] = frobenius(free[i], m - i)
    return QPoly(ext, coeffs)


def symmetric_qpoly_count(q: int, m: int) -> int:
    """q^{m(m+1)/2}, the number of symmetric q-polynomials; equals the
    size of the symmetric matrix space."""
    return q ** (m * (m + 1) // 2)


def enumerate_symmetric_qpolys(ext: Field) -> Iterator[QPoly]:
    """All symmetric q-polynomials, deterministic order."""
    import itertools

    m = ext.degree
    slots = _free_slots(ext.degree)
    pools = [range(ext.cardinality) for _ in slots]
    middle = _fixed_subfield_indices(ext) if m % 2 == 0 else None
    if middle is not None:
        pools.append(middle)
    for combo in itertools.product(*pools):
        free = {s: ext.element(combo[pos]) for pos, s in enumerate(slots)}
        f = _complete(ext, free)
        if middle is not None:
            coeffs = list(f.coeffs)
            coeffs[m // 2] = ext.element(combo[-1])
            f = QPoly(ext, coeffs)
        yield f


def random_symmetric_qpoly(ext: Field, rng) -> QPoly:
    """Uniform symmetric q-polynomial."""
    m = ext.degree
    free = {s: ext.element(rng.randrange(ext.cardinality))
            for s in _free_slots(m)}
    f = _complete(ext, free)
    if m % 2 == 0:
        middle = _fixed_subfield_indices(ext)
        coeffs = list(f.coeffs)
        coeffs[m // 2] = ext.element(rng.choice(middle))
        f = QPoly(ext, coeffs)
    return f


# ---------------------------------------------------------------------------
# constructions


def _schmidt_basis_polys(ext: Field, d: int) -> list[QPoly]:
    """Basis q-polynomials of the direct construction, one per
    (slot, base-coordinate) pair: b runs over a basis of F_{q^m}."""
    m = ext.degree
    half = (m - d) // 2
    bbasis = polynomial_basis(ext)
    out = []
    for b in bbasis:
        coeffs = [ext.zero] * m
        coeffs[0] = b
        out.append(QPoly(ext, coeffs))
    for j in range(1, half + 1):
        for b in bbasis:
            coeffs = [ext.zero] * m
            coeffs[j] = b
            coeffs[m - j] = frobenius(b, m - j)
            out.append(QPoly(ext, coeffs))
    return out


def build_schmidt_code(q: int, m: int, d: int) -> SymCode:
    """Maximum symmetric code of order m and minimum distance d for
    m - d even, dimension m(m-d+2)/2."""
    if m < 1:
        raise ValueError(f"matrix order {m} must be >= 1")
    if not 1 <= d <= m:
        raise ValueError(f"distance {d} out of range 1..{m}")
    if (m - d) % 2 != 0:
        raise ValueError(f"direct construction needs m - d even "
                         f"(got m={m}, d={d}); use the punctured builder")
    base = build_base_field(*_pe(q))
    ext = build_extension(base, m)
    polys = _schmidt_basis_polys(ext, d)
    mats = [gram(f) for f in polys]
    expect = singleton_max_dim(m, d)
    if len(mats) != expect:
        raise ConstructionError(f"basis size {len(mats)} != expected {expect}")
    try:
        return SymCode(base, m, mats, d_design=d)
    except ValueError as e:
        raise ConstructionError(f"direct construction degenerated: {e}") from e


def build_punctured_code(q: int, m: int, d: int) -> SymCode:
    """Maximum symmetric code of order m and minimum distance d for
    m - d odd, dimension (m+1)(m-d+1)/2, by puncturing the order-(m+1)
    distance-(d+2) code at its last index."""
    if m < 1:
        raise ValueError(f"matrix order {m} must be >= 1")
    if not 1 <= d <= m:
        raise ValueError(f"distance {d} out of range 1..{m}")
    if (m - d) % 2 != 1:
        raise ValueError(f"punctured construction needs m - d odd "
                         f"(got m={m}, d={d}); use the direct builder")
    parent = build_schmidt_code(q, m + 1, d + 2)
    mats = [puncture_matrix(B, m) for B in parent.basis]
    expect = singleton_max_dim(m, d)
    if len(mats) != expect:
        raise ConstructionError(f"basis size {len(mats)} != expected {expect}")
    try:
        return SymCode(parent.field, m, mats, d_design=d)
    except ValueError as e:
        raise ConstructionError(f"puncturing degenerated: {e}") from e


def _pe(q: int) -> tuple[int, int]:
    from symrank.counting import prime_power_decomposition

    return prime_power_decomposition(q)
