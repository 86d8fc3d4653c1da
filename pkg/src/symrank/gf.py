"""Finite fields and their extensions, with exact index-coded arithmetic.

Fields form a tower: the prime field F_p at the bottom, optionally a
quotient F_q = F_p[x]/(f) of degree e above it, and optionally an
extension F_{q^m} = F_q[y]/(g) on top of that.  An element is stored as
a single integer index; the index encodes the coordinate vector over
the immediate base field in little-endian digit order, so index 0 is
zero and index 1 is one in every field.  Enumeration order is index
order.

Moduli default to the first monic irreducible polynomial in ascending
lexicographic order over the non-leading coefficient tuple, so a field
built twice from the same parameters is the same object.
"""

from __future__ import annotations

from typing import Iterator, Optional, Sequence, Union

__all__ = [
    "Field",
    "FieldElement",
    "build_base_field",
    "build_extension",
    "frobenius",
    "trace",
    "enumerate_field",
    "field_to_json",
    "field_from_json",
]

_FIELD_CACHE: dict = {}
_TOKEN = object()


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def _prime_factors(n: int) -> list[int]:
    out = []
    f = 2
    while f * f <= n:
        if n % f == 0:
            out.append(f)
            while n % f == 0:
                n //= f
        f += 1
    if n > 1:
        out.append(n)
    return out


# ---------------------------------------------------------------------------
# polynomial helpers over a Field; coefficients are element indices,
# little-endian, with trailing zeros trimmed


def _ptrim(c: list[int]) -> list[int]:
    while c and c[-1] == 0:
        c.pop()
    return c


def _padd(B: "Field", a: Sequence[int], b: Sequence[int]) -> list[int]:
    n = max(len(a), len(b))
    out = []
    for i in range(n):
        x = a[i] if i < len(a) else 0
        y = b[i] if i < len(b) else 0
        out.append(B.add_i(x, y))
    return _ptrim(out)


def _psub(B: "Field", a: Sequence[int], b: Sequence[int]) -> list[int]:
    n = max(len(a), len(b))
    out = []
    for i in range(n):
        x = a[i] if i < len(a) else 0
        y = b[i] if i < len(b) else 0
        out.append(B.sub_i(x, y))
    return _ptrim(out)


def _pmul(B: "Field", a: Sequence[int], b: Sequence[int]) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x == 0:
            continue
        for j, y in enumerate(b):
            if y:
                out[i + j] = B.add_i(out[i + j], B.mul_i(x, y))
    return _ptrim(out)


def _pmod(B: "Field", a: Sequence[int], mod: Sequence[int]) -> list[int]:
    r = _ptrim(list(a))
    dm = len(mod) - 1
    inv_lead = B.inv_i(mod[-1])
    while len(r) - 1 >= dm and r:
        factor = B.mul_i(r[-1], inv_lead)
        shift = len(r) - 1 - dm
        for j in range(dm + 1):
            if mod[j]:
                r[shift + j] = B.sub_i(r[shift + j], B.mul_i(factor, mod[j]))
        _ptrim(r)
    return r


def _pgcd(B: "Field", a: Sequence[int], b: Sequence[int]) -> list[int]:
    x, y = _ptrim(list(a)), _ptrim(list(b))
    while y:
        x, y = y, _pmod(B, x, y)
    if x:
        inv = B.inv_i(x[-1])
        x = [B.mul_i(inv, c) for c in x]
    return x


def _ppowmod(B: "Field", a: Sequence[int], e: int, mod: Sequence[int]) -> list[int]:
    result = [1]
    base = _pmod(B, a, mod)
    while e:
        if e & 1:
            result = _pmod(B, _pmul(B, result, base), mod)
        base = _pmod(B, _pmul(B, base, base), mod)
        e >>= 1
    return result


def _peval(B: "Field", poly: Sequence[int], x: int) -> int:
    acc = 0
    for c in reversed(poly):
        acc = B.add_i(B.mul_i(acc, x), c)
    return acc


def _is_irreducible(B: "Field", poly: Sequence[int]) -> bool:
    """Monic polynomial of degree >= 1 over B, given as index coefficients."""
    n = len(poly) - 1
    if n == 1:
        return True
    for a in range(B.cardinality):
        if _peval(B, poly, a) == 0:
            return False
    if n <= 3:
        # degree 2 and 3 reducible iff they have a root
        return True
    Q = B.cardinality
    x = [0, 1]
    powers = {}
    h = list(x)
    for i in range(1, n + 1):
        h = _ppowmod(B, h, Q, poly)
        powers[i] = h
    if _ptrim(list(powers[n])) != x:
        return False
    for r in _prime_factors(n):
        g = _psub(B, powers[n // r], x)
        if len(_pgcd(B, poly, g)) - 1 != 0:
            return False
    return True


def _default_modulus(B: "Field", degree: int) -> tuple[int, ...]:
    """First monic irreducible of the given degree, lowest-lex coefficients."""
    key = ("defmod", B._key, degree)
    hit = _FIELD_CACHE.get(key)
    if hit is not None:
        return hit
    import itertools

    for tail in itertools.product(range(B.cardinality), repeat=degree):
        cand = tuple(tail) + (1,)
        if _is_irreducible(B, cand):
            _FIELD_CACHE[key] = cand
            return cand
    raise AssertionError("no irreducible polynomial found")  # unreachable


class Field:
    """A finite field: the prime field F_p, or a quotient base[x]/(modulus).

    Do not call directly; use build_base_field / build_extension, which
    validate input and intern fields so equal parameters give the same
    object.
    """

    __slots__ = ("p", "base", "degree", "modulus", "base_cardinality",
                 "cardinality", "_key")

    def __init__(self, p: int, base: Optional["Field"], degree: int,
                 modulus: Optional[tuple[int, ...]], token=None):
        if token is not _TOKEN:
            raise TypeError("use build_base_field or build_extension")
        self.p = p
        self.base = base
        self.degree = degree
        self.modulus = modulus
        self.base_cardinality = p if base is None else base.cardinality
        self.cardinality = self.base_cardinality ** degree
        if base is None:
            self._key = ("p", p)
        else:
            self._key = ("q", base._key, modulus)
        # spot-check the multiplicative group: a sampled nonzero element
        # raised to cardinality - 1 must be 1
        sample = self.base_cardinality if degree > 1 else min(2, p - 1) or 1
        assert self.pow_i(sample, self.cardinality - 1) == 1

    # --- arithmetic on element indices -----------------------------------

    def add_i(self, a: int, b: int) -> int:
        if self.p == 2:
            return a ^ b
        if self.base is None:
            return (a + b) % self.p
        base = self.base
        B = self.base_cardinality
        out = 0
        place = 1
        while a or b:
            out += base.add_i(a % B, b % B) * place
            a //= B
            b //= B
            place *= B
        return out

    def neg_i(self, a: int) -> int:
        if self.p == 2:
            return a
        if self.base is None:
            return (-a) % self.p
        base = self.base
        B = self.base_cardinality
        out = 0
        place = 1
        while a:
            out += base.neg_i(a % B) * place
            a //= B
            place *= B
        return out

    def sub_i(self, a: int, b: int) -> int:
        if self.p == 2:
            return a ^ b
        if self.base is None:
            return (a - b) % self.p
        return self.add_i(a, self.neg_i(b))

    def mul_i(self, a: int, b: int) -> int:
        if self.base is None:
            return (a * b) % self.p
        if a == 0 or b == 0:
            return 0
        if a == 1:
            return b
        if b == 1:
            return a
        prod = _pmul(self.base, self.digits(a), self.digits(b))
        return self.undigits(_pmod(self.base, prod, self.modulus))

    def inv_i(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        if self.base is None:
            return pow(a, self.p - 2, self.p)
        return self.pow_i(a, self.cardinality - 2)

    def pow_i(self, a: int, n: int) -> int:
        if n < 0:
            return self.pow_i(self.inv_i(a), -n)
        if self.base is None:
            return pow(a, n, self.p) if a or n == 0 else 0
        result = 1
        base = a
        while n:
            if n & 1:
                result = self.mul_i(result, base)
            base = self.mul_i(base, base)
            n >>= 1
        return result

    # --- digit packing ----------------------------------------------------

    def digits(self, a: int) -> list[int]:
        """Coordinates over the immediate base field, little-endian."""
        B = self.base_cardinality
        out = []
        for _ in range(self.degree):
            out.append(a % B)
            a //= B
        return out

    def undigits(self, ds: Sequence[int]) -> int:
        B = self.base_cardinality
        out = 0
        for d in reversed(ds):
            out = out * B + d
        return out

    # --- elements ----------------------------------------------------------

    def element(self, index: int) -> "FieldElement":
        if not 0 <= index < self.cardinality:
            raise ValueError(f"index {index} out of range for field of order "
                             f"{self.cardinality}")
        return FieldElement(self, index)

    def from_coords(self, coords: Sequence[Union[int, "FieldElement"]]) -> "FieldElement":
        if len(coords) != self.degree:
            raise ValueError(f"expected {self.degree} coordinates, got {len(coords)}")
        ds = []
        for c in coords:
            if isinstance(c, FieldElement):
                if self.base is not None and c.field != self.base:
                    raise ValueError("coordinate from the wrong field")
                ds.append(c.index)
            else:
                ds.append(int(c))
        for d in ds:
            if not 0 <= d < self.base_cardinality:
                raise ValueError(f"coordinate {d} out of range")
        return FieldElement(self, self.undigits(ds))

    @property
    def zero(self) -> "FieldElement":
        return FieldElement(self, 0)

    @property
    def one(self) -> "FieldElement":
        return FieldElement(self, 1)

    def gen(self) -> "FieldElement":
        """Residue class of the modulus variable (the polynomial generator)."""
        if self.base is None:
            raise ValueError("the prime field has no polynomial generator")
        red = _pmod(self.base, [0, 1], self.modulus)
        return FieldElement(self, self.undigits(red))

    def __iter__(self) -> Iterator["FieldElement"]:
        for i in range(self.cardinality):
            yield FieldElement(self, i)

    def __len__(self) -> int:
        return self.cardinality

    # --- identity -----------------------------------------------------------

    def __eq__(self, other) -> bool:
        return isinstance(other, Field) and self._key == other._key

    def __hash__(self) -> int:
        return hash(self._key)

    def __repr__(self) -> str:
        return f"F{self.cardinality}"


class FieldElement:
    """An element of a Field, identified by its integer index."""

    __slots__ = ("field", "index")

    def __init__(self, field: Field, index: int):
        self.field = field
        self.index = index

    @property
    def coords(self) -> tuple[int, ...]:
        """Coordinates over the immediate base field, little-endian."""
        return tuple(self.field.digits(self.index))

    @property
    def is_zero(self) -> bool:
        return self.index == 0

    def _same(self, other) -> "FieldElement":
        if not isinstance(other, FieldElement) or other.field != self.field:
            raise ValueError("elements belong to different fields")
        return other

    def __add__(self, other):
        other = self._same(other)
        return FieldElement(self.field, self.field.add_i(self.index, other.index))

    def __sub__(self, other):
        other = self._same(other)
        return FieldElement(self.field, self.field.sub_i(self.index, other.index))

    def __neg__(self):
        return FieldElement(self.field, self.field.neg_i(self.index))

    def __mul__(self, other):
        other = self._same(other)
        return FieldElement(self.field, self.field.mul_i(self.index, other.index))

    def __truediv__(self, other):
        other = self._same(other)
        return FieldElement(self.field, self.field.mul_i(self.index, self.field.inv_i(other.index)))

    def __pow__(self, n: int):
        return FieldElement(self.field, self.field.pow_i(self.index, n))

    def inverse(self) -> "FieldElement":
        return FieldElement(self.field, self.field.inv_i(self.index))

    def __bool__(self) -> bool:
        return self.index != 0

    def __eq__(self, other) -> bool:
        return (isinstance(other, FieldElement) and other.field == self.field
                and other.index == self.index)

    def __hash__(self) -> int:
        return hash((self.field, self.index))

    def __repr__(self) -> str:
        return f"F{self.field.cardinality}({self.index})"


# ---------------------------------------------------------------------------
# construction


def _normalize_modulus(B: Field, modulus: Sequence, degree: int) -> tuple[int, ...]:
    coeffs = []
    for c in modulus:
        if isinstance(c, FieldElement):
            if c.field != B:
                raise ValueError("modulus coefficient from the wrong field")
            coeffs.append(c.index)
        else:
            c = int(c)
            if B.base is None:
                c %= B.p
            if not 0 <= c < B.cardinality:
                raise ValueError(f"modulus coefficient {c} out of range")
            coeffs.append(c)
    if len(coeffs) != degree + 1:
        raise ValueError(f"modulus must have degree {degree} "
                         f"(got {len(coeffs) - 1})")
    if coeffs[-1] == 0:
        raise ValueError("modulus has a zero leading coefficient")
    if coeffs[-1] != 1:
        inv = B.inv_i(coeffs[-1])
        coeffs = [B.mul_i(inv, c) for c in coeffs]
    return tuple(coeffs)


def _intern(p: int, base: Optional[Field], degree: int,
            modulus: Optional[tuple[int, ...]]) -> Field:
    key = ("p", p) if base is None else ("q", base._key, modulus)
    hit = _FIELD_CACHE.get(key)
    if hit is None:
        hit = Field(p, base, degree, modulus, token=_TOKEN)
        _FIELD_CACHE[key] = hit
    return hit


def build_base_field(p: int, e: int = 1, modulus: Optional[Sequence] = None) -> Field:
    """Construct F_q with q = p^e: F_p directly, or F_p[x]/(modulus).

    modulus, when given, is a length e+1 coefficient sequence over F_p,
    little-endian, and must be irreducible.  When omitted, the
    deterministic lowest-lex irreducible of degree e is used.
    """
    if not _is_prime(p):
        raise ValueError(f"characteristic {p} is not prime")
    if e < 1:
        raise ValueError(f"degree {e} must be >= 1")
    prime = _intern(p, None, 1, None)
    if e == 1 and modulus is None:
        return prime
    if modulus is None:
        mod = _default_modulus(prime, e)
    else:
        mod = _normalize_modulus(prime, modulus, e)
        if not _is_irreducible(prime, mod):
            raise ValueError(f"modulus {list(mod)} is reducible over F_{p}")
    return _intern(p, prime, e, mod)


def build_extension(base: Field, m: int, modulus: Optional[Sequence] = None) -> Field:
    """Construct F_{q^m} = base[y]/(modulus) over a base field of order q."""
    if m < 1:
        raise ValueError(f"extension degree {m} must be >= 1")
    if base.base is not None and base.base.base is not None:
        raise ValueError("towers deeper than prime < base < extension "
                         "are not supported")
    if modulus is None:
        mod = _default_modulus(base, m)
    else:
        mod = _normalize_modulus(base, modulus, m)
        if not _is_irreducible(base, mod):
            raise ValueError(f"modulus {list(mod)} is reducible over "
                             f"F_{base.cardinality}")
    return _intern(base.p, base, m, mod)


# ---------------------------------------------------------------------------
# field operations


def frobenius(x: FieldElement, i: int) -> FieldElement:
    """x -> x^(q^i), q the order of the immediate base field of x's field."""
    fld = x.field
    if fld.base is None:
        raise ValueError("frobenius needs an element of a constructed "
                         "extension, not the prime field")
    if not 0 <= i < fld.degree:
        raise ValueError(f"frobenius power {i} out of range 0..{fld.degree - 1}")
    q = fld.base_cardinality
    return FieldElement(fld, fld.pow_i(x.index, q ** i))


def trace(x: FieldElement) -> FieldElement:
    """Relative trace onto the base field: sum of x^(q^i), i = 0..m-1."""
    fld = x.field
    if fld.base is None:
        raise ValueError("trace needs an element of a constructed extension")
    acc = 0
    q = fld.base_cardinality
    for i in range(fld.degree):
        acc = fld.add_i(acc, fld.pow_i(x.index, q ** i))
    ds = fld.digits(acc)
    assert all(d == 0 for d in ds[1:]), "trace landed outside the base field"
    return FieldElement(fld.base, ds[0])


def enumerate_field(F: Field) -> Iterator[FieldElement]:
    """All elements in index order, zero first."""
    for i in range(F.cardinality):
        yield FieldElement(F, i)


# ---------------------------------------------------------------------------
# JSON interchange


def field_to_json(F: Field) -> dict:
    if F.base is None:
        return {"p": F.p, "e": 1, "m": 1, "base_modulus": [], "ext_modulus": []}
    if F.base.base is None:
        return {"p": F.p, "e": F.degree, "m": 1,
                "base_modulus": [] if F.degree == 1 else list(F.modulus),
                "ext_modulus": []}
    base = F.base
    return {"p": F.p, "e": base.degree, "m": F.degree,
            "base_modulus": [] if base.degree == 1 else list(base.modulus),
            "ext_modulus": list(F.modulus)}


def field_from_json(d: dict) -> Field:
    p = int(d["p"])
    e = int(d.get("e", 1))
    m = int(d.get("m", 1))
    base_mod = d.get("base_modulus") or None
    ext_mod = d.get("ext_modulus") or None
    base = build_base_field(p, e, base_mod)
    if m == 1 and ext_mod is None:
        return base
    return build_extension(base, m, ext_mod)
