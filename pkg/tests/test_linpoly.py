"""Linearized polynomials: symmetry condition, Gram bridge, constructions."""

import random

import pytest

from _helpers import congruent, field_for, matmul, random_invertible, transpose
from symrank.errors import ConstructionError
from symrank.gf import build_base_field, build_extension, frobenius
from symrank.linpoly import (QPoly, build_punctured_code, build_schmidt_code,
                             enumerate_symmetric_qpolys, gram,
                             is_symmetric_qpoly, polynomial_basis, qpoly_rank,
                             random_symmetric_qpoly, symmetric_qpoly_count)
from symrank.matspace import SymMatrix, sym_dim
from symrank.counting import singleton_max_dim

F2 = build_base_field(2)
F3 = build_base_field(3)
E8 = build_extension(F2, 3)
E16 = build_extension(F2, 4)
E9 = build_extension(F3, 2)


def test_qpoly_validation():
    with pytest.raises(ValueError):
        QPoly(F2, [])                          # not an extension
    with pytest.raises(ValueError):
        QPoly(E8, [E8.zero, E8.zero])          # wrong coefficient count
    with pytest.raises(ValueError):
        QPoly(E8, [E8.zero, E8.zero, F2.zero])  # wrong field
    f = QPoly.from_indices(E8, [1, 0, 0])
    with pytest.raises(ValueError):
        f(F2.element(1))


def test_qpoly_is_linear_over_base():
    # q-polynomials are F_q-linear: check on embedded base scalars
    rng = random.Random(31)
    for ext in (E8, E16, E9):
        q = ext.base_cardinality
        for _ in range(20):
            f = QPoly.from_indices(
                ext, [rng.randrange(ext.cardinality) for _ in range(ext.degree)])
            for _ in range(20):
                x = ext.element(rng.randrange(ext.cardinality))
                y = ext.element(rng.randrange(ext.cardinality))
                assert f(x + y) == f(x) + f(y)
                a = ext.from_coords([rng.randrange(q)] + [0] * (ext.degree - 1))
                assert f(a * x) == a * f(x)


def test_identity_poly_rank():
    # f(x) = x has full rank; f(x) = x^q - x has the base field as kernel
    for ext in (E8, E16, E9):
        m = ext.degree
        ident = QPoly(ext, [ext.one] + [ext.zero] * (m - 1))
        assert qpoly_rank(ident) == m
        coeffs = [ext.zero] * m
        coeffs[0] = -ext.one
        coeffs[1] = ext.one
        assert qpoly_rank(QPoly(ext, coeffs)) == m - 1
        assert qpoly_rank(QPoly(ext, [ext.zero] * m)) == 0


def test_symmetry_condition():
    # c x is always symmetric; a lone x^q term is symmetric only when
    # the wrap-around coefficient matches
    for c in E8:
        assert is_symmetric_qpoly(QPoly(E8, [c, E8.zero, E8.zero]))
    a = E8.gen()
    f = QPoly(E8, [E8.zero, a, E8.zero])
    assert not is_symmetric_qpoly(f)
    g = QPoly(E8, [E8.zero, a, frobenius(a, 2)])
    assert is_symmetric_qpoly(g)


def test_enumerate_symmetric_qpolys_counts():
    for ext, q, m in [(E8, 2, 3), (E16, 2, 4), (E9, 3, 2)]:
        polys = list(enumerate_symmetric_qpolys(ext))
        assert len(polys) == symmetric_qpoly_count(q, m) == q ** sym_dim(m)
        assert len(set(p.coeffs for p in polys)) == len(polys)
        for f in polys:
            assert is_symmetric_qpoly(f)


def test_gram_bijection_small():
    # gram is injective and onto the symmetric matrices
    for ext, q, m in [(E8, 2, 3), (E9, 3, 2)]:
        images = set()
        for f in enumerate_symmetric_qpolys(ext):
            G = gram(f)
            assert G.m == m and G.field == ext.base
            images.add(G.upper)
        assert len(images) == q ** sym_dim(m)


def test_gram_validation():
    a = E8.gen()
    asym = QPoly(E8, [E8.zero, a, E8.zero])
    with pytest.raises(ValueError):
        gram(asym)
    f = QPoly(E8, [E8.one, E8.zero, E8.zero])
    with pytest.raises(ValueError):
        gram(f, [E8.one, E8.one, E8.gen()])      # dependent set
    with pytest.raises(ValueError):
        gram(f, [E8.one, E8.gen()])              # wrong size


def test_gram_respects_change_of_basis():
    # over a new basis e'_j = sum_i P[i][j] e_i the matrix is P^T G P
    rng = random.Random(41)
    base = E8.base
    std = polynomial_basis(E8)
    for _ in range(25):
        f = random_symmetric_qpoly(E8, rng)
        G = gram(f)
        P = random_invertible(base, 3, rng)
        newbasis = []
        for j in range(3):
            acc = E8.zero
            for i in range(3):
                c = E8.from_coords([P[i][j], 0, 0])
                acc = acc + c * std[i]
            newbasis.append(acc)
        G2 = gram(f, newbasis)
        assert G2 == congruent(base, G, P)
        assert G2.rank() == G.rank() == qpoly_rank(f)


def test_random_symmetric_qpoly_seeded():
    rng = random.Random(99)
    for ext in (E8, E16, E9):
        for _ in range(100):
            f = random_symmetric_qpoly(ext, rng)
            assert is_symmetric_qpoly(f)
    # deterministic under a fixed seed
    a = [random_symmetric_qpoly(E8, random.Random(5)).coeffs for _ in range(3)]
    assert len(set(a)) == 1


def test_build_schmidt_code_shapes():
    C = build_schmidt_code(2, 3, 3)
    assert (C.m, C.k, C.d_design) == (3, 3, 3)
    assert C.field.cardinality == 2
    C = build_schmidt_code(2, 4, 2)
    assert C.k == 8
    C = build_schmidt_code(3, 3, 1)
    assert C.k == 6 == sym_dim(3)          # d = 1 spans the whole space
    C = build_schmidt_code(4, 2, 2)
    assert C.k == 2 and C.field.cardinality == 4
    C = build_schmidt_code(2, 1, 1)
    assert C.k == 1 and C.m == 1


def test_build_parity_validation():
    with pytest.raises(ValueError):
        build_schmidt_code(2, 4, 3)      # m - d odd goes to the other builder
    with pytest.raises(ValueError):
        build_punctured_code(2, 5, 3)    # m - d even
    with pytest.raises(ValueError):
        build_schmidt_code(2, 3, 4)
    with pytest.raises(ValueError):
        build_schmidt_code(2, 3, 0)
    with pytest.raises(ValueError):
        build_punctured_code(6, 4, 3)    # not a prime power


def test_build_punctured_code_shapes():
    C = build_punctured_code(2, 4, 3)
    assert (C.m, C.k, C.d_design) == (4, 5, 3)
    C = build_punctured_code(2, 2, 1)
    assert (C.m, C.k) == (2, 3)
    assert C.k == singleton_max_dim(2, 1)
    C = build_punctured_code(3, 4, 3)
    assert C.k == 5


def test_schmidt_basis_matrices_are_grams_of_generators():
    # the basis matrices of the d = m code are grams of b x, b a basis
    C = build_schmidt_code(2, 3, 3)
    basis = polynomial_basis(E8)
    for B, b in zip(C.basis, basis):
        f = QPoly(E8, [b, E8.zero, E8.zero])
        assert B == gram(f)
