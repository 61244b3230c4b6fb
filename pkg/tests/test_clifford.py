"""Clifford engine: products, the torsion square identity, the Bianchi
scalar criterion."""

import numpy as np
import pytest

from natred.clifford import (CliffordElement, cl_mul, cl_square,
                             embed_curvature, bianchi_clifford_check,
                             torsion_square_identity_residual)
from natred.exterior import Multivector, random_form
from natred.nomizu import CurvatureOperator
from natred.torsion import sigma_T


def test_generator_square_is_minus_one():
    e1 = CliffordElement.from_multivector(Multivector.basis(4, 1))
    sq = cl_square(e1)
    assert abs(sq.scalar_part() + 1.0) <= 1e-12
    assert sq.nonscalar_max() <= 1e-12


def test_one_form_square_is_minus_norm(rng):
    x = random_form(5, 1, rng)
    sq = cl_square(CliffordElement.from_multivector(x))
    assert abs(sq.scalar_part() + x.norm() ** 2) <= 1e-9
    assert sq.nonscalar_max() <= 1e-9


def test_product_associative(rng):
    a = CliffordElement.from_multivector(random_form(4, 1, rng))
    b = CliffordElement.from_multivector(random_form(4, 2, rng))
    c = CliffordElement.from_multivector(random_form(4, 3, rng))
    lhs = cl_mul(cl_mul(a, b), c)
    rhs = cl_mul(a, cl_mul(b, c))
    diff = lhs - rhs
    assert diff.nonscalar_max() <= 1e-9 and abs(diff.scalar_part()) <= 1e-9


def test_multivector_roundtrip(rng):
    a = random_form(5, 3, rng)
    back = CliffordElement.from_multivector(a).to_multivector()
    assert (a - back).max_abs() <= 1e-12


def test_embed_curvature_square_of_kaehler_form():
    om = Multivector(4, {(1, 2): 1.0, (3, 4): 1.0})
    R = CurvatureOperator.from_products(4, [(1.0, om, om)])
    elem = embed_curvature(R.matrix, 4)
    got = elem.to_multivector()
    want = Multivector(4, {(): -2.0, (1, 2, 3, 4): 2.0})
    assert (got - want).max_abs() <= 1e-12


def test_torsion_square_identity(rng):
    T = random_form(5, 3, rng)
    assert torsion_square_identity_residual(T, sigma_T(T)) <= 1e-9


def test_bianchi_scalar_criterion(entries):
    e = entries["d5b1"]
    ok, res, _ = bianchi_clifford_check(e.T, e.R.matrix)
    assert ok and res <= 1e-9
    # breaking the forced coefficient breaks scalarness
    om = Multivector(5, {(1, 2): 1.0})
    bad = CurvatureOperator.from_products(5, [(1.0, om, om)])
    ok, res, _ = bianchi_clifford_check(e.T, bad.matrix)
    assert not ok and res > 1e-3
