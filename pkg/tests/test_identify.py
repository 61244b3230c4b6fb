"""Lie algebra fingerprints, naming, ideal decomposition."""

import numpy as np
import pytest

from natred.nomizu import LieAlgebraData
from natred.identify import (killing_form, fingerprint, identify,
                             ideal_decomposition)


def su2():
    c = np.zeros((3, 3, 3))
    # [x, y] = z and cyclic
    for (i, j, k) in ((0, 1, 2), (1, 2, 0), (2, 0, 1)):
        c[i, j, k], c[j, i, k] = 1.0, -1.0
    return LieAlgebraData(["x", "y", "z"], c)


def sl2r():
    c = np.zeros((3, 3, 3))
    c[0, 1, 2], c[1, 0, 2] = 1.0, -1.0
    c[2, 0, 1], c[0, 2, 1] = -1.0, 1.0     # [z, x] = -y
    c[2, 1, 0], c[1, 2, 0] = 1.0, -1.0     # [z, y] = x
    return LieAlgebraData(["x", "y", "z"], c)


def heis3():
    c = np.zeros((3, 3, 3))
    c[0, 1, 2], c[1, 0, 2] = 1.0, -1.0
    return LieAlgebraData(["x", "y", "z"], c)


def direct_sum(L1, L2):
    n1, n2 = L1.dim, L2.dim
    c = np.zeros((n1 + n2,) * 3)
    c[:n1, :n1, :n1] = L1.c
    c[n1:, n1:, n1:] = L2.c
    return LieAlgebraData(list(L1.labels) + ["%s'" % l for l in L2.labels], c)


def test_killing_form_su2():
    B = killing_form(su2())
    vals = np.linalg.eigvalsh(B)
    assert np.all(vals < -1e-9)


def test_fingerprint_heis3():
    fp = fingerprint(heis3())
    assert fp.is_nilpotent and fp.is_solvable and not fp.is_semisimple
    assert fp.center_dim == 1
    assert fp.killing_signature == (0, 0, 3)


def test_identify_three_dimensional():
    assert identify(su2()) == "su(2)"
    assert identify(sl2r()) == "sl(2,R)"
    assert identify(heis3()) == "heis3"
    assert identify(LieAlgebraData(["a", "b"], np.zeros((2, 2, 2)))) == "R^2"


def test_identify_sums():
    assert identify(direct_sum(su2(), su2())) == "su(2)+su(2)"


def test_identify_su3(entries):
    # the full symmetry algebra of the Berger family
    assert identify(entries["berger"].model.algebra) == "su(3)"


def test_ideal_decomposition():
    L = direct_sum(su2(), heis3())
    parts = ideal_decomposition(L)
    assert sorted(identify(p) for p in parts) == ["heis3", "su(2)"]
    # an indecomposable basis comes back whole
    assert len(ideal_decomposition(su2())) == 1
