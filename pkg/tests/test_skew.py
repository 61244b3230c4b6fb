"""so(n) dictionary, derivation action, normal forms, closures."""

import numpy as np
import pytest

from natred.exterior import Multivector, wedge, random_form, rotate
from natred.skew import (two_form_to_endo, endo_to_two_form, so_inner,
                         so_basis, act_on_form, lie_closure, g_T,
                         isotropy_algebra, skew_normal_form,
                         invariant_subspaces)


def test_two_form_endo_roundtrip(rng):
    w = random_form(5, 2, rng)
    A = two_form_to_endo(w)
    assert np.allclose(A, -A.T)
    assert (endo_to_two_form(A) - w).max_abs() <= 1e-12
    # isometry of the two dictionaries
    v = random_form(5, 2, rng)
    B = two_form_to_endo(v)
    from natred.exterior import inner
    assert abs(so_inner(A, B) - inner(w, v)) <= 1e-9


def test_so_basis_orthonormal():
    basis = so_basis(4)
    for i, A in enumerate(basis):
        for j, B in enumerate(basis):
            assert abs(so_inner(A, B) - (1.0 if i == j else 0.0)) <= 1e-12


def test_act_on_form_is_commutator_on_two_forms(rng):
    A = rng.standard_normal((5, 5))
    A = A - A.T
    w = random_form(5, 2, rng)
    W = two_form_to_endo(w)
    lhs = two_form_to_endo(act_on_form(A, w))
    assert np.allclose(lhs, A @ W - W @ A, atol=1e-9)


def test_act_on_form_derivation(rng):
    A = rng.standard_normal((5, 5))
    A = A - A.T
    a = random_form(5, 2, rng)
    b = random_form(5, 1, rng)
    lhs = act_on_form(A, wedge(a, b))
    rhs = wedge(act_on_form(A, a), b) + wedge(a, act_on_form(A, b))
    assert (lhs - rhs).max_abs() <= 1e-9


def test_skew_normal_form_reconstructs(rng):
    for dim in (4, 5, 6):
        w = random_form(dim, 2, rng)
        nf = skew_normal_form(w)
        Q = nf.frame
        assert np.allclose(Q.T @ Q, np.eye(dim), atol=1e-9)
        normal = Multivector(dim, {(2 * k + 1, 2 * k + 2): rho
                                   for k, rho in enumerate(nf.spectrum)})
        assert (rotate(normal, Q) - w).max_abs() <= 1e-8
        assert sorted(nf.spectrum, reverse=True) == nf.spectrum


def test_skew_normal_form_rank():
    w = Multivector(6, {(1, 2): 3.0, (3, 4): 1.0})
    nf = skew_normal_form(w)
    assert nf.rank == 4
    assert np.allclose(nf.spectrum, [3.0, 1.0])


def test_lie_closure_so3():
    basis = so_basis(3)
    closed = lie_closure([basis[0], basis[1]])
    assert len(closed) == 3


def test_g_T_and_isotropy_of_volume_form():
    T = Multivector.basis(3, 1, 2, 3)
    assert len(g_T(T)) == 3
    assert len(isotropy_algebra(T)) == 3     # so(3) fixes its volume form


def test_invariant_subspaces_deterministic():
    gens = [two_form_to_endo(Multivector(5, {(1, 2): 1.0}))]
    subs1 = invariant_subspaces(gens, 5, seed=7)
    subs2 = invariant_subspaces(gens, 5, seed=7)
    assert len(subs1) == len(subs2)
    for B1, B2 in zip(subs1, subs2):
        assert np.allclose(B1, B2)
    # each subspace is actually invariant
    for B in subs1:
        for A in gens:
            img = A @ B
            proj = B @ (B.T @ img)
            assert np.allclose(img, proj, atol=1e-9)
