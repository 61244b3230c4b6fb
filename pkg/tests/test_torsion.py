"""Case routing, sigma invariant, contact and Hermitian structures."""

import json

import numpy as np
import pytest

from natred.exterior import Multivector, interior, wedge
from natred.torsion import (sigma_T, torsion_kernel, classify,
                            contact_structure_dim5, hermitian_from_sigma)


def nf5(rho, lam):
    return Multivector(5, {(1, 2, 5): -rho, (3, 4, 5): -lam})


def test_sigma_of_normal_form():
    sig = sigma_T(nf5(2.0, 3.0))
    assert (sig - Multivector(5, {(1, 2, 3, 4): 6.0})).max_abs() <= 1e-12


def test_sigma_vanishes_in_dim_4(rng):
    from natred.exterior import random_form
    assert sigma_T(random_form(4, 3, rng)).max_abs() <= 1e-9


def test_torsion_kernel():
    T = Multivector(4, {(1, 2, 3): 1.0})
    assert len(torsion_kernel(T)) == 1


def test_classify_labels():
    assert classify(Multivector.basis(3, 1, 2, 3)).case_label == "D3"
    assert classify(Multivector.basis(4, 1, 2, 3)).case_label == "D4"
    assert classify(Multivector.basis(5, 1, 2, 3)).case_label == "D5_A"
    assert classify(nf5(1.0, 2.0)).case_label == "D5_B1"
    assert classify(nf5(1.5, 1.5)).case_label == "D5_B2"
    assert classify(Multivector.basis(6, 1, 2, 3)).case_label == "D6_A"


def test_classify_rejects_bad_input():
    with pytest.raises(ValueError):
        classify(Multivector.basis(4, 1, 2))
    with pytest.raises(ValueError):
        classify(Multivector.basis(7, 1, 2, 3))


def test_classify_parameters_adapted_frame():
    rep = classify(nf5(1.0, 2.0))
    # spectrum reported in descending order
    assert abs(rep.parameters["rho"] - 2.0) <= 1e-9
    assert abs(rep.parameters["lambda"] - 1.0) <= 1e-9
    assert np.allclose(rep.frame.T @ rep.frame, np.eye(5), atol=1e-9)
    json.dumps(rep.to_json_dict())   # serializable


def test_rank4_advisory(entries):
    rep = classify(entries["rank4"].T)
    assert rep.case_label == "D6_C_rank4"
    assert rep.dual_sigma_rank == 4
    assert any("parallel" in n for n in rep.notes)


def test_contact_structure_flags():
    c = contact_structure_dim5(nf5(1.0, 2.0))
    assert c.quasi_sasaki and not c.alpha_sasaki
    c = contact_structure_dim5(nf5(1.5, 1.5))
    assert c.alpha_sasaki and not c.sasaki
    c = contact_structure_dim5(nf5(2.0, 2.0))
    assert c.sasaki
    for v in c.residuals.values():
        assert v <= 1e-8


def test_contact_reconstruction():
    T = nf5(1.0, 3.0)
    c = contact_structure_dim5(T)
    # eta ^ d_eta rebuilds the torsion, phi is metric and almost complex
    assert (T - wedge(c.eta, c.d_eta)).max_abs() <= 1e-9
    assert np.allclose(c.phi @ c.phi, -np.eye(5) + np.outer(c.xi, c.xi),
                       atol=1e-9)


def test_hermitian_split(entries):
    d2 = entries["d2"]          # alpha = -1, beta = 1: nearly Kaehler
    h = hermitian_from_sigma(d2.T)
    assert h.pure_w1 and not h.pure_w3
    assert np.allclose(h.J @ h.J, -np.eye(6), atol=1e-8)
    assert (d2.T - h.w1_part - h.w3_part).max_abs() <= 1e-9
    assert np.max(np.abs(h.lee_form)) <= 1e-8


def test_hermitian_requires_full_rank():
    with pytest.raises(ValueError):
        hermitian_from_sigma(Multivector.basis(6, 1, 2, 3))
