"""Invariant connection calculus on the homogeneous models."""

import json

import numpy as np
import pytest

from natred.exterior import Multivector, wedge, interior
from natred.homogeneous import (HomogeneousModel, characteristic_connection,
                                naturally_reductive_check, parallelism_check,
                                invariant_d)
from natred.torsion import sigma_T


def test_levi_civita_is_torsion_free(entries):
    model = entries["stiefel"].model
    T0, skew = model.torsion_form(model.levi_civita())
    assert T0.max_abs() <= 1e-9 and skew <= 1e-9


def test_characteristic_connection_reproduces_torsion(entries):
    for name in ("stiefel", "berger", "s3s3", "sl2c", "heisenberg"):
        e = entries[name]
        lam = characteristic_connection(e.model, e.T)
        T, skew = e.model.torsion_form(lam)
        assert (T - e.T).max_abs() <= 1e-9, name
        assert skew <= 1e-9, name


def test_canonical_connection_reproduces_admissible_data(entries):
    e = entries["d5b1"]
    T, skew = e.model.torsion_form()
    R, sym = e.model.curvature_operator()
    assert (T - e.nomizu.T).max_abs() <= 1e-9
    assert np.max(np.abs(R.matrix - e.nomizu.R.matrix)) <= 1e-9
    assert skew <= 1e-9 and sym <= 1e-9


def test_naturally_reductive_check(entries):
    red, nat, res = naturally_reductive_check(entries["d5b1"].model)
    assert red and nat
    # the Heisenberg bracket is not metric-skew
    red, nat, res = naturally_reductive_check(entries["heisenberg"].model)
    assert red and not nat


def test_parallelism(entries):
    for name in ("d5b1", "d2", "stiefel", "berger"):
        res = parallelism_check(entries[name].model)
        assert res["torsion"] <= 1e-8, name
        assert res["curvature"] <= 1e-8, name


def test_einstein_check(entries):
    ok, factor, res = entries["stiefel"].model.einstein_check()
    assert ok and abs(factor - 8.0 / 9.0) <= 1e-9


def test_invariant_d_of_torsion(entries):
    e = entries["d2"]
    dT = invariant_d(e.model, e.T)
    assert (dT - 2.0 * sigma_T(e.T)).max_abs() <= 1e-9


def test_model_json_roundtrip(entries):
    m = entries["stiefel"].model
    back = HomogeneousModel.from_json_dict(
        json.loads(json.dumps(m.to_json_dict())))
    T1, _ = m.torsion_form()
    T2, _ = back.torsion_form()
    assert (T1 - T2).max_abs() <= 1e-12
    R1, _ = m.curvature_operator()
    R2, _ = back.curvature_operator()
    assert np.max(np.abs(R1.matrix - R2.matrix)) <= 1e-12


def test_missing_connection_raises(entries):
    m = entries["d5b1"].model
    bare = HomogeneousModel(m.algebra, m.h_idx, m.m_idx, metric=m.metric)
    with pytest.raises(ValueError):
        bare.torsion_form()
