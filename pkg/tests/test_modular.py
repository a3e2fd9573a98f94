"""Modular data: S/T/Y matrices, their relations, the central-charge
residue, and the Verlinde formula as an independent route to the fusion
rules."""

import numpy as np
import pytest
from hypothesis import given
from hypothesis import settings
from hypothesis import strategies as st

from fusionlat.fusion import make_level
from fusionlat.modular import central_charge_residue
from fusionlat.modular import conformal_weights
from fusionlat.modular import gauss_sum
from fusionlat.modular import make_modular
from fusionlat.modular import modular_relations_check
from fusionlat.modular import s_matrix
from fusionlat.modular import t_matrix
from fusionlat.modular import verlinde
from fusionlat.modular import y_invertible
from fusionlat.modular import y_matrix

levels = st.integers(min_value=1, max_value=32)


def test_s_matrix_level_one_frozen():
    # S = [[1,1],[1,-1]] / sqrt(2)
    s = s_matrix(1)
    expected = np.array([[1.0, 1.0], [1.0, -1.0]]) / np.sqrt(2)
    assert np.max(np.abs(s - expected)) < 1e-12


def test_conformal_weights_small():
    # omega_j = exp(2 pi i h_j), h = j(j+1)/(k+2): spin 1/2 at k=2 has h=3/16
    omega = conformal_weights(2)
    assert abs(omega[1] - np.exp(2j * np.pi * 3.0 / 16.0)) < 1e-12
    assert omega[0] == 1


@given(k=levels)
def test_s_symmetric_and_first_row_positive(k):
    s = s_matrix(k)
    assert np.max(np.abs(s - s.T)) < 1e-12
    assert np.all(s[0] > 0)


@given(k=levels)
def test_relations_within_tolerance(k):
    report = modular_relations_check(k, tol=1e-8)
    assert report["ok"], report


@given(k=levels)
def test_central_charge_residue(k):
    assert abs(central_charge_residue(k) - (3.0 * k / (k + 2)) % 8.0) < 1e-8


def test_central_charge_known_values():
    assert abs(central_charge_residue(1) - 1.0) < 1e-8
    assert abs(central_charge_residue(2) - 1.5) < 1e-8
    # k=14: 42/16 = 2.625
    assert abs(central_charge_residue(14) - 2.625) < 1e-8


@given(k=levels)
def test_t_matrix_is_diagonal_phase(k):
    t = t_matrix(k)
    off = t - np.diag(np.diag(t))
    assert np.max(np.abs(off)) == 0
    assert np.max(np.abs(np.abs(np.diag(t)) - 1.0)) < 1e-12


@given(k=levels)
def test_y_matrix_properties(k):
    y = y_matrix(k)
    assert np.max(np.abs(y - y.T)) < 1e-8
    assert y_invertible(k)
    # Y against S through the Gauss sum magnitude
    assert np.max(np.abs(np.abs(gauss_sum(k)) * s_matrix(k) - y)) < 1e-8


def test_y_entries_are_quantum_integer_ratios():
    # Y_{ab} d_0 = [(a+1)(b+1)]-type products; spot check the first row
    k = 5
    ring = make_level(k)
    y = y_matrix(k)
    for b in ring.labels():
        assert abs(y[0, b] - ring.qdim(b)) < 1e-8


# ---------------------------------------------------------------------------
# Verlinde as a second route to the rule table


@settings(deadline=None)
@given(k=st.integers(min_value=1, max_value=16))
def test_verlinde_matches_rule_table(k):
    assert np.array_equal(verlinde(k), make_level(k).table())


def test_verlinde_guard_rejects_absurd_tolerance():
    with pytest.raises(ArithmeticError):
        verlinde(6, guard=1e-18)


@given(k=levels)
def test_global_dimension_vs_s00(k):
    ring = make_level(k)
    s = s_matrix(k)
    assert abs(ring.global_dim_sq() - 1.0 / s[0, 0] ** 2) < 1e-8
