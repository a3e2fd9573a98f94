"""Graph modules over the fusion ring: A-D-E graphs, the matrix
recursion, exponents, Perron-Frobenius data, and the eigenvector
identities tying modules to the S matrix."""

import numpy as np
import pytest
from hypothesis import given
from hypothesis import settings
from hypothesis import strategies as st

from fusionlat.nimrep import a_graph
from fusionlat.nimrep import build_nimrep
from fusionlat.nimrep import classify_graph
from fusionlat.nimrep import d_graph
from fusionlat.nimrep import dot_graph
from fusionlat.nimrep import e6_graph
from fusionlat.nimrep import e7_graph
from fusionlat.nimrep import e8_graph
from fusionlat.nimrep import ephi_checks
from fusionlat.nimrep import exponent_membership_check
from fusionlat.nimrep import exponent_values_check
from fusionlat.nimrep import fusion_module_identity_holds
from fusionlat.nimrep import pf_dimension_vector


def all_graphs():
    graphs = [a_graph(n) for n in range(2, 12)]
    graphs += [d_graph(n) for n in range(4, 10)]
    graphs += [e6_graph(), e7_graph(), e8_graph()]
    return graphs


# ---------------------------------------------------------------------------
# graph constructors and classification


def test_graph_shapes():
    assert a_graph(5).coxeter_number == 6
    assert d_graph(6).coxeter_number == 10
    assert e6_graph().coxeter_number == 12
    assert e7_graph().coxeter_number == 18
    assert e8_graph().coxeter_number == 30


@pytest.mark.parametrize("graph", all_graphs(), ids=lambda g: g.name)
def test_classify_roundtrip(graph):
    assert classify_graph(graph.adjacency) == graph.name


def test_classify_rejects_non_ade():
    # a 4-cycle has spectral radius exactly 2
    cycle = np.array([[0, 1, 0, 1], [1, 0, 1, 0],
                      [0, 1, 0, 1], [1, 0, 1, 0]])
    with pytest.raises(ValueError):
        classify_graph(cycle)
    with pytest.raises(ValueError):
        classify_graph(np.zeros((3, 3), dtype=int))  # disconnected
    star = np.zeros((5, 5), dtype=int)
    star[0, 1:] = star[1:, 0] = 1  # degree-4 vertex
    with pytest.raises(ValueError):
        classify_graph(star)


# ---------------------------------------------------------------------------
# the recursion


@pytest.mark.parametrize("graph", all_graphs(), ids=lambda g: g.name)
def test_matrices_are_nonnegative_integers(graph):
    nim = build_nimrep(graph)
    assert len(nim.matrices) == nim.level + 1
    for mat in nim.matrices:
        assert mat.dtype.kind == "i"
        assert np.all(mat >= 0)


@pytest.mark.parametrize("graph", all_graphs(), ids=lambda g: g.name)
def test_module_identity_exact(graph):
    assert fusion_module_identity_holds(build_nimrep(graph))


def test_level_mismatch_raises():
    with pytest.raises(ValueError):
        build_nimrep(e7_graph(), level=10)


def test_top_label_acts_as_involution_on_a():
    # on A_{k+1} the top spin acts by the flip permutation
    nim = build_nimrep(a_graph(6))
    top = nim.matrices[5]
    assert np.array_equal(top, np.eye(6, dtype=int)[::-1])


# ---------------------------------------------------------------------------
# exponents


def test_exponents_frozen():
    # Coxeter exponents m = two_mu + 1
    def coxeter_exponents(graph):
        return sorted(m + 1 for m, _ in build_nimrep(graph).exponents)

    assert coxeter_exponents(e6_graph()) == [1, 4, 5, 7, 8, 11]
    assert coxeter_exponents(e7_graph()) == [1, 5, 7, 9, 11, 13, 17]
    assert coxeter_exponents(e8_graph()) == [1, 7, 11, 13, 17, 19, 23, 29]
    assert coxeter_exponents(a_graph(5)) == [1, 2, 3, 4, 5]
    # D_6 at h=10: 1,3,5,5,7,9 (doubled middle exponent)
    assert coxeter_exponents(d_graph(6)) == [1, 3, 5, 5, 7, 9]


@pytest.mark.parametrize("graph", all_graphs(), ids=lambda g: g.name)
def test_exponent_values(graph):
    assert exponent_values_check(build_nimrep(graph), tol=1e-8)


def test_exponent_membership_forced_by_sine():
    # all multiples of 9 are odd multiples here, so two_j=8 forces every
    # integer spin; the two non-exponents 2 and 14 expose the failure
    nim = build_nimrep(e7_graph())
    report = exponent_membership_check(nim, [8])
    assert not report["ok"]
    assert report[8]["missing"] == [2, 14]
    # at two_j=5 the sine vanishes exactly at the non-exponents
    assert exponent_membership_check(nim, [5])["ok"]
    # E6 passes only at the twist spin
    e6 = build_nimrep(e6_graph())
    assert exponent_membership_check(e6, [3])["ok"]
    assert exponent_membership_check(e6, [0])[0]["missing"] == [2, 8]
    # D graphs carry every integer spin as an exponent
    d = build_nimrep(d_graph(6))
    assert exponent_membership_check(d, [0, 4, 8])["ok"]


# ---------------------------------------------------------------------------
# Perron-Frobenius data


def test_pf_vector_head_normalized():
    for graph in all_graphs():
        pf = pf_dimension_vector(graph)
        assert abs(pf[0] - 1.0) < 1e-12
        assert np.all(pf > 0)


def test_pf_frozen_e7():
    expected = [1.0, 1.9694, 2.8793, 3.7017, 2.5320, 1.8796, 1.2857]
    pf = pf_dimension_vector(e7_graph())
    assert np.max(np.abs(pf / expected - 1.0)) < 5e-4


def test_pf_frozen_e8():
    expected = [1.0, 1.9889, 2.9628, 3.8997, 4.7939, 3.225, 2.4103, 1.6217]
    pf = pf_dimension_vector(e8_graph())
    assert np.max(np.abs(pf / expected - 1.0)) < 5e-3


def test_pf_is_eigenvector():
    for graph in (a_graph(7), d_graph(5), e6_graph()):
        pf = pf_dimension_vector(graph)
        image = graph.adjacency @ pf
        ratio = image / pf
        assert np.max(ratio) - np.min(ratio) < 1e-9


# ---------------------------------------------------------------------------
# eigenvector identities against the S matrix


@pytest.mark.parametrize("graph", all_graphs(), ids=lambda g: g.name)
def test_ephi_identities(graph):
    report = ephi_checks(build_nimrep(graph), tol=1e-8)
    assert report["ok"], report


# ---------------------------------------------------------------------------
# DOT emission


def test_dot_graph_syntax():
    text = dot_graph(e6_graph())
    assert text.startswith("graph ")
    assert text.count("{") == text.count("}") == 1
    assert text.rstrip().endswith("}")
    # one node line per vertex, one edge line per graph edge
    assert text.count("[label=") == 6
    assert text.count(" -- ") == 5


@settings(deadline=None, max_examples=20)
@given(n=st.integers(min_value=2, max_value=33))
def test_a_family_builds_at_any_size(n):
    nim = build_nimrep(a_graph(n))
    assert fusion_module_identity_holds(nim)
