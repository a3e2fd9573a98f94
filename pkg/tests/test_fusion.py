"""Fusion-rule layer: label arithmetic, the combinatorial rule, sector
algebra, and quantum dimensions."""

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from fusionlat.fusion import FusionRing
from fusionlat.fusion import add
from fusionlat.fusion import format_label
from fusionlat.fusion import fuse
from fusionlat.fusion import make_level
from fusionlat.fusion import pairing
from fusionlat.fusion import parse_label
from fusionlat.fusion import sector

levels = st.integers(min_value=1, max_value=32)


# ---------------------------------------------------------------------------
# labels


def test_parse_format_known_values():
    assert parse_label("3/2") == 3
    assert parse_label("2") == 4
    assert parse_label("0") == 0
    assert parse_label(0.5) == 1
    assert format_label(3) == "3/2"
    assert format_label(4) == "2"
    assert format_label(0) == "0"


@given(two_j=st.integers(min_value=0, max_value=128))
def test_parse_format_roundtrip(two_j):
    assert parse_label(format_label(two_j)) == two_j


@pytest.mark.parametrize("bad", ["-1/2", "1/3", "0.3", -1, 0.75])
def test_parse_label_rejects_non_half_integers(bad):
    with pytest.raises(ValueError):
        parse_label(bad)


@pytest.mark.parametrize("bad_k", [0, -1, 2.5, "3"])
def test_make_level_rejects_bad_levels(bad_k):
    with pytest.raises(ValueError):
        make_level(bad_k)


# ---------------------------------------------------------------------------
# the rule at small levels, frozen by hand


def test_level_one_table():
    ring = make_level(1)
    assert ring.fuse_labels(1, 1) == [0]
    assert ring.fuse_labels(0, 1) == [1]


def test_level_two_table():
    ring = make_level(2)
    assert ring.fuse_labels(1, 1) == [0, 2]
    assert ring.fuse_labels(2, 2) == [0]
    assert ring.fuse_labels(1, 2) == [1]


def test_level_four_truncation():
    # spin 1 x spin 1 keeps spin 2 only when the level admits it
    assert make_level(4).fuse_labels(2, 2) == [0, 2, 4]
    assert make_level(3).fuse_labels(2, 2) == [0, 2]
    assert make_level(2).fuse_labels(2, 2) == [0]


def test_label_range_checked():
    ring = make_level(4)
    with pytest.raises(ValueError):
        ring.fuse_labels(5, 0)
    with pytest.raises(ValueError):
        ring.n(0, 0, -1)


# ---------------------------------------------------------------------------
# ring axioms as properties


@given(k=levels, data=st.data())
def test_commutative(k, data):
    ring = make_level(k)
    a = data.draw(st.integers(0, k))
    b = data.draw(st.integers(0, k))
    assert ring.fuse_labels(a, b) == ring.fuse_labels(b, a)


@given(k=levels, data=st.data())
def test_unit_and_duality(k, data):
    ring = make_level(k)
    a = data.draw(st.integers(0, k))
    b = data.draw(st.integers(0, k))
    assert ring.fuse_labels(0, a) == [a]
    # all labels are self-conjugate: the vacuum pairs a with a only
    assert ring.n(a, b, 0) == (1 if a == b else 0)


@given(k=st.integers(min_value=1, max_value=12), data=st.data())
def test_associative(k, data):
    ring = make_level(k)
    a = data.draw(st.integers(0, k))
    b = data.draw(st.integers(0, k))
    c = data.draw(st.integers(0, k))
    left = fuse(ring, fuse(ring, sector(a), sector(b)), sector(c))
    right = fuse(ring, sector(a), fuse(ring, sector(b), sector(c)))
    assert left == right


@given(k=levels, data=st.data())
def test_parity_conservation(k, data):
    ring = make_level(k)
    a = data.draw(st.integers(0, k))
    b = data.draw(st.integers(0, k))
    for c in ring.fuse_labels(a, b):
        assert (a + b + c) % 2 == 0


@given(k=levels, data=st.data())
def test_frobenius_reciprocity(k, data):
    ring = make_level(k)
    a = sector(data.draw(st.integers(0, k)))
    b = sector(data.draw(st.integers(0, k)))
    c = sector(data.draw(st.integers(0, k)))
    # with self-conjugate labels: <ab, c> = <b, ac>
    assert pairing(ring, fuse(ring, a, b), c) == \
        pairing(ring, b, fuse(ring, a, c))


def test_sector_helpers():
    s = sector(0, 2, 2)
    assert s == {0: 1, 2: 2}
    assert add(s, {2: 1, 4: 1}) == {0: 1, 2: 3, 4: 1}
    assert add(s, {0: -1}) == {2: 2}


# ---------------------------------------------------------------------------
# quantum dimensions


@given(k=levels)
def test_qdim_endpoints_and_positivity(k):
    ring = make_level(k)
    dims = ring.qdims()
    assert abs(dims[0] - 1.0) < 1e-12
    assert abs(dims[k] - 1.0) < 1e-12
    assert np.all(dims > 0)


@given(k=levels, data=st.data())
def test_qdim_multiplicative_over_channels(k, data):
    ring = make_level(k)
    a = data.draw(st.integers(0, k))
    b = data.draw(st.integers(0, k))
    total = sum(ring.qdim(c) for c in ring.fuse_labels(a, b))
    assert abs(total - ring.qdim(a) * ring.qdim(b)) < 1e-8


@given(k=levels)
def test_qint_reflection_symmetry(k):
    ring = make_level(k)
    for n in range(1, k + 2):
        assert abs(ring.qint(n) - ring.qint(k + 2 - n)) < 1e-12


def test_golden_ratio_at_level_three():
    # [2] at level 3 is the golden ratio
    ring = make_level(3)
    assert abs(ring.qdim(1) - (1 + np.sqrt(5)) / 2) < 1e-12


@given(k=levels)
def test_table_is_symmetric_tensor(k):
    table = make_level(k).table()
    assert np.array_equal(table, table.transpose(1, 0, 2))
    # full symmetry of N_{abc} with self-conjugate labels
    assert np.array_equal(table, table.transpose(0, 2, 1))
