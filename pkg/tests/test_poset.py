"""Finite posets from cover relations: order, bounds, meets/joins,
lattice detection, duality, and isomorphism."""

import pytest
from hypothesis import given
from hypothesis import strategies as st

from fusionlat.poset import BOTTOM
from fusionlat.poset import TOP
from fusionlat.poset import Poset
from fusionlat.poset import dot_poset
from fusionlat.poset import poset_isomorphic


def diamond():
    return Poset(["bot", "l", "r", "top"],
                 [("bot", "l"), ("bot", "r"), ("l", "top"), ("r", "top")])


def test_order_from_covers():
    p = Poset([1, 2, 3], [(1, 2), (2, 3)])
    assert p.leq(1, 3)
    assert p.leq(1, 1)
    assert not p.leq(3, 1)
    assert p.minimal() == [1]
    assert p.maximal() == [3]


def test_cycle_rejected():
    with pytest.raises(ValueError):
        Poset([1, 2], [(1, 2), (2, 1)])


def test_unknown_element_rejected():
    with pytest.raises(ValueError):
        Poset([1, 2], [(1, 3)])


def test_meet_join_diamond():
    p = diamond()
    assert p.join("l", "r") == "top"
    assert p.meet("l", "r") == "bot"
    assert p.join("bot", "l") == "l"
    assert p.is_lattice()


def test_antichain_is_lattice_after_bounding():
    p = Poset(["a", "b", "c"], [])
    assert p.join("a", "b") is None  # no common upper bound inside
    assert p.is_lattice()  # but the bounded poset is fine
    b = p.bounded()
    assert b.join("a", "b") == TOP
    assert b.meet("a", "b") == BOTTOM


def test_two_by_two_crown_is_not_a_lattice():
    # two bottoms under two incomparable tops: joins are ambiguous
    p = Poset(["a", "b", "c", "d"],
              [("a", "c"), ("a", "d"), ("b", "c"), ("b", "d")])
    assert not p.is_lattice()
    assert p.bounded().join("a", "b") is None


def test_empty_poset_bounds():
    p = Poset([], [])
    assert p.is_lattice()
    b = p.bounded()
    assert b.leq(BOTTOM, TOP)


def test_dual_swaps_extremes():
    p = Poset([1, 2, 3], [(1, 3), (2, 3)])
    d = p.dual()
    assert set(d.minimal()) == {3}
    assert set(d.maximal()) == {1, 2}
    dd = d.dual()
    assert sorted(dd.covers) == sorted(p.covers)


def test_isomorphism_ignores_names():
    p = diamond()
    q = p.relabel({"bot": 0, "l": 10, "r": 20, "top": 30})
    assert poset_isomorphic(p, q)
    chain = Poset([0, 1, 2, 3], [(0, 1), (1, 2), (2, 3)])
    assert not poset_isomorphic(p, chain)


def test_up_down_sets():
    p = Poset([1, 2, 3, 4], [(1, 2), (2, 3), (2, 4)])
    assert p.up_set(1) == {1, 2, 3, 4}
    assert p.down_set(4) == {1, 2, 4}


def test_dot_poset_syntax():
    p = diamond()
    text = dot_poset(p, title="diamond", labels={"l": 'say "left"'})
    assert text.startswith('digraph "diamond" {')
    assert text.count("{") == text.count("}") == 1
    assert '\\"left\\"' in text  # quotes escaped in labels
    assert text.count(" -> ") == 4


# ---------------------------------------------------------------------------
# properties on random DAGs


def random_covers(n, picks):
    covers = []
    for i, j in picks:
        if i < j:
            covers.append((i, j))
    return covers


@given(n=st.integers(min_value=1, max_value=8), data=st.data())
def test_order_is_transitive_and_antisymmetric(n, data):
    pairs = data.draw(st.lists(
        st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)),
        max_size=12))
    p = Poset(range(n), random_covers(n, pairs))
    for a in range(n):
        for b in range(n):
            for c in range(n):
                if p.leq(a, b) and p.leq(b, c):
                    assert p.leq(a, c)
            if p.leq(a, b) and p.leq(b, a):
                assert a == b


@given(n=st.integers(min_value=1, max_value=8), data=st.data())
def test_dual_reverses_order(n, data):
    pairs = data.draw(st.lists(
        st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)),
        max_size=12))
    p = Poset(range(n), random_covers(n, pairs))
    d = p.dual()
    for a in range(n):
        for b in range(n):
            assert p.leq(a, b) == d.leq(b, a)


@given(n=st.integers(min_value=1, max_value=7), data=st.data())
def test_meet_join_are_bounds_when_defined(n, data):
    pairs = data.draw(st.lists(
        st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)),
        max_size=10))
    p = Poset(range(n), random_covers(n, pairs)).bounded()
    for a in p.elements:
        for b in p.elements:
            j = p.join(a, b)
            if j is not None:
                assert p.leq(a, j) and p.leq(b, j)
            m = p.meet(a, b)
            if m is not None:
                assert p.leq(m, a) and p.leq(m, b)
