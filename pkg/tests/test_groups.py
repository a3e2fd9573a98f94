"""Finite groups as multiplication tables, the subgroup machinery, and
the rational group-algebra counting checks."""

from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import settings
from hypothesis import strategies as st

from fusionlat import group_algebra as ga
from fusionlat import groups


# ---------------------------------------------------------------------------
# constructors and validation

def test_constructor_orders():
    assert groups.cyclic(5).order == 5
    assert groups.dihedral(4).order == 8
    assert groups.dicyclic(3).order == 12
    assert groups.symmetric(4).order == 24
    assert groups.alternating(5).order == 60
    assert groups.heisenberg3().order == 27
    assert groups.quaternion().order == 8
    for name, order in (("Q8", 8), ("HE3", 27), ("F20", 20), ("F21", 21),
                        ("F52", 52)):
        assert groups.named_group(name).order == order


def test_degenerate_parameters_rejected():
    with pytest.raises(ValueError):
        groups.cyclic(0)
    with pytest.raises(ValueError):
        groups.dihedral(0)
    with pytest.raises(ValueError):
        groups.dicyclic(0)


def test_table_validation():
    with pytest.raises(ValueError):
        groups.FiniteGroup(mult=((1, 0), (0, 1)))      # 0 not the identity
    with pytest.raises(ValueError):
        groups.FiniteGroup(mult=((0, 1), (1, 1)))      # 1 has no inverse
    with pytest.raises(ValueError):
        groups.FiniteGroup(mult=((0, 1, 2), (1, 0, 0), (2, 0, 1)))
    with pytest.raises(ValueError):
        groups.FiniteGroup(mult=((0, 1), (1,)))        # ragged row


def test_load_group():
    spec = {"order": 3, "mult": [[0, 1, 2], [1, 2, 0], [2, 0, 1]]}
    g = groups.load_group(spec, name="C3")
    assert g.order == 3
    assert g.op(1, 2) == 0
    assert groups.load_group(g) is g
    with pytest.raises(ValueError):
        groups.load_group({"order": 4, "mult": spec["mult"]})


def test_direct_product_abelian():
    g = groups.direct_product(groups.cyclic(2), groups.cyclic(3))
    assert g.order == 6
    assert all(g.op(a, b) == g.op(b, a)
               for a in g.elements() for b in g.elements())


def test_semidirect_inversion_gives_nonabelian():
    c3 = groups.cyclic(3)
    c2 = groups.cyclic(2)
    action = [(0, 1, 2), (0, 2, 1)]
    g = groups.semidirect(c3, c2, action)
    assert g.order == 6
    assert any(g.op(a, b) != g.op(b, a)
               for a in g.elements() for b in g.elements())


def test_semidirect_validation():
    c5 = groups.cyclic(5)
    c2 = groups.cyclic(2)
    with pytest.raises(ValueError):
        groups.semidirect(c5, c2, [tuple(range(5))])   # wrong length
    with pytest.raises(ValueError):
        groups.semidirect(c5, c2, [tuple(range(5)), (1, 0, 2, 3, 4)])
    # multiplication by 2 has order 4 mod 5, not 2
    bad = [tuple(range(5)), tuple(2 * i % 5 for i in range(5))]
    with pytest.raises(ValueError):
        groups.semidirect(c5, c2, bad)


# ---------------------------------------------------------------------------
# subgroups

def test_subgroup_counts():
    assert len(groups.subgroups(groups.symmetric(3))) == 6
    assert len(groups.subgroups(groups.symmetric(4))) == 30
    assert len(groups.subgroups(groups.alternating(4))) == 10
    assert len(groups.subgroups(groups.alternating(5))) == 59
    assert len(groups.subgroups(groups.quaternion())) == 6


def test_maximal_subgroups():
    s4 = groups.symmetric(4)
    maximal = groups.maximal_subgroups(s4)
    assert len(maximal) == 8
    assert sorted(len(m) for m in maximal) == [6, 6, 6, 6, 8, 8, 8, 12]
    assert len(groups.maximal_subgroups(groups.symmetric(3))) == 4


def test_maximal_over_order_two():
    # transpositions sit under three maximal subgroups, the fixed-point
    # free involutions under four
    s4 = groups.symmetric(4)
    counts = sorted(len(groups.maximal_over(s4, h))
                    for h in groups.subgroups(s4) if len(h) == 2)
    assert counts == [3, 3, 3, 3, 3, 3, 4, 4, 4]


def test_core_and_normal_structure():
    s4 = groups.symmetric(4)
    d8 = next(h for h in groups.subgroups(s4) if len(h) == 8)
    c = groups.core(s4, d8)
    assert len(c) == 4
    assert groups.is_normal(s4, c)
    assert sorted(len(n) for n in groups.normal_subgroups(s4)) == \
        [1, 4, 12, 24]
    assert [len(n) for n in groups.minimal_normal_subgroups(s4)] == [4]


def test_conjugate_subgroup_preserves_order():
    s4 = groups.symmetric(4)
    s3 = next(h for h in groups.subgroups(s4) if len(h) == 6)
    for g in s4.elements():
        image = groups.conjugate_subgroup(s4, g, s3)
        assert len(image) == 6
        assert groups.is_subgroup(s4, image)


def test_subgroup_conjugacy_classes():
    s4 = groups.symmetric(4)
    classes = groups.subgroup_conjugacy_classes(s4, groups.subgroups(s4))
    assert len(classes) == 11


def test_quotient():
    s4 = groups.symmetric(4)
    v4 = next(n for n in groups.normal_subgroups(s4) if len(n) == 4)
    q, proj = groups.quotient(s4, v4)
    assert q.order == 6
    assert proj[0] == 0
    assert any(q.op(a, b) != q.op(b, a)
               for a in q.elements() for b in q.elements())
    s3 = next(h for h in groups.subgroups(s4) if len(h) == 6)
    with pytest.raises(ValueError):
        groups.quotient(s4, s3)


def test_conjugacy_class_counts():
    for group, want in ((groups.symmetric(4), 5), (groups.alternating(5), 5),
                        (groups.symmetric(3), 3), (groups.quaternion(), 5)):
        classes = groups.conjugacy_classes(group)
        assert len(classes) == want
        assert sum(len(c) for c in classes) == group.order


def test_solvability():
    assert groups.solvable(groups.symmetric(4))
    assert groups.solvable(groups.quaternion())
    assert groups.solvable(groups.heisenberg3())
    assert not groups.solvable(groups.alternating(5))


_S4 = groups.symmetric(4)


@given(st.lists(st.integers(min_value=0, max_value=23), max_size=4))
@settings(max_examples=40, deadline=None)
def test_closure_is_subgroup(gens):
    sub = groups.closure(_S4, gens)
    assert 0 in sub
    assert groups.is_subgroup(_S4, sub)
    assert 24 % len(sub) == 0
    assert all(_S4.inv(x) in sub for x in sub)


# ---------------------------------------------------------------------------
# group algebra: averaging

def test_idempotent_is_idempotent():
    s3 = groups.symmetric(3)
    for sub in groups.subgroups(s3):
        e = ga.idempotent(s3, sub)
        assert e * e == e
        assert sum(e.coefficients) == 1


def test_product_set_size_formula():
    s4 = groups.symmetric(4)
    subs = groups.subgroups(s4)
    h1 = next(h for h in subs if len(h) == 6)
    h2 = next(h for h in subs if len(h) == 8)
    prod = ga.product_set(s4, h1, h2)
    meet = len(frozenset(h1) & frozenset(h2))
    assert len(prod) == 6 * 8 // meet


def test_averaging_identity_all_pairs():
    out = ga.lemma_es_check(groups.symmetric(3))
    assert out == {"group": "S3", "subgroups": 6, "pairs": 21, "ok": True}
    assert ga.lemma_es_check(groups.symmetric(4))["ok"]
    assert ga.lemma_es_check(groups.quaternion())["ok"]


# ---------------------------------------------------------------------------
# exact rank

def _oracle_rank(rows):
    rows = [[Fraction(x) for x in row] for row in rows]
    rank = 0
    for col in range(len(rows[0]) if rows else 0):
        pivot = next((r for r in range(rank, len(rows)) if rows[r][col]),
                     None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        lead = rows[rank][col]
        for r in range(len(rows)):
            if r != rank and rows[r][col]:
                factor = rows[r][col] / lead
                rows[r] = [a - factor * b
                           for a, b in zip(rows[r], rows[rank])]
        rank += 1
    return rank


_C5 = groups.cyclic(5)


@given(st.lists(st.lists(st.integers(min_value=-3, max_value=3),
                         min_size=5, max_size=5), min_size=1, max_size=6))
@settings(max_examples=60, deadline=None)
def test_exact_rank_matches_elimination(rows):
    vectors = [ga.algebra_element(_C5, dict(enumerate(row))) for row in rows]
    assert ga.exact_rank(vectors) == _oracle_rank(rows)


def test_linear_independence():
    basis = [ga.algebra_element(_C5, {i: 1}) for i in range(5)]
    assert ga.linearly_independent(basis)
    assert not ga.linearly_independent(basis + [basis[0]])
    assert ga.exact_rank([]) == 0


# ---------------------------------------------------------------------------
# witnesses and counting checks

def test_mod2_witnesses_s3():
    s3 = groups.symmetric(3)
    witnesses = ga.mod2_witnesses(s3)
    assert len(witnesses) == 4
    assert all(ga.is_mean_zero(xi) for xi in witnesses)
    assert ga.linearly_independent(witnesses)


def test_mod2_witness_counts():
    # one witness per maximal subgroup
    assert len(ga.mod2_witnesses(groups.symmetric(4))) == 8
    assert len(ga.mod2_witnesses(groups.quaternion())) == 3


def test_mod2_requires_solvable():
    with pytest.raises(ValueError):
        ga.mod2_witnesses(groups.alternating(5))


def test_wall_counting_bound():
    out = ga.wall_check_group(groups.alternating(5))
    assert out == {"group": "A5", "order": 60, "maximal": 21, "ok": True}
    assert ga.wall_check_group(groups.cyclic(1)) == \
        {"group": "C1", "order": 1, "maximal": 0, "ok": True}
    assert ga.wall_check_group(groups.symmetric(4))["maximal"] == 8


def test_relative_wall_s4_over_transposition():
    s4 = groups.symmetric(4)
    c2 = next(h for h in groups.subgroups(s4)
              if len(h) == 2 and len(groups.maximal_over(s4, h)) == 3)
    out = ga.relative_wall_check(s4, c2)
    assert out["index"] == 12
    assert out["maximal_over"] == 3
    assert out["ok"]
    assert out["solvable"]
    assert out["witnesses"] == 3
    assert out["witnesses_h_invariant"]
    assert out["witnesses_independent"]


def test_strict_class_counting():
    assert ga.strict_ag_check(groups.symmetric(4)) == {
        "group": "S4", "classes": 5, "maximal_classes": 3, "ok": True,
        "f_independent": True}
    out = ga.strict_ag_check(groups.symmetric(3))
    assert (out["classes"], out["maximal_classes"]) == (3, 2)
    with pytest.raises(ValueError):
        ga.strict_ag_check(groups.alternating(5))


# ---------------------------------------------------------------------------
# corpora

def test_corpus_sizes():
    corpus = ga.corpus_groups()
    assert len(corpus) == 52
    assert len({g.name for g in corpus}) == 52
    solvable = ga.solvable_corpus(48)
    assert len(solvable) == 50
    assert all(groups.solvable(g) for g in solvable)
    assert all(g.order <= 48 for g in solvable)


def test_random_pairs_deterministic():
    a = ga.random_subgroup_pairs(10, seed=7)
    b = ga.random_subgroup_pairs(10, seed=7)
    assert [(g.name, sorted(h)) for g, h in a] == \
        [(g.name, sorted(h)) for g, h in b]
    for g, h in a:
        assert groups.is_subgroup(g, h)
        assert g.order <= 60


def test_relative_wall_over_sampled_pairs():
    for g, h in ga.random_subgroup_pairs(25, seed=3):
        out = ga.relative_wall_check(g, h, with_witnesses=False)
        assert out["ok"], (g.name, sorted(h))
