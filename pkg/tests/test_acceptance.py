"""Top-level acceptance gate: ten headline checks, one line of output
each, covering the fusion/Verlinde agreement, modular relations, nimrep
structure, eigenvector identities, recorded lattices, the counting
bounds, and the finite-group corpus."""

import time

import numpy as np

from fusionlat import ghj
from fusionlat import group_algebra as ga
from fusionlat.fusion import make_level
from fusionlat.modular import central_charge_residue
from fusionlat.modular import modular_relations_check
from fusionlat.modular import verlinde
from fusionlat.nimrep import a_graph
from fusionlat.nimrep import build_nimrep
from fusionlat.nimrep import d_graph
from fusionlat.nimrep import e6_graph
from fusionlat.nimrep import e7_graph
from fusionlat.nimrep import e8_graph
from fusionlat.nimrep import ephi_checks
from fusionlat.nimrep import pf_dimension_vector
from fusionlat.poset import Poset
from fusionlat.poset import poset_isomorphic

CASES = (("A", 4), ("A", 6), ("A", 8), ("D", 4), ("D", 6), ("D", 8),
         ("D", 10), ("D", 16), ("E6", None), ("E7", None), ("E8", None))

_CATALOGS = None


def catalogs():
    global _CATALOGS
    if _CATALOGS is None:
        _CATALOGS = [(case, k, ghj.load_catalog(case, k))
                     for case, k in CASES]
    return _CATALOGS


def report(num, description, ok):
    print("[%s] acceptance %02d: %s"
          % ("PASS" if ok else "FAIL", num, description))
    return ok


def test_acceptance_01_rule_table_equals_verlinde():
    start = time.monotonic()
    ok = True
    for k in range(1, 33):
        ok = ok and np.array_equal(make_level(k).table(),
                                   verlinde(k, guard=1e-6))
    elapsed = time.monotonic() - start
    ok = ok and elapsed < 10.0
    assert report(1, "closed-form fusion table equals the Verlinde table "
                     "for k=1..32 in %.1fs" % elapsed, ok)


def test_acceptance_02_modular_relations():
    ok = True
    worst = 0.0
    for k in range(1, 33):
        out = modular_relations_check(k)
        residuals = [v for key, v in out.items() if key != "ok"]
        worst = max([worst] + residuals)
        ok = ok and out["ok"] and max(residuals) <= 1e-8
        c0 = central_charge_residue(k)
        ok = ok and abs(c0 - (3.0 * k / (k + 2)) % 8.0) <= 1e-8
    assert report(2, "S/T/Y relations and the central-charge residue hold "
                     "to 1e-8 for k=1..32 (worst %.1e)" % worst, ok)


def test_acceptance_03_nimrep_structure():
    start = time.monotonic()
    graphs = [a_graph(n) for n in range(2, 34)]
    graphs += [d_graph(n) for n in range(4, 19)]
    graphs += [e6_graph(), e7_graph(), e8_graph()]
    ok = True
    for graph in graphs:
        nim = build_nimrep(graph)
        ring = make_level(nim.level)
        table = ring.table()
        mats = nim.matrices
        for mat in mats:
            ok = ok and mat.dtype.kind == "i" and (mat >= 0).all()
        for i in range(nim.level + 1):
            for j in range(nim.level + 1):
                want = sum(int(table[i, j, l]) * mats[l]
                           for l in range(nim.level + 1))
                ok = ok and np.array_equal(mats[i] @ mats[j], want)
        spins = sorted(two_mu for two_mu, _ in nim.exponents)
        values = np.sort(np.linalg.eigvalsh(mats[1].astype(float)))
        want = np.sort([2.0 * np.cos(np.pi * (two_mu + 1) / (nim.level + 2))
                        for two_mu in spins])
        ok = ok and np.max(np.abs(values - want)) <= 1e-8
    elapsed = time.monotonic() - start
    ok = ok and elapsed < 5.0
    assert report(3, "all %d graph modules are nonnegative-integer, satisfy "
                     "the module identity exactly, and have the recorded "
                     "spectra (%.1fs)" % (len(graphs), elapsed), ok)


def test_acceptance_04_exceptional_pf_vectors():
    e7_want = (1.0, 1.9694, 2.8793, 3.7017, 2.5320, 1.8796, 1.2857)
    e8_want = (1.0, 1.9889, 2.9628, 3.8997, 4.7939, 3.225, 2.4103, 1.6217)
    e7_got = pf_dimension_vector(e7_graph())
    e8_got = pf_dimension_vector(e8_graph())
    ok = all(abs(g - w) <= 5e-4 * abs(w) for g, w in zip(e7_got, e7_want))
    ok = ok and all(abs(g - w) <= 5e-3 * abs(w)
                    for g, w in zip(e8_got, e8_want))
    assert report(4, "exceptional dimension vectors match their reference "
                     "values (relative 5e-4 / 5e-3)", ok)


def test_acceptance_05_eigenvector_identities():
    ok = True
    count = 0
    for _, _, cat in catalogs():
        for name in sorted(cat.nimreps):
            out = ephi_checks(cat.nimreps[name])
            ok = (ok and out["ok"] and out["part1"] <= 1e-8
                  and out["part2"] <= 1e-8)
            count += 1
    assert report(5, "both eigenvector S-matrix identities hold to 1e-8 on "
                     "all %d catalog graphs" % count, ok)


def test_acceptance_06_recorded_lattices():
    ok = True
    for case, k, cat in catalogs():
        for rec in cat.lattices:
            res = ghj.build_lattice(cat, rec["target"])
            fixture = Poset([tuple(n) for n in rec["nodes"]],
                            [(tuple(rec["nodes"][c]), tuple(rec["nodes"][p]))
                             for c, p, _ in rec["covers"]])
            ok = ok and fixture.is_lattice()
            ok = ok and poset_isomorphic(res.poset, fixture)
    e7 = next(cat for case, _, cat in catalogs() if case == "E7")
    res = ghj.build_lattice(e7, "3/2 rho")
    ok = (ok and len(res.minimal_nodes()) == 12
          and len(res.maximal_nodes()) == 4)
    for k, target in ((6, "1 rho_0"), (10, "2 rho_0")):
        cat = next(c for case, kk, c in catalogs()
                   if case == "D" and kk == k)
        res = ghj.build_lattice(cat, target)
        ok = ok and len(res.nodes) == 6 and res.covers == []
    assert report(6, "every recorded intermediate diagram is a lattice, "
                     "matches its fixture, and the headline shapes are "
                     "12/4 and twice 6 isolated", ok)


def test_acceptance_07_wall_bounds():
    ok = True
    for _, _, cat in catalogs():
        for rec in cat.lattices:
            out = ghj.wall_check(cat, rec["target"])
            ok = (ok and out["ok"] and out["n_minimal"] < out["dim"]
                  and out["n_maximal"] < out["dim"])
    e7 = next(cat for case, _, cat in catalogs() if case == "E7")
    out = ghj.wall_check(e7, "3/2 rho")
    ok = ok and out["dim"] == 76 and out["n_minimal"] == 12
    assert report(7, "strict counting bounds hold on every recorded "
                     "lattice; the largest case has 12 minimal elements "
                     "against dimension 76", ok)


def test_acceptance_08_single_counting_violation():
    violations = []
    for case, k, cat in catalogs():
        for rec in cat.lattices:
            out = ghj.gag_check(cat, rec["target"])
            if out["violated"]:
                violations.append(("%s_%d" % (cat.case, cat.k),
                                   rec["target"]))
    e7 = next(cat for case, _, cat in catalogs() if case == "E7")
    out = ghj.gag_check(e7, "3/2 rho")
    ok = (out["distinct"] == 9 and out["automorphisms"] == 1
          and out["minimal_classes"] == 12 and out["violated"]
          and violations == [("E7_16", "rho a_{3/2}")])
    assert report(8, "exactly one recorded case beats the class-counting "
                     "bound: 12 minimal classes against 9 distinct "
                     "sectors", ok)


def test_acceptance_09_group_corpus():
    start = time.monotonic()
    corpus = ga.corpus_groups()
    ok = all(g.order <= 60 for g in corpus)
    ok = ok and all(ga.lemma_es_check(g)["ok"] for g in corpus)
    solvable = ga.solvable_corpus(48)
    for group in solvable:
        vectors = ga.mod2_witnesses(group)
        ok = ok and ga.linearly_independent(vectors)
    pairs = ga.random_subgroup_pairs(500)
    ok = ok and all(
        ga.relative_wall_check(g, h, with_witnesses=False)["ok"]
        for g, h in pairs)
    ok = ok and all(ga.strict_ag_check(g)["ok"] for g in solvable)
    elapsed = time.monotonic() - start
    ok = ok and elapsed < 120.0
    assert report(9, "averaging identity, witness families, 500 relative "
                     "bounds, and class-counting bounds all hold on the "
                     "group corpus (%.1fs)" % elapsed, ok)


def test_acceptance_10_enumeration_matches_records():
    ok = True
    checked = 0
    for case, k, cat in catalogs():
        for rec in cat.lattices:
            if not rec["enumerable"] or cat.k < 5:
                continue
            target = rec["target"]
            pairs = ghj.enumerate_pairs(cat, target)
            nodes = [(ghj.normalize_name(cat, l), ghj.normalize_name(cat, r))
                     for l, r in rec["nodes"]]
            ok = ok and set(nodes) <= set(pairs)
            classes = ghj.pair_classes(cat, pairs)
            ok = ok and len(classes) == len(nodes)
            checked += 1
    assert report(10, "pair enumeration reproduces all %d enumerable "
                      "records up to the recorded equivalences" % checked, ok)
