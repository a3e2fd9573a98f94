"""Builders for the bundled sector catalogs.

Each catalog is a plain dict (serialised to ``data/<case>_<k>.json``)
holding the irreducible sector names with their dimensions, the fusion
graphs they live on, a curated relation table for products the graphs
alone cannot produce, the pair-equivalence generators, and the recorded
intermediate-subfactor lattices with per-edge witnesses where a
composition witness exists.

Dimensions are never copied from quoted decimals: every dimension is
recomputed here from quantum integers and Perron-Frobenius data, and
every recorded relation is checked for multiplicativity before the
catalog is written.  A failed assertion means a transcription error.
"""

import json
import os

import numpy as np

from .fusion import format_label
from .fusion import make_level
from .nimrep import a_graph
from .nimrep import build_nimrep
from .nimrep import classify_graph
from .nimrep import d_graph
from .nimrep import e6_graph
from .nimrep import e7_graph
from .nimrep import e8_graph
from .nimrep import pf_dimension_vector

REL_TOL = 1e-6


def _spin(two_j):
    return format_label(two_j)


# ---------------------------------------------------------------------------
# graphs with catalog vertex names


def d_module_graph(k):
    """D_{k/2+2} as a level-k module: tail `j rho_0`, fork pair last.

    The fork vertices are written `rho_0 b` / `rho_0 b'` when 4 | k (the
    halved spin-k/4 column splits after the passage) and plain `b` / `b'`
    otherwise.
    """
    if k < 4 or k % 2:
        raise ValueError("D module needs even k >= 4")
    tail = ["rho_0"] + ["%s rho_0" % _spin(t) for t in range(1, k // 2)]
    forks = ["rho_0 b", "rho_0 b'"] if k % 4 == 0 else ["b", "b'"]
    return d_graph(k // 2 + 2, tail + forks)


def e6_module_graph(head="rho"):
    names = [head, head + " a_{1/2}", head + " a_1", head + " a_{9/2}",
             head + " a_5", head + " b_0"]
    return e6_graph(names)


def e7_module_graph(head="rho"):
    names = [head, head + " a_{1/2}", head + " a_1", head + " a_{3/2}",
             "b_1", "b_1'", "b_2"]
    return e7_graph(names)


def e8_module_graph(head="rho"):
    names = [head, head + " a_{1/2}", head + " a_1", head + " a_{3/2}",
             head + " a_2", head + " b_3", head + " b_3'", head + " b_4"]
    return e8_graph(names)


def e6_dual_graph():
    return e6_graph(["x", "y", "a_{1/2} bar rho_0 rho", "a_5 y", "a_5 x",
                     "bar rho_0 rho"])


def e7_dual_graph(prefix=""):
    names = [prefix + "rho_1", prefix + "rho_1 a_{1/2}",
             prefix + "rho_1 a_1", prefix + "rho_1 a_{3/2}",
             prefix + "hat b_1", prefix + "hat b_1'", prefix + "hat b_2"]
    return e7_graph(names)


def e8_dual_graph(prefix=""):
    names = [prefix + "rho_1", prefix + "rho_1 a_{1/2}",
             prefix + "rho_1 a_1", prefix + "rho_1 a_{3/2}",
             prefix + "rho_1 a_2", prefix + "rho_1 b_3",
             prefix + "rho_1 b_3'", prefix + "rho_1 b_4"]
    return e8_graph(names)


def graph_dim_table(graph, head_dim):
    """Vertex dimensions: Perron-Frobenius ratios times the head dim."""
    pf = pf_dimension_vector(graph)
    return {v: float(pf[i]) * head_dim for i, v in enumerate(graph.vertices)}


# ---------------------------------------------------------------------------
# catalog assembly helpers


def _new(case, k):
    return {
        "case": case,
        "k": k,
        "sectors": {},
        "aliases": {},
        "graphs": [],
        "right_endpoints": [],
        "relations": [],
        "automorphisms": [],
        "dual_automorphisms": [],
        "lattices": [],
    }


def _edges(graph):
    adj = graph.adjacency
    n = adj.shape[0]
    return [[i, j] for i in range(n) for j in range(i + 1, n) if adj[i, j]]


def _add_sector(cat, name, dim):
    old = cat["sectors"].get(name)
    if old is not None and abs(old - dim) > REL_TOL * max(1.0, dim):
        raise AssertionError("conflicting dims for %r: %r vs %r"
                             % (name, old, dim))
    cat["sectors"].setdefault(name, float(dim))


def _add_graph(cat, name, graph, side, head_dim, right_action=True,
               left_action=None):
    """Record a fusion graph.

    ``right_action`` marks whether spin columns of the nimrep give the
    products [v . a_mu] for vertices v of this graph; ``left_action``
    marks the mirrored products [a_mu . v] (only meaningful for graphs
    recorded on the right side of a pair).  Catalogs with a twisted
    module (the six-vertex branch case) switch these off and record the
    chiral columns as explicit relations instead.
    """
    classify_graph(graph.adjacency)
    build_nimrep(graph, cat["k"])  # integrality + truncation fail loudly
    for v, d in graph_dim_table(graph, head_dim).items():
        _add_sector(cat, v, d)
    if left_action is None:
        left_action = side == "right"
    cat["graphs"].append({"name": name, "side": side,
                          "vertices": list(graph.vertices),
                          "edges": _edges(graph),
                          "right_action": bool(right_action),
                          "left_action": bool(left_action)})
    return graph


def _rel(cat, left, right, *result):
    cat["relations"].append({"left": left, "right": right,
                             "result": list(result)})


def _lat(cat, target, caption, nodes, covers, enumerable):
    cat["lattices"].append({"target": target, "caption": caption,
                            "nodes": [list(n) for n in nodes],
                            "covers": [list(c) for c in covers],
                            "enumerable": bool(enumerable)})


def _auto(cat, name, kind, left_map=None, right_map=None, targets=None):
    entry = {"name": name, "kind": kind,
             "left_map": dict(left_map or {}),
             "right_map": dict(right_map or {})}
    if targets is not None:
        entry["targets"] = list(targets)
    cat["automorphisms"].append(entry)


def _spin_flip(k):
    return {_spin(t): _spin(k - t) for t in range(k + 1)}


def _perm_map(graph, k):
    """Vertex permutation induced by the top action matrix M_{k/2}."""
    nim = build_nimrep(graph, k)
    top = nim.matrices[k]
    n = len(graph.vertices)
    if not (np.array_equal(top @ top, np.eye(n, dtype=int))
            and np.array_equal(top.sum(axis=0), np.ones(n, dtype=int))):
        raise AssertionError("top action matrix of %s is not an involutive "
                             "permutation" % graph.name)
    out = {}
    for j, v in enumerate(graph.vertices):
        i = int(np.nonzero(top[:, j])[0][0])
        out[v] = graph.vertices[i]
    return out


def _identity_map(names):
    return {n: n for n in names}


def _check_catalog(cat):
    """Dimension sanity for every recorded relation and lattice."""
    k = cat["k"]
    ring = make_level(k)

    def dim(name):
        while name in cat["aliases"]:
            name = cat["aliases"][name]
        if name in cat["sectors"]:
            return cat["sectors"][name]
        return float(ring.qdim(_two_j(name, k)))

    for rel in cat["relations"]:
        lhs = dim(rel["left"]) * dim(rel["right"])
        rhs = sum(dim(r) for r in rel["result"])
        if abs(lhs - rhs) > REL_TOL * max(1.0, abs(lhs)):
            raise AssertionError("relation %r * %r -> %r violates "
                                 "multiplicativity: %.9f vs %.9f"
                                 % (rel["left"], rel["right"],
                                    rel["result"], lhs, rhs))
    for lat in cat["lattices"]:
        target = lat["target"]
        target = cat["aliases"].get(target, target)
        dt = dim(target)
        for left, right in lat["nodes"]:
            prod = dim(left) * dim(right)
            if abs(prod - dt) > REL_TOL * max(1.0, dt):
                raise AssertionError(
                    "pair (%r, %r) of %r has dim %.9f != %.9f"
                    % (left, right, target, prod, dt))
            if not (1.0 + 1e-9 < dim(left) < dt - 1e-9 * dt):
                raise AssertionError(
                    "pair (%r, %r) of %r is not a proper passage"
                    % (left, right, target))
        seen = set(map(tuple, (tuple(n) for n in lat["nodes"])))
        if len(seen) != len(lat["nodes"]):
            raise AssertionError("duplicate nodes in %r" % target)
        for child, parent, _w in lat["covers"]:
            if not (0 <= child < len(lat["nodes"])
                    and 0 <= parent < len(lat["nodes"])):
                raise AssertionError("cover index out of range in %r"
                                     % target)
    for name in cat["right_endpoints"]:
        if name not in cat["sectors"]:
            raise AssertionError("unknown right endpoint %r" % name)
    return cat


def _two_j(name, k):
    from .fusion import parse_label
    two_j = parse_label(name)
    if two_j > k:
        raise ValueError("label %r above level %d" % (name, k))
    return two_j


# ---------------------------------------------------------------------------
# type A catalogs (ambient targets; halved passage recorded at k = 4, 6, 8)


def synth_a(k):
    """Bare type-A catalog: ambient spins only, no recorded passages."""
    cat = _new("A", k)
    _auto(cat, "g_amb", "equivalence", left_map=_spin_flip(k),
          right_map={})
    cat["dual_automorphisms"] = ["0", _spin(k)]
    return _check_catalog(cat)


def build_a4():
    k = 4
    cat = _new("A", k)
    dmod = d_module_graph(k)
    _add_graph(cat, "passage", dmod, "left", np.sqrt(2.0))
    ring = make_level(k)
    _add_sector(cat, "bar rho_0", np.sqrt(2.0))
    _rel(cat, "rho_0", "bar rho_0", "0", "2")
    _rel(cat, "rho_0 b", "bar rho_0", "1")
    _rel(cat, "rho_0 b'", "bar rho_0", "1")
    assert abs(ring.qdim(2) - 2.0) < 1e-12
    perm = _perm_map(dmod, k)
    _auto(cat, "g_amb", "equivalence",
          left_map=dict(_spin_flip(k), **perm),
          right_map=_identity_map(["bar rho_0"]))
    _auto(cat, "g_conj", "conjugation-left",
          left_map=dict(_spin_flip(k), **perm), targets=["1"])
    cat["dual_automorphisms"] = ["0", "2"]
    cat["right_endpoints"] = ["bar rho_0"]
    _lat(cat, "1", "halved passage inside the middle ambient inclusion",
         [["rho_0 b", "bar rho_0"]], [], enumerable=False)
    return _check_catalog(cat)


def build_a6():
    k = 6
    cat = _new("A", k)
    dmod = d_module_graph(k)
    _add_graph(cat, "passage", dmod, "left", np.sqrt(2.0))
    _add_sector(cat, "bar rho_0", np.sqrt(2.0))
    _add_sector(cat, "bar b", cat["sectors"]["b"])
    _add_sector(cat, "bar b'", cat["sectors"]["b'"])
    _rel(cat, "rho_0", "bar rho_0", "0", "3")
    _rel(cat, "b", "bar rho_0", "3/2")
    _rel(cat, "b'", "bar rho_0", "3/2")
    _rel(cat, "rho_0", "bar b", "3/2")
    _rel(cat, "rho_0", "bar b'", "3/2")
    perm = _perm_map(dmod, k)
    right = _identity_map(["bar rho_0"])
    right.update({"bar b": "bar b'", "bar b'": "bar b"})
    _auto(cat, "g_amb", "equivalence",
          left_map=dict(_spin_flip(k), **perm), right_map=right)
    _auto(cat, "g_conj", "conjugation-left",
          left_map=dict(_spin_flip(k), **perm), targets=["3/2"])
    cat["dual_automorphisms"] = ["0", "3"]
    cat["right_endpoints"] = ["bar rho_0", "bar b", "bar b'"]
    _lat(cat, "3/2", "two incomparable passages through the halved system",
         [["b", "bar rho_0"], ["rho_0", "bar b"]], [], enumerable=True)
    return _check_catalog(cat)


def build_a8():
    k = 8
    cat = _new("A", k)
    dmod = d_module_graph(k)
    _add_graph(cat, "passage", dmod, "left", np.sqrt(2.0))
    ring = make_level(k)
    half_fork = float(ring.qdim(4)) / 2.0
    _add_sector(cat, "bar rho_0", np.sqrt(2.0))
    _add_sector(cat, "b", half_fork)
    _add_sector(cat, "b'", half_fork)
    _add_sector(cat, "b bar rho_0", half_fork * np.sqrt(2.0))
    _add_sector(cat, "b' bar rho_0", half_fork * np.sqrt(2.0))
    _rel(cat, "rho_0", "bar rho_0", "0", "4")
    _rel(cat, "rho_0", "b", "rho_0 b")
    _rel(cat, "rho_0", "b'", "rho_0 b'")
    _rel(cat, "rho_0 b", "bar rho_0", "2")
    _rel(cat, "rho_0 b'", "bar rho_0", "2")
    _rel(cat, "rho_0", "b bar rho_0", "2")
    _rel(cat, "rho_0", "b' bar rho_0", "2")
    perm = _perm_map(dmod, k)
    _auto(cat, "g_amb", "equivalence",
          left_map=dict(_spin_flip(k), **perm),
          right_map=_identity_map(["bar rho_0", "b bar rho_0",
                                   "b' bar rho_0"]))
    zl = {v: v for v in dmod.vertices[:-2]}
    zl.update({"rho_0 b": "rho_0 b'", "rho_0 b'": "rho_0 b"})
    _auto(cat, "z_dual", "equivalence", left_map=zl,
          right_map={"bar rho_0": "bar rho_0",
                     "b bar rho_0": "b' bar rho_0",
                     "b' bar rho_0": "b bar rho_0"})
    _auto(cat, "g_conj", "conjugation-left",
          left_map=dict(_spin_flip(k), **perm), targets=["2"])
    cat["dual_automorphisms"] = ["0", "4"]
    cat["right_endpoints"] = ["bar rho_0", "b bar rho_0", "b' bar rho_0"]
    _lat(cat, "2", "chain of two passages through the halved system",
         [["rho_0 b", "bar rho_0"], ["rho_0", "b bar rho_0"]],
         [[0, 1, "b"]], enumerable=True)
    return _check_catalog(cat)


# ---------------------------------------------------------------------------
# type D catalogs


def _d_common(cat, k):
    """Module graph, twist relations and the generator package."""
    dmod = d_module_graph(k)
    _add_graph(cat, "module", dmod, "left", np.sqrt(2.0))
    twist = "g~" if k % 4 == 0 else "g"
    _add_sector(cat, twist, 1.0)
    tail = list(dmod.vertices[:-2])
    fork, fork2 = dmod.vertices[-2], dmod.vertices[-1]
    _rel(cat, "rho_0", twist, "rho_0")
    _rel(cat, fork, twist, fork2)
    _rel(cat, fork2, twist, fork)
    cat["dual_automorphisms"] = ["a_0", twist]
    perm = _perm_map(dmod, k)
    return dmod, twist, tail, (fork, fork2), perm


def _chiral_name(two_j):
    label = _spin(two_j)
    return "a_{%s}" % label if "/" in label else "a_%s" % label


def _add_chiral(cat, k, two_j):
    ring = make_level(k)
    name = _chiral_name(two_j)
    _add_sector(cat, name, float(ring.qdim(two_j)))
    _add_sector(cat, "~" + name, float(ring.qdim(two_j)))
    return name, "~" + name


def _chiral_swap(cat):
    """Map each chiral sector to its opposite-chirality partner.

    Only names whose partner is itself recorded are swapped, so simple
    currents like a_5 (no twisted partner) stay out of the map.
    """
    out = {}
    for name in cat["sectors"]:
        base = name[1:] if name.startswith("~") else name
        if not (base.startswith("a_") or base.startswith("b_")):
            continue
        partner = base if name.startswith("~") else "~" + name
        if partner in cat["sectors"]:
            out[name] = partner
    return out


def build_d4():
    k = 4
    cat = _new("D", k)
    dmod, twist, tail, forks, perm = _d_common(cat, k)
    a, ta = _add_chiral(cat, k, 1)
    _auto(cat, "g_amb", "equivalence",
          left_map=dict(_spin_flip(k), **perm),
          right_map=_identity_map([a, ta, "rho_0"]))
    _auto(cat, "g_conj", "conjugation-left",
          left_map=dict(_spin_flip(k), **perm), targets=["1/2 rho_0"])
    _auto(cat, "z_conj", "conjugation-right",
          right_map=dict(_chiral_swap(cat), **{"rho_0": "rho_0"}),
          targets=["1/2 rho_0"])
    cat["right_endpoints"] = ["rho_0"]
    _lat(cat, "1/2 rho_0", "four isolated intermediates at the star point",
         [["1/2", "rho_0"], ["rho_0 b", a], ["rho_0 b", ta],
          ["rho_0", a]], [], enumerable=False)
    return _check_catalog(cat)


def build_d6():
    k = 6
    cat = _new("D", k)
    dmod, twist, tail, (b, b2), perm = _d_common(cat, k)
    a12, ta12 = _add_chiral(cat, k, 1)
    a1, ta1 = _add_chiral(cat, k, 2)
    amb = dict(_spin_flip(k), **perm)
    right = dict(_chiral_swap(cat))
    right.update({v: perm[v] for v in dmod.vertices})
    _auto(cat, "g_amb", "equivalence", left_map=amb, right_map=right)
    _auto(cat, "g_conj", "conjugation-left", left_map=amb,
          targets=["1/2 rho_0", "1 rho_0"])
    _auto(cat, "z_conj", "conjugation-right", right_map=dict(right),
          targets=["1/2 rho_0", "1 rho_0"])
    cat["right_endpoints"] = ["rho_0", "b", "b'"]
    _lat(cat, "1/2 rho_0", "two incomparable intermediates",
         [["1/2", "rho_0"], ["rho_0", a12]], [], enumerable=True)
    _lat(cat, "1 rho_0", "six isolated intermediates at the fork column",
         [["rho_0", a1], ["1/2", b], ["1/2", b2], [b, a12], [b, ta12],
          ["1", "rho_0"]], [], enumerable=True)
    return _check_catalog(cat)


def build_d8():
    k = 8
    cat = _new("D", k)
    dmod, twist, tail, (fb, fb2), perm = _d_common(cat, k)
    ring = make_level(k)
    a12, ta12 = _add_chiral(cat, k, 1)
    a1, ta1 = _add_chiral(cat, k, 2)
    a32, ta32 = _add_chiral(cat, k, 3)
    half = float(ring.qdim(4)) / 2.0
    _add_sector(cat, "b", half)
    _add_sector(cat, "b'", half)
    _rel(cat, "rho_0", "b", "rho_0 b")
    _rel(cat, "rho_0", "b'", "rho_0 b'")
    _rel(cat, "1/2 rho_0", "b", "3/2 rho_0")
    _rel(cat, "1/2 rho_0", "b'", "3/2 rho_0")
    amb = dict(_spin_flip(k), **perm)
    _auto(cat, "g_amb", "equivalence", left_map=amb,
          right_map=_identity_map(list(cat["sectors"])))
    zl = {v: v for v in tail}
    zl.update({fb: fb2, fb2: fb})
    zr = dict(_chiral_swap(cat))
    zr.update({"b": "b", "b'": "b'", "rho_0": "rho_0",
               fb: fb2, fb2: fb})
    _auto(cat, "z_dual", "equivalence", left_map=zl, right_map=zr)
    _auto(cat, "g_conj", "conjugation-left", left_map=amb,
          targets=["1 rho_0", "3/2 rho_0", "rho_0 b"])
    _auto(cat, "z_conj", "conjugation-right",
          right_map=dict(_chiral_swap(cat),
                         **{"b": "b", "b'": "b'", "rho_0": "rho_0"}),
          targets=["1 rho_0", "3/2 rho_0"])
    cat["right_endpoints"] = ["rho_0", "b", "b'", "rho_0 b", "rho_0 b'"]
    _lat(cat, "3/2 rho_0", "fork column with two short chains",
         [["1/2 rho_0", "b"], ["1/2 rho_0", "b'"], ["rho_0 b", a12],
          ["rho_0 b", ta12], ["1/2", "rho_0 b"], ["1/2", "rho_0 b'"],
          ["rho_0", a32], ["3/2", "rho_0"]],
         [[0, 6, None], [1, 6, None], [2, 6, None], [3, 6, None],
          [0, 4, "rho_0"], [1, 5, "rho_0"]],
         enumerable=True)
    _lat(cat, "1 rho_0", "two incomparable intermediates",
         [["1", "rho_0"], ["rho_0", a1]], [], enumerable=True)
    _lat(cat, "rho_0 b", "single intermediate under the fork",
         [["rho_0", "b"]], [], enumerable=True)
    return _check_catalog(cat)


def build_d10():
    k = 10
    cat = _new("D", k)
    dmod, twist, tail, (b, b2), perm = _d_common(cat, k)
    a12, ta12 = _add_chiral(cat, k, 1)
    a32, ta32 = _add_chiral(cat, k, 3)
    a2, ta2 = _add_chiral(cat, k, 4)
    e6copy = e6_module_graph("rho_2")
    d_rho6 = float(np.sqrt(1.0 + make_level(k).qdim(6)))
    _add_graph(cat, "exceptional", e6copy, "left", d_rho6,
               right_action=False)
    _add_sector(cat, "bar x", d_rho6)
    _add_sector(cat, "bar x a_5", d_rho6)
    _rel(cat, "rho_2", "bar x", "3/2 rho_0")
    _rel(cat, "rho_2", "bar x a_5", "3/2 rho_0")
    cat["aliases"]["rho"] = "rho_2"
    cat["aliases"]["bar x g"] = "bar x a_5"
    amb = dict(_spin_flip(k), **perm)
    amb.update(_perm_map(e6copy, k))
    right = dict(_chiral_swap(cat))
    right.update({v: perm[v] for v in dmod.vertices})
    right.update({"bar x": "bar x a_5", "bar x a_5": "bar x"})
    _auto(cat, "g_amb", "equivalence", left_map=amb, right_map=right)
    _auto(cat, "g_conj", "conjugation-left", left_map=amb,
          targets=["3/2 rho_0", "2 rho_0"])
    _auto(cat, "z_conj", "conjugation-right", right_map=dict(right),
          targets=["3/2 rho_0", "2 rho_0"])
    cat["right_endpoints"] = ["rho_0", "b", "b'", "bar x", "bar x a_5"]
    _lat(cat, "3/2 rho_0",
         "two exceptional passages under the plain chiral intermediate",
         [["rho_2", "bar x"], ["rho_2", "bar x a_5"], ["rho_0", a32],
          ["3/2", "rho_0"]],
         [[0, 2, None], [1, 2, None]], enumerable=True)
    _lat(cat, "2 rho_0", "six isolated intermediates at the fork column",
         [["rho_0", a2], ["1/2", b], ["1/2", b2], [b, a12], [b, ta12],
          ["2", "rho_0"]], [], enumerable=True)
    return _check_catalog(cat)


def build_d16():
    k = 16
    cat = _new("D", k)
    dmod, twist, tail, (fb, fb2), perm = _d_common(cat, k)
    ring = make_level(k)
    a12, ta12 = _add_chiral(cat, k, 1)
    a52, ta52 = _add_chiral(cat, k, 5)
    a72, ta72 = _add_chiral(cat, k, 7)
    half = float(ring.qdim(8)) / 2.0
    _add_sector(cat, "b", half)
    _add_sector(cat, "b'", half)
    _rel(cat, "rho_0", "b", "rho_0 b")
    _rel(cat, "rho_0", "b'", "rho_0 b'")
    _rel(cat, "1/2 rho_0", "b", "7/2 rho_0")
    _rel(cat, "1/2 rho_0", "b'", "7/2 rho_0")
    e7copy = e7_module_graph("rho_2")
    d_rho7 = float(np.sqrt(1.0 + ring.qdim(8) + ring.qdim(16)))
    _add_graph(cat, "exceptional", e7copy, "left", d_rho7)
    root2 = float(np.sqrt(2.0))
    _add_sector(cat, "bar rho_1", d_rho7 / root2)
    _add_sector(cat, "bar rho_1 g", d_rho7 / root2)
    _add_sector(cat, "bar hat b_2", cat["sectors"]["b_2"] / root2)
    _add_sector(cat, "bar hat b_2 g", cat["sectors"]["b_2"] / root2)
    _rel(cat, "rho_2", "bar hat b_2", "5/2 rho_0")
    _rel(cat, "rho_2", "bar hat b_2 g", "5/2 rho_0")
    _rel(cat, "b_2", "bar rho_1", "5/2 rho_0")
    _rel(cat, "b_2", "bar rho_1 g", "5/2 rho_0")
    cat["aliases"]["rho"] = "rho_2"
    amb = dict(_spin_flip(k), **perm)
    amb.update(_perm_map(e7copy, k))
    _auto(cat, "g_amb", "equivalence", left_map=amb,
          right_map=_identity_map(list(cat["sectors"])))
    zl = {v: v for v in tail}
    zl.update({fb: fb2, fb2: fb})
    zr = dict(_chiral_swap(cat))
    zr.update({"b": "b", "b'": "b'", "rho_0": "rho_0",
               fb: fb2, fb2: fb})
    _auto(cat, "z_dual", "equivalence", left_map=zl, right_map=zr)
    _auto(cat, "g_conj", "conjugation-left", left_map=amb,
          targets=["5/2 rho_0", "7/2 rho_0"])
    _auto(cat, "z_conj", "conjugation-right",
          right_map=dict(_chiral_swap(cat),
                         **{"b": "b", "b'": "b'", "rho_0": "rho_0"}),
          targets=["5/2 rho_0", "7/2 rho_0"])
    cat["right_endpoints"] = ["rho_0", "b", "b'", "rho_0 b", "rho_0 b'",
                              "bar rho_1", "bar rho_1 g", "bar hat b_2",
                              "bar hat b_2 g"]
    _lat(cat, "5/2 rho_0",
         "four exceptional passages under the plain chiral intermediate",
         [["rho_2", "bar hat b_2"], ["rho_2", "bar hat b_2 g"],
          ["b_2", "bar rho_1"], ["b_2", "bar rho_1 g"],
          ["rho_0", a52], ["5/2", "rho_0"]],
         [[0, 4, None], [1, 4, None], [2, 4, None], [3, 4, None]],
         enumerable=True)
    _lat(cat, "7/2 rho_0", "fork column with two short chains",
         [["1/2 rho_0", "b"], ["1/2 rho_0", "b'"], ["rho_0 b", a12],
          ["rho_0 b", ta12], ["1/2", "rho_0 b"], ["1/2", "rho_0 b'"],
          ["rho_0", a72], ["7/2", "rho_0"]],
         [[0, 6, None], [1, 6, None], [2, 6, None], [3, 6, None],
          [0, 4, "rho_0"], [1, 5, "rho_0"]],
         enumerable=True)
    return _check_catalog(cat)


def synth_d(k):
    """Generic even-level type D catalog with the fork-column lattice."""
    if k < 6 or k % 2:
        raise ValueError("generic D catalog needs even k >= 6")
    cat = _new("D", k)
    dmod, twist, tail, (fb, fb2), perm = _d_common(cat, k)
    a12, ta12 = _add_chiral(cat, k, 1)
    atop, tatop = _add_chiral(cat, k, (k - 2) // 2)
    top = "%s rho_0" % _spin((k - 2) // 2)
    amb = dict(_spin_flip(k), **perm)
    if k % 4 == 0:
        ring = make_level(k)
        half = float(ring.qdim(k // 2)) / 2.0
        _add_sector(cat, "b", half)
        _add_sector(cat, "b'", half)
        _rel(cat, "rho_0", "b", "rho_0 b")
        _rel(cat, "rho_0", "b'", "rho_0 b'")
        _rel(cat, "1/2 rho_0", "b", top)
        _rel(cat, "1/2 rho_0", "b'", top)
        _auto(cat, "g_amb", "equivalence", left_map=amb,
              right_map=_identity_map(list(cat["sectors"])))
        zl = {v: v for v in tail}
        zl.update({fb: fb2, fb2: fb})
        zr = dict(_chiral_swap(cat))
        zr.update({"b": "b", "b'": "b'", "rho_0": "rho_0",
                   fb: fb2, fb2: fb})
        _auto(cat, "z_dual", "equivalence", left_map=zl, right_map=zr)
        _auto(cat, "g_conj", "conjugation-left", left_map=amb,
              targets=[top])
        _auto(cat, "z_conj", "conjugation-right",
              right_map=dict(_chiral_swap(cat),
                             **{"b": "b", "b'": "b'", "rho_0": "rho_0"}),
              targets=[top])
        cat["right_endpoints"] = ["rho_0", "b", "b'", "rho_0 b",
                                  "rho_0 b'"]
        _lat(cat, top, "fork column with two short chains",
             [["1/2 rho_0", "b"], ["1/2 rho_0", "b'"], ["rho_0 b", a12],
              ["rho_0 b", ta12], ["1/2", "rho_0 b"], ["1/2", "rho_0 b'"],
              ["rho_0", atop], [_spin((k - 2) // 2), "rho_0"]],
             [[0, 6, None], [1, 6, None], [2, 6, None], [3, 6, None],
              [0, 4, "rho_0"], [1, 5, "rho_0"]],
             enumerable=True)
    else:
        right = dict(_chiral_swap(cat))
        right.update({v: perm[v] for v in dmod.vertices})
        _auto(cat, "g_amb", "equivalence", left_map=amb, right_map=right)
        _auto(cat, "g_conj", "conjugation-left", left_map=amb,
              targets=[top])
        _auto(cat, "z_conj", "conjugation-right", right_map=dict(right),
              targets=[top])
        cat["right_endpoints"] = ["rho_0", "b", "b'"]
        _lat(cat, top, "six isolated intermediates at the fork column",
             [["rho_0", atop], ["1/2", fb], ["1/2", fb2], [fb, a12],
              [fb, ta12], [_spin((k - 2) // 2), "rho_0"]],
             [], enumerable=True)
    return _check_catalog(cat)


# ---------------------------------------------------------------------------
# exceptional catalogs


def build_e6():
    k = 10
    cat = _new("E6", k)
    ring = make_level(k)
    d_rho = float(np.sqrt(1.0 + ring.qdim(6)))
    emod = e6_module_graph()
    _add_graph(cat, "module", emod, "left", d_rho, right_action=False)
    dmod = d_module_graph(k)
    _add_graph(cat, "passage", dmod, "left", np.sqrt(2.0))
    edual = e6_dual_graph()
    _add_graph(cat, "dual", edual, "right", d_rho, right_action=False,
               left_action=True)
    for two_j in (1, 2, 9):
        _add_chiral(cat, k, two_j)
    _add_sector(cat, "a_5", 1.0)
    _add_sector(cat, "b_0", float(np.sqrt(2.0)))

    cat["aliases"].update({
        "1/2 rho": "rho a_{1/2}", "1 rho": "rho a_1",
        "9/2 rho": "rho a_{9/2}", "5 rho": "rho a_5",
    })

    # module column actions the graphs cannot provide (both chiralities
    # act the same way on the module vertices)
    _rel(cat, "rho", "b_0", "rho b_0")
    _rel(cat, "rho a_5", "b_0", "rho b_0")
    for a, ta, res in (("a_{1/2}", "~a_{1/2}", "rho a_{1/2}"),
                       ("a_1", "~a_1", "rho a_1"),
                       ("a_{9/2}", "~a_{9/2}", "rho a_{9/2}")):
        _rel(cat, "rho", a, res)
        _rel(cat, "rho", ta, res)
    _rel(cat, "rho b_0", "a_{1/2}", "rho a_1")
    _rel(cat, "rho b_0", "~a_{1/2}", "rho a_1")
    _rel(cat, "rho a_{1/2}", "b_0", "rho a_1")
    _rel(cat, "rho a_{9/2}", "b_0", "rho a_1")
    _rel(cat, "b_0", "a_{1/2}", "a_1")
    _rel(cat, "b_0", "~a_{1/2}", "~a_1")
    _rel(cat, "a_{1/2}", "b_0", "a_1")
    _rel(cat, "~a_{1/2}", "b_0", "~a_1")
    _rel(cat, "1/2 rho_0", "x", "rho a_1")
    _rel(cat, "rho_0", "y", "rho a_1")
    _rel(cat, "rho_0", "x", "rho b_0")
    # a_5 twist action on the module and dual vertices
    _rel(cat, "rho", "a_5", "rho a_5")
    _rel(cat, "rho a_5", "a_5", "rho")
    _rel(cat, "rho a_{1/2}", "a_5", "rho a_{9/2}")
    _rel(cat, "rho a_{9/2}", "a_5", "rho a_{1/2}")
    _rel(cat, "rho a_1", "a_5", "rho a_1")
    _rel(cat, "rho b_0", "a_5", "rho b_0")
    _rel(cat, "rho_0", "a_5", "rho_0")
    _rel(cat, "1/2 rho_0", "a_5", "1/2 rho_0")

    amb = dict(_spin_flip(k), **_perm_map(emod, k))
    amb.update(_perm_map(dmod, k))
    right = {"rho": "rho a_5", "rho a_5": "rho", "rho b_0": "rho b_0",
             "b_0": "b_0", "x": "a_5 x", "a_5 x": "x",
             "y": "a_5 y", "a_5 y": "y",
             "bar rho_0 rho": "bar rho_0 rho"}
    _auto(cat, "g_amb", "equivalence", left_map=amb, right_map=right)
    _auto(cat, "g_conj", "conjugation-left", left_map=amb,
          targets=["rho a_1", "rho b_0"])
    swap = _chiral_swap(cat)
    swap.update({"b_0": "b_0"})
    _auto(cat, "z_conj", "conjugation-right", right_map=swap,
          targets=["rho a_1", "rho b_0"])
    cat["dual_automorphisms"] = ["a_0", "a_5"]
    cat["right_endpoints"] = ["rho", "rho a_5", "rho b_0", "x", "a_5 x",
                              "b_0"]

    _lat(cat, "rho a_{1/2}", "three isolated intermediates",
         [["1/2", "rho"], ["rho", "a_{1/2}"], ["rho", "~a_{1/2}"]],
         [], enumerable=True)
    _lat(cat, "rho a_{9/2}",
         "twisted copy of the half-spin picture (compose with a_5)",
         [["9/2", "rho"], ["rho", "a_{9/2}"], ["rho", "~a_{9/2}"]],
         [], enumerable=True)
    _lat(cat, "rho b_0", "single chain through the branch sector",
         [["rho", "b_0"], ["rho_0", "x"]],
         [[0, 1, None]], enumerable=True)
    _lat(cat, "rho a_1", "spin-one picture with the dual-graph passage",
         [["rho b_0", "a_{1/2}"], ["rho a_{1/2}", "b_0"],
          ["1/2 rho_0", "x"], ["rho b_0", "~a_{1/2}"], ["rho", "a_1"],
          ["rho", "~a_1"], ["1/2", "rho b_0"], ["rho_0", "y"],
          ["1", "rho"], ["4", "rho"]],
         [[0, 4, "b_0"], [1, 4, "a_{1/2}"], [1, 6, "rho"],
          [1, 5, "~a_{1/2}"], [2, 6, "rho_0"], [2, 7, "a_{1/2}"],
          [3, 5, "b_0"]],
         enumerable=True)
    _lat(cat, "rho", "no proper intermediate", [], [], enumerable=True)
    _lat(cat, "rho a_5", "no proper intermediate", [], [],
         enumerable=True)
    return _check_catalog(cat)


def _dual_tilde_aliases(cat, dual_graph):
    """For a dual-graph pair v / `g v`, the opposite chirality suffix
    lands on the partner vertex: `rho_1 ~a_x` means `g rho_1 a_x`."""
    for v in dual_graph.vertices:
        parts = v.split(" ")
        if len(parts) < 2:
            continue
        head, suffix = parts[0], " ".join(parts[1:])
        if not (suffix.startswith("a_") or suffix.startswith("b_")):
            continue
        cat["aliases"]["%s ~%s" % (head, suffix)] = "g %s %s" % (head,
                                                                 suffix)
        cat["aliases"]["g %s ~%s" % (head, suffix)] = "%s %s" % (head,
                                                                 suffix)


def build_e7():
    k = 16
    cat = _new("E7", k)
    ring = make_level(k)
    d_rho = float(np.sqrt(1.0 + ring.qdim(8) + ring.qdim(16)))
    root2 = float(np.sqrt(2.0))
    emod = e7_module_graph()
    _add_graph(cat, "module", emod, "left", d_rho)
    dmod = d_module_graph(k)
    _add_graph(cat, "passage", dmod, "left", root2)
    edual = e7_dual_graph()
    edual_g = e7_dual_graph("g ")
    _add_graph(cat, "dual", edual, "right", d_rho / root2)
    _add_graph(cat, "dual-twisted", edual_g, "right", d_rho / root2)
    for two_j in (1, 2, 3):
        _add_chiral(cat, k, two_j)
    _add_sector(cat, "tau", cat["sectors"]["b_1"] / d_rho)
    _add_sector(cat, "delta", float(ring.qdim(8) - ring.qdim(2)))
    _add_sector(cat, "g", 1.0)

    cat["aliases"].update({
        "1/2 rho": "rho a_{1/2}", "1 rho": "rho a_1",
        "3/2 rho": "rho a_{3/2}", "g g rho_1": "rho_1",
    })
    _dual_tilde_aliases(cat, edual)

    for p in ("", "g "):
        _rel(cat, "rho_0", p + "rho_1", "rho")
        _rel(cat, "rho_0", p + "hat b_1", "b_1")
        _rel(cat, "rho_0", p + "hat b_1'", "b_1'")
        _rel(cat, "rho_0", p + "hat b_2", "b_2")
        _rel(cat, "1/2 rho_0", p + "hat b_2", "b_1")
        _rel(cat, "1 rho_0", p + "hat b_2", "rho a_{3/2}")
        _rel(cat, "1/2 rho_0", p + "hat b_1'", "rho a_{3/2}")
        _rel(cat, "3/2 rho_0", p + "rho_1", "rho a_{3/2}")
        _rel(cat, "rho_0 b", p + "hat b_2", "rho a_{3/2}")
        _rel(cat, "rho_0 b'", p + "hat b_2", "rho a_{3/2}")
    _rel(cat, "rho", "tau", "b_1")
    _rel(cat, "b_2", "delta", "rho a_{3/2}")

    amb = dict(_spin_flip(k), **_perm_map(emod, k))
    amb.update(_perm_map(dmod, k))
    _auto(cat, "g_amb", "equivalence", left_map=amb,
          right_map=_identity_map(list(cat["sectors"])))
    tail = list(dmod.vertices[:-2])
    zl = {v: v for v in tail}
    zl.update({"rho_0 b": "rho_0 b'", "rho_0 b'": "rho_0 b"})
    zr = dict(_chiral_swap(cat))
    for v, gv in zip(edual.vertices, edual_g.vertices):
        zr[v] = gv
        zr[gv] = v
    _auto(cat, "z_dual", "equivalence", left_map=zl, right_map=zr)
    _auto(cat, "g_conj", "conjugation-left", left_map=amb,
          targets=["rho", "rho a_{1/2}", "rho a_1", "rho a_{3/2}",
                   "b_1", "b_1'", "b_2"])
    cat["dual_automorphisms"] = ["a_0"]
    cat["right_endpoints"] = ["rho", "b_2", "b_1'", "rho_1", "g rho_1",
                              "hat b_1", "g hat b_1", "hat b_1'",
                              "g hat b_1'", "hat b_2", "g hat b_2"]

    _lat(cat, "rho", "single intermediate", [["rho_0", "rho_1"]], [],
         enumerable=True)
    _lat(cat, "rho a_{1/2}", "half-spin picture",
         [["rho", "a_{1/2}"], ["rho", "~a_{1/2}"], ["1/2 rho_0", "rho_1"],
          ["rho_0", "rho_1 ~a_{1/2}"], ["1/2", "rho"]],
         [[0, 3, "g rho_1"], [1, 3, "rho_1"], [2, 3, "~a_{1/2}"],
          [2, 4, "rho_0"]],
         enumerable=True)
    _lat(cat, "rho a_1", "spin-one picture",
         [["rho", "a_1"], ["rho", "~a_1"], ["1 rho_0", "rho_1"],
          ["rho_0", "rho_1 ~a_1"], ["1", "rho"]],
         [[0, 3, "g rho_1"], [1, 3, "rho_1"], [2, 3, "~a_1"],
          [2, 4, "rho_0"]],
         enumerable=True)
    _lat(cat, "b_1'", "single intermediate", [["rho_0", "hat b_1'"]], [],
         enumerable=True)
    _lat(cat, "b_2", "single intermediate", [["rho_0", "hat b_2"]], [],
         enumerable=True)
    _lat(cat, "b_1", "five intermediates below the passage top",
         [["rho", "tau"], ["1/2 rho_0", "hat b_2"], ["b_2", "a_{1/2}"],
          ["b_2", "~a_{1/2}"], ["rho_0", "hat b_1"], ["1/2", "b_2"]],
         [[0, 4, None], [1, 4, "a_{1/2}"], [2, 4, "hat b_2"],
          [3, 4, "g hat b_2"], [1, 5, "rho_0"]],
         enumerable=True)
    _lat(cat, "rho a_{3/2}", "twelve minimal intermediates, four maximal",
         [["1 rho_0", "hat b_2"], ["1/2 rho_0", "hat b_1'"],
          ["rho_0 b", "g hat b_2"], ["rho_0 b", "hat b_2"],
          ["rho", "a_{3/2}"], ["rho", "~a_{3/2}"], ["3/2 rho_0", "rho_1"],
          ["b_2", "delta"], ["b_1'", "a_{1/2}"], ["b_1'", "~a_{1/2}"],
          ["b_2", "a_1"], ["b_2", "~a_1"],
          ["rho_0", "rho_1 a_{3/2}"], ["1", "b_2"], ["1/2", "b_1'"],
          ["3/2", "rho"]],
         [[0, 12, "a_1"], [1, 12, "a_{1/2}"], [2, 12, None],
          [3, 12, None], [4, 12, "rho_1"], [5, 12, "g rho_1"],
          [6, 12, "a_{3/2}"], [7, 12, None], [8, 12, "hat b_1'"],
          [9, 12, "g hat b_1'"], [10, 12, "hat b_2"],
          [11, 12, "g hat b_2"],
          [0, 13, "rho_0"], [1, 14, "rho_0"], [6, 15, "rho_0"]],
         enumerable=True)
    return _check_catalog(cat)


def build_e8():
    k = 28
    cat = _new("E8", k)
    ring = make_level(k)
    d_rho = float(np.sqrt(1.0 + ring.qdim(10) + ring.qdim(18)
                          + ring.qdim(28)))
    root2 = float(np.sqrt(2.0))
    emod = e8_module_graph()
    _add_graph(cat, "module", emod, "left", d_rho)
    dmod = d_module_graph(k)
    _add_graph(cat, "passage", dmod, "left", root2)
    edual = e8_dual_graph()
    edual_g = e8_dual_graph("g ")
    _add_graph(cat, "dual", edual, "right", d_rho / root2)
    _add_graph(cat, "dual-twisted", edual_g, "right", d_rho / root2)
    for two_j in (1, 2, 3, 4):
        _add_chiral(cat, k, two_j)
    q = lambda t: float(ring.qdim(t))
    b4 = q(4) / q(2)
    b3 = q(1) * b4
    b3p = q(3) / b4
    assert abs(b3 + b3p - q(5)) < 1e-9
    for name, dim in (("b_4", b4), ("b_3", b3), ("b_3'", b3p),
                      ("~b_3", b3), ("~b_3'", b3p)):
        _add_sector(cat, name, dim)
    _add_sector(cat, "~a_{1/2} b_3'", q(1) * b3p)
    _add_sector(cat, "a_{1/2} ~b_3'", q(1) * b3p)
    _add_sector(cat, "b", q(k // 2) / 2.0)
    _add_sector(cat, "b'", q(k // 2) / 2.0)
    _add_sector(cat, "g", 1.0)

    cat["aliases"].update({
        "1/2 rho": "rho a_{1/2}", "1 rho": "rho a_1",
        "3/2 rho": "rho a_{3/2}", "2 rho": "rho a_2",
        "g g rho_1": "rho_1",
    })
    _dual_tilde_aliases(cat, edual)

    for p in ("", "g "):
        _rel(cat, "rho_0", p + "rho_1", "rho")
        _rel(cat, "rho_0 b", p + "rho_1", "rho a_2")
        _rel(cat, "rho_0 b'", p + "rho_1", "rho a_2")
    _rel(cat, "rho_0", "b", "rho_0 b")
    _rel(cat, "rho_0", "b'", "rho_0 b'")
    # module-column products of the chiral branch sectors
    _rel(cat, "rho", "b_4", "rho b_4")
    _rel(cat, "rho", "b_3", "rho b_3")
    _rel(cat, "rho", "b_3'", "rho b_3'")
    _rel(cat, "rho", "~b_3", "rho b_3")
    _rel(cat, "rho", "~b_3'", "rho b_3'")
    _rel(cat, "rho a_1", "b_4", "rho a_2")
    _rel(cat, "rho a_{1/2}", "b_4", "rho b_3")
    _rel(cat, "rho a_{1/2}", "b_3'", "rho a_2")
    _rel(cat, "rho a_{1/2}", "~b_3'", "rho a_2")
    _rel(cat, "rho b_4", "b_3'", "rho a_{3/2}")
    _rel(cat, "rho b_4", "~b_3'", "rho a_{3/2}")
    _rel(cat, "rho b_3'", "b_4", "rho a_{3/2}")
    # chiral system products used by inclusion witnesses
    _rel(cat, "a_1", "b_4", "a_2")
    _rel(cat, "~a_1", "b_4", "~a_2")
    _rel(cat, "b_4", "a_1", "a_2")
    _rel(cat, "b_4", "~a_1", "~a_2")
    _rel(cat, "a_{1/2}", "b_4", "b_3")
    _rel(cat, "b_4", "a_{1/2}", "b_3")
    _rel(cat, "b_4", "~a_{1/2}", "~b_3")
    _rel(cat, "~a_{1/2}", "b_4", "~b_3")
    _rel(cat, "a_{1/2}", "b_3'", "a_2")
    _rel(cat, "b_3'", "a_{1/2}", "a_2")
    _rel(cat, "~a_{1/2}", "~b_3'", "~a_2")
    _rel(cat, "~b_3'", "~a_{1/2}", "~a_2")
    # opposite-chirality branch products stay irreducible
    _rel(cat, "b_3'", "~a_{1/2}", "~a_{1/2} b_3'")
    _rel(cat, "~b_3'", "a_{1/2}", "a_{1/2} ~b_3'")
    _rel(cat, "b_4", "b_3'", "a_{3/2}")
    _rel(cat, "b_3'", "b_4", "a_{3/2}")
    _rel(cat, "~b_3'", "b_4", "~a_{3/2}")
    _rel(cat, "b_4", "~b_3'", "~a_{3/2}")
    # half-spin column of the dual tail vertices
    for p, pp in (("", ""), ("g ", "g ")):
        _rel(cat, p + "rho_1 a_{1/2}", "b_3'", pp + "rho_1 a_2")
    _rel(cat, "rho_1 a_{1/2}", "~b_3'", "g rho_1 a_2")
    _rel(cat, "g rho_1 a_{1/2}", "~b_3'", "rho_1 a_2")

    amb = dict(_spin_flip(k), **_perm_map(emod, k))
    amb.update(_perm_map(dmod, k))
    _auto(cat, "g_amb", "equivalence", left_map=amb,
          right_map=_identity_map(list(cat["sectors"])))
    tail = list(dmod.vertices[:-2])
    zl = {v: v for v in tail}
    zl.update({"rho_0 b": "rho_0 b'", "rho_0 b'": "rho_0 b"})
    zr = dict(_chiral_swap(cat))
    zr.update({"b_3": "~b_3", "~b_3": "b_3", "b_3'": "~b_3'",
               "~b_3'": "b_3'", "b_4": "b_4", "b": "b", "b'": "b'",
               "~a_{1/2} b_3'": "a_{1/2} ~b_3'",
               "a_{1/2} ~b_3'": "~a_{1/2} b_3'"})
    for v, gv in zip(edual.vertices, edual_g.vertices):
        zr[v] = gv
        zr[gv] = v
    _auto(cat, "z_dual", "equivalence", left_map=zl, right_map=zr)
    _auto(cat, "g_conj", "conjugation-left", left_map=amb,
          targets=["rho", "rho a_{1/2}", "rho a_1", "rho a_{3/2}",
                   "rho a_2", "rho b_3", "rho b_3'", "rho b_4"])
    cat["dual_automorphisms"] = ["a_0"]
    cat["right_endpoints"] = ["rho", "rho_1", "g rho_1", "rho_1 b_3'",
                              "g rho_1 b_3'", "rho_1 b_4", "g rho_1 b_4",
                              "rho b_4", "rho b_3'", "b_4", "b_3'",
                              "~b_3'", "b_3", "~b_3"]

    _lat(cat, "rho", "single intermediate", [["rho_0", "rho_1"]], [],
         enumerable=True)
    _lat(cat, "rho a_{1/2}", "half-spin picture",
         [["rho", "a_{1/2}"], ["rho", "~a_{1/2}"], ["1/2 rho_0", "rho_1"],
          ["rho_0", "rho_1 ~a_{1/2}"], ["1/2", "rho"]],
         [[0, 3, "g rho_1"], [1, 3, "rho_1"], [2, 3, "~a_{1/2}"],
          [2, 4, "rho_0"]],
         enumerable=True)
    _lat(cat, "rho a_1", "spin-one picture",
         [["rho", "a_1"], ["rho", "~a_1"], ["1 rho_0", "rho_1"],
          ["rho_0", "rho_1 ~a_1"], ["1", "rho"]],
         [[0, 3, "g rho_1"], [1, 3, "rho_1"], [2, 3, "~a_1"],
          [2, 4, "rho_0"]],
         enumerable=True)
    _lat(cat, "rho a_{3/2}", "branch products feeding the chiral pair",
         [["rho b_4", "b_3'"], ["rho b_3'", "b_4"], ["rho b_4", "~b_3'"],
          ["rho", "a_{3/2}"], ["rho", "~a_{3/2}"], ["3/2 rho_0", "rho_1"],
          ["rho_0", "rho_1 a_{3/2}"], ["3/2", "rho"]],
         [[0, 3, "b_4"], [1, 3, "b_3'"], [1, 4, "~b_3'"], [2, 4, "b_4"],
          [3, 6, "rho_1"], [4, 6, "g rho_1"], [5, 6, "a_{3/2}"],
          [5, 7, "rho_0"]],
         enumerable=True)
    _lat(cat, "rho b_3'", "chiral pair over the branch sector",
         [["rho", "b_3'"], ["rho", "~b_3'"], ["rho_0", "rho_1 b_3'"]],
         [[0, 2, "rho_1"], [1, 2, "g rho_1"]],
         enumerable=True)
    _lat(cat, "rho b_4", "single chain to the passage top",
         [["rho", "b_4"], ["rho_0", "rho_1 b_4"]],
         [[0, 1, "rho_1"]],
         enumerable=True)
    _lat(cat, "rho b_3", "short-branch picture",
         [["rho b_4", "a_{1/2}"], ["rho a_{1/2}", "b_4"],
          ["1/2 rho_0", "rho_1 b_4"], ["rho", "b_3"], ["rho", "~b_3"],
          ["1/2", "rho b_4"], ["rho_0", "rho_1 b_3"],
          ["rho b_4", "~a_{1/2}"]],
         [[0, 3, "b_4"], [1, 3, "a_{1/2}"], [1, 2, "rho_1"],
          [1, 5, "rho"], [1, 4, "~a_{1/2}"], [2, 5, "rho_0"],
          [2, 6, "a_{1/2}"], [3, 6, "rho_1"], [7, 4, "b_4"],
          [4, 6, "g rho_1"]],
         enumerable=True)
    _lat(cat, "rho a_2", "the spin-two picture with both branch routes",
         [["1 rho_0", "rho_1 b_4"], ["rho a_1", "b_4"],
          ["1/2 rho_0", "rho_1 b_3'"], ["rho", "a_2"],
          ["rho a_{1/2}", "b_3'"], ["rho b_4", "a_1"], ["rho b_4", "~a_1"],
          ["rho a_{1/2}", "~b_3'"], ["rho_0 b", "rho_1"],
          ["rho_0 b", "g rho_1"], ["rho", "~a_{1/2} b_3'"],
          ["rho", "a_{1/2} ~b_3'"], ["rho", "~a_2"], ["2 rho_0", "rho_1"],
          ["rho b_3'", "a_{1/2}"], ["rho b_3'", "~a_{1/2}"],
          ["1", "rho b_4"], ["1/2", "rho b_3'"], ["rho_0", "rho_1 a_2"],
          ["2", "rho"]],
         [[0, 16, "rho_0"], [0, 18, "a_1"],
          [1, 0, "rho_1"], [1, 3, "a_1"], [1, 12, "~a_1"],
          [2, 17, "rho_0"], [2, 18, "a_{1/2}"],
          [3, 18, "rho_1"],
          [4, 3, "a_{1/2}"], [4, 2, "rho_1"], [4, 10, "~a_{1/2}"],
          [5, 3, "b_4"],
          [6, 12, "b_4"],
          [7, 2, "g rho_1"], [7, 11, "a_{1/2}"], [7, 12, "~a_{1/2}"],
          [8, 18, None], [9, 18, None],
          [10, 18, "g rho_1"], [11, 18, "g rho_1"],
          [12, 18, "g rho_1"],
          [13, 18, "a_2"], [13, 19, "rho_0"],
          [14, 3, "b_3'"], [14, 11, "~b_3'"],
          [15, 12, "~b_3'"], [15, 10, "b_3'"]],
         enumerable=True)
    return _check_catalog(cat)


# ---------------------------------------------------------------------------
# entry points


def build_all():
    return {
        "A_4": build_a4(), "A_6": build_a6(), "A_8": build_a8(),
        "D_4": build_d4(), "D_6": build_d6(), "D_8": build_d8(),
        "D_10": build_d10(), "D_16": build_d16(),
        "E6_10": build_e6(), "E7_16": build_e7(), "E8_28": build_e8(),
    }


def write_all(directory):
    os.makedirs(directory, exist_ok=True)
    paths = []
    for stem, cat in sorted(build_all().items()):
        path = os.path.join(directory, stem + ".json")
        with open(path, "w") as fh:
            json.dump(cat, fh, indent=1, sort_keys=True)
            fh.write("\n")
        paths.append(path)
    return paths
