"""Sector catalogs and the pair calculus for intermediate inclusions.

A catalog bundles the irreducible sectors attached to one module
inclusion at level k: names with dimensions, the fusion graphs the
sectors live on, a relation table for products the graphs alone cannot
produce, equivalence/conjugation generators, and the recorded
intermediate lattices.  On top of that this module implements

  * derive_product -- normal form of a product [left][right] when the
    recorded data determines it (None when it does not);
  * enumerate_pairs -- all pairs (left, right) with [left][right] equal
    to the target and both factors proper, subject to the endpoint
    dichotomy for recorded passages;
  * pair_classes -- quotient of a pair list by the equivalence
    generators (optionally also by the conjugations, which identify
    unitarily conjugate rather than equal positions);
  * inclusion_test -- three-valued order test between pairs;
  * build_lattice / dual_lattice / survey -- recorded lattices checked
    against enumeration, with Wall-type and second-commutant counts.

Pairs are written (left, right) with the left factor acting first, so a
pair refines the target as [target] = [left][right]; an intermediate
position (l', r') sits below (l, r) when some irreducible s satisfies
[l s] = [l'] and [s r'] = [r].
"""

import json
import os
import re
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .fusion import format_label
from .fusion import make_level
from .fusion import parse_label
from .nimrep import ADEGraph
from .nimrep import build_nimrep
from .nimrep import classify_graph
from .nimrep import pf_dimension_vector
from .poset import Poset

DIM_TOL = 1e-6
PROPER_EPS = 1e-9
_IDENTITIES = ("a_0", "0")
_CHIRAL_RE = re.compile(r"^(~?)a_(?:\{([^{}]+)\}|([0-9]+))$")
_EXCEPTIONAL_LEVELS = {"E6": 10, "E7": 16, "E8": 28}


def data_dir():
    """Directory holding the catalog fixtures (FL_DATA_DIR overrides)."""
    override = os.environ.get("FL_DATA_DIR")
    if override:
        return override
    return os.path.join(os.path.dirname(__file__), "data")


@dataclass(frozen=True)
class SectorCatalog:
    case: str
    k: int
    sectors: dict        # name -> dimension
    aliases: dict        # alternate spelling -> canonical name
    graphs: tuple        # graph records (vertices/edges/side/actions)
    right_endpoints: tuple
    relations: dict      # (left, right) -> tuple of result names
    automorphisms: tuple
    dual_automorphisms: tuple
    lattices: tuple
    ring: object
    nimreps: dict        # graph name -> Nimrep at level k
    vertex_home: dict    # vertex name -> graph record

    def lattice_targets(self):
        return [rec["target"] for rec in self.lattices]


def load_catalog(case, k=None, validate=True):
    """Load a bundled catalog, or synthesise a generic A/D one.

    Exceptional cases fix their own level; A and D need k.  Catalogs
    without a bundled fixture fall back to the generic builders (all
    type-A levels beyond the recorded ones, even D levels without an
    exceptional passage).
    """
    case = str(case).upper().replace("_", "")
    if case in _EXCEPTIONAL_LEVELS:
        expected = _EXCEPTIONAL_LEVELS[case]
        if k is not None and int(k) != expected:
            raise ValueError("case %s is recorded at level %d only"
                             % (case, expected))
        k = expected
    elif case in ("A", "D"):
        if k is None:
            raise ValueError("type %s needs an explicit level" % case)
        k = int(k)
        if k < 1:
            raise ValueError("level must be positive")
    else:
        raise ValueError("unknown case %r" % case)

    path = os.path.join(data_dir(), "%s_%d.json" % (case, k))
    if os.path.exists(path):
        with open(path) as handle:
            raw = json.load(handle)
    else:
        from . import catbuild
        if case == "A":
            raw = catbuild.synth_a(k)
        elif case == "D":
            raw = catbuild.synth_d(k)
        else:
            raise FileNotFoundError(path)
    cat = _catalog_from_raw(raw)
    if validate:
        validate_catalog(cat)
    return cat


def _catalog_from_raw(raw):
    k = int(raw["k"])
    ring = make_level(k)
    relations = {}
    for rel in raw["relations"]:
        key = (rel["left"], rel["right"])
        result = tuple(rel["result"])
        if key in relations and relations[key] != result:
            raise ValueError("conflicting relations for %r" % (key,))
        relations[key] = result
    nimreps = {}
    vertex_home = {}
    graphs = []
    for rec in raw["graphs"]:
        verts = list(rec["vertices"])
        adj = np.zeros((len(verts), len(verts)), dtype=int)
        for i, j in rec["edges"]:
            adj[i, j] = 1
            adj[j, i] = 1
        shape = classify_graph(adj)
        graph = ADEGraph(name=shape, vertices=tuple(verts), adjacency=adj,
                         coxeter_number=k + 2)
        nim = build_nimrep(graph, k)
        entry = dict(rec)
        entry.setdefault("right_action", True)
        entry.setdefault("left_action", rec.get("side") == "right")
        entry["shape"] = shape
        graphs.append(entry)
        nimreps[rec["name"]] = nim
        for v in verts:
            if v in vertex_home:
                raise ValueError("vertex %r recorded on two graphs" % v)
            vertex_home[v] = entry
    return SectorCatalog(
        case=raw["case"], k=k, sectors=dict(raw["sectors"]),
        aliases=dict(raw["aliases"]), graphs=tuple(graphs),
        right_endpoints=tuple(raw["right_endpoints"]),
        relations=relations, automorphisms=tuple(raw["automorphisms"]),
        dual_automorphisms=tuple(raw["dual_automorphisms"]),
        lattices=tuple(raw["lattices"]), ring=ring, nimreps=nimreps,
        vertex_home=vertex_home)


# ---------------------------------------------------------------------------
# names


def normalize_name(cat, name):
    """Canonical spelling: alias closure plus twist-square cancellation."""
    name = " ".join(str(name).split())
    changed = True
    while changed:
        changed = False
        while name in cat.aliases:
            name = cat.aliases[name]
            changed = True
        if name.startswith("g g "):
            name = name[4:]
            changed = True
    return name


def _spin_two_j(cat, name):
    if " " in name:
        return None
    try:
        two_j = parse_label(name)
    except (ValueError, ZeroDivisionError):
        return None
    if not 0 <= two_j <= cat.k:
        return None
    # sector names shadow spin-like spellings, never the other way round
    if name in cat.sectors:
        return None
    return two_j


def _chiral_info(cat, name):
    match = _CHIRAL_RE.match(name)
    if not match:
        return None
    label = match.group(2) or match.group(3)
    try:
        two_j = parse_label(label)
    except ValueError:
        return None
    if not 0 <= two_j <= cat.k:
        return None
    return two_j, bool(match.group(1))


def sector_dim(cat, name):
    name = normalize_name(cat, name)
    if name in cat.sectors:
        return float(cat.sectors[name])
    two_j = _spin_two_j(cat, name)
    if two_j is not None:
        return float(cat.ring.qdim(two_j))
    raise KeyError("unknown sector %r" % name)


def known_name(cat, name):
    name = normalize_name(cat, name)
    return name in cat.sectors or _spin_two_j(cat, name) is not None


def _toggle_twist(cat, name):
    """Opposite twisted copy of a dual-graph vertex, if one is recorded."""
    other = name[2:] if name.startswith("g ") else "g " + name
    other = normalize_name(cat, other)
    return other if other in cat.sectors else name


def _column(cat, home, vertex, two_j):
    nim = cat.nimreps[home["name"]]
    idx = home["vertices"].index(vertex)
    col = nim.matrices[two_j][:, idx]
    out = []
    for pos, mult in enumerate(col):
        out.extend([home["vertices"][pos]] * int(mult))
    return out


# ---------------------------------------------------------------------------
# products


def derive_product(cat, left, right, _depth=8):
    """Decomposition of [left][right] as recorded names, or None.

    The product is resolved in a fixed rule order: identities, ambient
    fusion, the relation table, concatenation onto a recorded sector,
    nimrep columns (spins on any recorded vertex; chiral sectors on
    vertices of graphs that carry the matching action, with the twisted
    chirality toggling the twisted copy on dual graphs), and finally
    associativity splits of multi-word names through an irreducible
    partial product.  Returns None when no recorded route decides the
    product -- callers must treat that as unknown, not as empty.
    """
    left = normalize_name(cat, left)
    right = normalize_name(cat, right)
    if _depth < 0:
        return None
    if left in _IDENTITIES and left not in cat.sectors:
        return [right]
    if right in _IDENTITIES and right not in cat.sectors:
        return [left]
    ls = _spin_two_j(cat, left)
    rs = _spin_two_j(cat, right)
    if ls is not None and rs is not None:
        return [format_label(t) for t in cat.ring.fuse_labels(ls, rs)]
    rel = cat.relations.get((left, right))
    if rel is not None:
        return list(rel)
    joined = normalize_name(cat, left + " " + right)
    if joined in cat.sectors:
        return [joined]
    if ls is not None:
        home = cat.vertex_home.get(right)
        if home is not None:
            return _column(cat, home, right, ls)
    rc = _chiral_info(cat, right)
    if rc is not None:
        two_j, twisted = rc
        home = cat.vertex_home.get(left)
        if home is not None and home["right_action"]:
            out = _column(cat, home, left, two_j)
            if twisted and home["side"] == "right":
                out = [_toggle_twist(cat, n) for n in out]
            return out
    lc = _chiral_info(cat, left)
    if lc is not None:
        two_j, twisted = lc
        home = cat.vertex_home.get(right)
        if home is not None and home["left_action"]:
            out = _column(cat, home, right, two_j)
            if twisted:
                out = [_toggle_twist(cat, n) for n in out]
            return out
    if left == "g" and "g" in cat.sectors:
        joined = normalize_name(cat, "g " + right)
        return [joined] if joined in cat.sectors else None
    if " " in right:
        tokens = right.split()
        for cut in range(1, len(tokens)):
            head = " ".join(tokens[:cut])
            tail = " ".join(tokens[cut:])
            mid = derive_product(cat, left, head, _depth - 1)
            if mid is not None and len(mid) == 1:
                out = derive_product(cat, mid[0], tail, _depth - 1)
                if out is not None:
                    return out
    if " " in left:
        tokens = left.split()
        for cut in range(1, len(tokens)):
            head = " ".join(tokens[:cut])
            tail = " ".join(tokens[cut:])
            mid = derive_product(cat, tail, right, _depth - 1)
            if mid is not None and len(mid) == 1:
                out = derive_product(cat, head, mid[0], _depth - 1)
                if out is not None:
                    return out
    return None


def _pair_pool(cat):
    pool = [(name, float(dim)) for name, dim in sorted(cat.sectors.items())]
    for two_j in range(cat.k + 1):
        label = format_label(two_j)
        if label not in cat.sectors:
            pool.append((label, float(cat.ring.qdim(two_j))))
    return pool


def _left_endpoints(cat):
    ends = {"0", format_label(cat.k)}
    for rec in cat.graphs:
        if rec["side"] != "left":
            continue
        degree = {}
        for i, j in rec["edges"]:
            degree[i] = degree.get(i, 0) + 1
            degree[j] = degree.get(j, 0) + 1
        for pos, v in enumerate(rec["vertices"]):
            if degree.get(pos, 0) == 1:
                ends.add(v)
    return ends


def end_point_filter(cat, sigma):
    """Candidate endpoint factors for pairs of `sigma`.

    Any proper pair has its left leg at an end point of a module-side
    graph (or at an end of the ambient spin chain) or its right leg at a
    recorded dual-side end point; returns the two candidate lists as
    ("left", name) / ("right", name) entries.
    """
    sigma = normalize_name(cat, sigma)
    if not known_name(cat, sigma):
        raise KeyError("unknown sector %r" % sigma)
    out = [("left", name) for name in sorted(_left_endpoints(cat))]
    out += [("right", name) for name in cat.right_endpoints]
    return out


def enumerate_pairs(cat, target):
    """All proper pairs multiplying to the target.

    Both factors must be strictly between 1 and the target dimension,
    the dimensions must multiply up to the target's, one factor must sit
    at a recorded endpoint (dichotomy of recorded passages), and the
    derived product must be exactly the target.
    """
    if cat.k < 5:
        raise ValueError("enumeration needs level >= 5 (halved passages "
                         "collapse below that)")
    target = normalize_name(cat, target)
    dt = sector_dim(cat, target)
    pool = _pair_pool(cat)
    lends = _left_endpoints(cat)
    rends = {normalize_name(cat, r) for r in cat.right_endpoints}
    pairs = []
    for l, dl in pool:
        if not 1.0 + PROPER_EPS < dl < dt * (1.0 - PROPER_EPS):
            continue
        for r, dr in pool:
            if abs(dl * dr - dt) > DIM_TOL * dt:
                continue
            if l not in lends and r not in rends:
                continue
            if derive_product(cat, l, r) == [target]:
                pairs.append((l, r))
    return sorted(pairs)


# ---------------------------------------------------------------------------
# equivalence and conjugacy


def _apply_map(cat, mapping, name):
    if name not in mapping:
        return None
    return normalize_name(cat, mapping[name])


def pair_classes(cat, pairs, target=None, conjugation=False):
    """Partition of a pair list by the recorded generators.

    Equivalence generators always apply; conjugation generators apply
    only when ``conjugation`` is set and the generator records the
    normalised target.  Generator images falling outside the pair list
    are ignored (the generators are partial maps on recorded names).
    """
    pairs = [(normalize_name(cat, l), normalize_name(cat, r))
             for l, r in pairs]
    index = {}
    for i, p in enumerate(pairs):
        if p in index:
            raise ValueError("duplicate pair %r" % (p,))
        index[p] = i
    parent = list(range(len(pairs)))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    def union(i, j):
        ri, rj = find(i), find(j)
        if ri != rj:
            parent[rj] = ri

    tnorm = normalize_name(cat, target) if target is not None else None
    for auto in cat.automorphisms:
        kind = auto["kind"]
        if kind == "equivalence":
            pass
        elif kind in ("conjugation-left", "conjugation-right"):
            if not conjugation or tnorm is None:
                continue
            recorded = {normalize_name(cat, t)
                        for t in auto.get("targets", [])}
            if tnorm not in recorded:
                continue
        else:
            raise ValueError("unknown generator kind %r" % kind)
        for i, (l, r) in enumerate(pairs):
            nl = l if kind == "conjugation-right" else _apply_map(
                cat, auto["left_map"], l)
            nr = r if kind == "conjugation-left" else _apply_map(
                cat, auto["right_map"], r)
            if nl is None or nr is None:
                continue
            j = index.get((nl, nr))
            if j is not None:
                union(i, j)

    groups = {}
    for i, p in enumerate(pairs):
        groups.setdefault(find(i), []).append(p)
    return sorted([sorted(g) for g in groups.values()])


def inclusion_test(cat, child, parent, witness=None):
    """Is the child pair an intermediate refinement of the parent pair?

    child = (l', r') sits below parent = (l, r) when some irreducible s
    has [l s] = [l'] and [s r'] = [r].  With a witness the two products
    are checked directly.  Without one, every recorded sector whose
    dimension fits d(l')/d(l) is tried; the answer is True on a hit,
    False when every candidate is settled and refuted, and
    "undecidable" when no candidate exists or some product is outside
    the recorded data.
    """
    la, ra = (normalize_name(cat, n) for n in child)
    lb, rb = (normalize_name(cat, n) for n in parent)
    if witness is not None:
        w = normalize_name(cat, witness)
        return bool(derive_product(cat, lb, w) == [la]
                    and derive_product(cat, w, ra) == [rb])
    ratio = sector_dim(cat, la) / sector_dim(cat, lb)
    unknown = False
    candidates = False
    for s, ds in _pair_pool(cat):
        if abs(ds - ratio) > DIM_TOL * max(1.0, ratio):
            continue
        candidates = True
        first = derive_product(cat, lb, s)
        if first is None:
            unknown = True
            continue
        if first != [la]:
            continue
        second = derive_product(cat, s, ra)
        if second is None:
            unknown = True
            continue
        if second == [rb]:
            return True
    if unknown or not candidates:
        return "undecidable"
    return False


# ---------------------------------------------------------------------------
# recorded lattices


@dataclass
class LatticeResult:
    case: str
    k: int
    target: str
    caption: str
    nodes: list        # normalised (left, right) pairs, figure order
    covers: list       # (child index, parent index, witness or None)
    poset: Poset       # on the node pairs
    pairs: list        # raw enumerated pairs (None when not enumerated)
    classes: list      # equivalence classes of the raw pairs (or None)

    def minimal_nodes(self):
        return [n for n in self.nodes if n in set(self.poset.minimal())]

    def maximal_nodes(self):
        return [n for n in self.nodes if n in set(self.poset.maximal())]


def _lattice_record(cat, target):
    tnorm = normalize_name(cat, target)
    for rec in cat.lattices:
        if normalize_name(cat, rec["target"]) == tnorm:
            return rec, tnorm
    raise KeyError("no recorded lattice for %r in %s_%d"
                   % (target, cat.case, cat.k))


def build_lattice(cat, target, check_enumeration=True):
    """Recorded lattice for a target, cross-checked against enumeration.

    For enumerable records the raw pair list is recomputed, quotiented
    by the equivalence generators, and matched 1:1 against the recorded
    nodes; each witnessed cover is verified by composition and each
    unwitnessed cover must not be refutable.  Raises AssertionError on
    any mismatch.
    """
    rec, tnorm = _lattice_record(cat, target)
    nodes = [(normalize_name(cat, l), normalize_name(cat, r))
             for l, r in rec["nodes"]]
    if len(set(nodes)) != len(nodes):
        raise AssertionError("recorded nodes collide after normalisation")
    pairs = classes = None
    if rec["enumerable"] and cat.k >= 5 and check_enumeration:
        pairs = enumerate_pairs(cat, tnorm)
        classes = pair_classes(cat, pairs)
        if len(classes) != len(nodes):
            raise AssertionError(
                "%s_%d %r: %d enumerated classes vs %d recorded nodes"
                % (cat.case, cat.k, tnorm, len(classes), len(nodes)))
        taken = set()
        for node in nodes:
            hits = [i for i, cls in enumerate(classes) if node in cls]
            if len(hits) != 1:
                raise AssertionError("node %r not uniquely enumerated"
                                     % (node,))
            if hits[0] in taken:
                raise AssertionError("two recorded nodes share a class")
            taken.add(hits[0])
    covers = [(int(c), int(p), w) for c, p, w in rec["covers"]]
    poset = Poset(nodes, [(nodes[c], nodes[p]) for c, p, _ in covers])
    if not poset.is_lattice():
        raise AssertionError("recorded covers do not form a lattice")
    for c, p, w in covers:
        verdict = inclusion_test(cat, nodes[c], nodes[p], witness=w)
        if w is not None and verdict is not True:
            raise AssertionError("witness %r fails for %r < %r"
                                 % (w, nodes[c], nodes[p]))
        if w is None and verdict is False:
            raise AssertionError("unwitnessed cover %r < %r is refuted"
                                 % (nodes[c], nodes[p]))
    return LatticeResult(case=cat.case, k=cat.k, target=tnorm,
                         caption=rec.get("caption", ""), nodes=nodes,
                         covers=covers, poset=poset, pairs=pairs,
                         classes=classes)


def conjugate_name(cat, name):
    name = normalize_name(cat, name)
    if name.startswith("bar "):
        return normalize_name(cat, name[4:])
    return normalize_name(cat, "bar " + name)


def dual_lattice(cat, lattice):
    """Order-reversed lattice of the dual inclusion.

    The intermediates of the dual inclusion are the duals of the
    original intermediates with the order reversed; on pairs this swaps
    and conjugates the two legs.
    """
    nodes = [(conjugate_name(cat, r), conjugate_name(cat, l))
             for l, r in lattice.nodes]
    covers = [(p, c, w) for c, p, w in lattice.covers]
    poset = Poset(nodes, [(nodes[c], nodes[p]) for c, p, _ in covers])
    return LatticeResult(case=lattice.case, k=lattice.k,
                         target=conjugate_name(cat, lattice.target),
                         caption=lattice.caption, nodes=nodes,
                         covers=covers, poset=poset, pairs=None,
                         classes=None)


def meet_join(lattice, node_a, node_b):
    """Greatest lower bound and least upper bound of two fixture nodes.

    Computed in the bounded poset, where the formal bottom is the
    subfactor itself and the formal top is the ambient factor; returns
    (meet, join) as node pairs or the formal bound markers.  Raises if
    either bound fails to be unique (the fixture is then not a lattice).
    """
    bounded = lattice.poset.bounded()
    a, b = tuple(node_a), tuple(node_b)
    low = bounded.meet(a, b)
    high = bounded.join(a, b)
    if low is None or high is None:
        raise ValueError("no unique meet/join for (%r, %r)"
                         % (node_a, node_b))
    return low, high


# ---------------------------------------------------------------------------
# counting checks


def second_commutant(cat, target):
    """Multiplicities m_lambda of the ambient labels in [t tbar].

    For an ambient (spin) target this is plain fusion; for a recorded
    vertex of a left graph it is the diagonal of the nimrep there.  The
    relative commutant of the corresponding inclusion has dimension
    sum(m^2) with one central summand per nonzero m.
    """
    t = normalize_name(cat, target)
    two_j = _spin_two_j(cat, t)
    if two_j is not None:
        mults = {l: cat.ring.n(two_j, two_j, l)
                 for l in cat.ring.labels()}
    else:
        home = cat.vertex_home.get(t)
        if home is None or home["side"] != "left":
            raise KeyError("no commutant data recorded for %r" % target)
        nim = cat.nimreps[home["name"]]
        idx = home["vertices"].index(t)
        mults = {l: int(nim.matrices[l][idx, idx])
                 for l in range(cat.k + 1)}
    return {l: int(m) for l, m in mults.items() if m}


def second_commutant_dim(cat, target):
    return sum(m * m for m in second_commutant(cat, target).values())


def automorphism_count(cat, target):
    """Number of recorded dual automorphisms fixing the target sector."""
    t = normalize_name(cat, target)
    count = 0
    for u in cat.dual_automorphisms:
        if derive_product(cat, t, u) == [t]:
            count += 1
    return count


def wall_check(cat, target, lattice=None):
    """Strict Wall-type bounds for one recorded lattice."""
    lat = lattice or build_lattice(cat, target)
    dim = second_commutant_dim(cat, lat.target)
    n_min = len(lat.poset.minimal())
    n_max = len(lat.poset.maximal())
    return {"target": lat.target, "dim": dim,
            "n_minimal": n_min, "n_maximal": n_max,
            "ok": n_min < dim and n_max < dim}


def gag_check(cat, target, lattice=None):
    """Minimal conjugacy classes against the distinct sector count.

    The number of conjugacy classes of minimal intermediate positions
    is bounded by the number of distinct irreducible sectors in
    [t tbar] whenever the inclusion has no extra symmetry; a recorded
    lattice exceeding the bound is reported as a violation.
    """
    lat = lattice or build_lattice(cat, target)
    distinct = len(second_commutant(cat, lat.target))
    base = lat.pairs if lat.pairs is not None else list(lat.nodes)
    base = list(base)
    for node in lat.nodes:
        if node not in base:
            base.append(node)
    classes = pair_classes(cat, base, target=lat.target, conjugation=True)
    class_of = {}
    for i, cls in enumerate(classes):
        for p in cls:
            class_of[p] = i
    minimal = {class_of[n] for n in lat.minimal_nodes()}
    return {"target": lat.target, "minimal_classes": len(minimal),
            "distinct": distinct,
            "automorphisms": automorphism_count(cat, lat.target),
            "violated": len(minimal) > distinct}


def survey(cat, check_enumeration=True):
    """Wall and counting report for every recorded lattice."""
    out = []
    for rec in cat.lattices:
        lat = build_lattice(cat, rec["target"],
                            check_enumeration=check_enumeration)
        wall = wall_check(cat, lat.target, lattice=lat)
        gag = gag_check(cat, lat.target, lattice=lat)
        out.append({"target": lat.target,
                    "nodes": len(lat.nodes),
                    "covers": len(lat.covers),
                    "minimal": len(lat.poset.minimal()),
                    "maximal": len(lat.poset.maximal()),
                    "wall": wall, "gag": gag})
    return out


# ---------------------------------------------------------------------------
# validation


def validate_catalog(cat):
    """Structural checks every catalog must pass before use.

    Dimensions along every graph must follow the Perron-Frobenius
    vector; relation dimensions must multiply; generator maps and
    lattice records may only mention known names; recorded covers must
    form a lattice in the bounded sense.
    """
    for name, dim in cat.sectors.items():
        if not dim > 0:
            raise ValueError("sector %r has nonpositive dimension" % name)
    for alias, target in cat.aliases.items():
        if not known_name(cat, target):
            raise ValueError("alias %r points to unknown %r"
                             % (alias, target))
    for rec in cat.graphs:
        verts = rec["vertices"]
        adj = np.zeros((len(verts), len(verts)), dtype=int)
        for i, j in rec["edges"]:
            adj[i, j] = 1
            adj[j, i] = 1
        pf = pf_dimension_vector(cat.nimreps[rec["name"]].graph)
        head = cat.sectors[verts[0]]
        for pos, v in enumerate(verts):
            expect = float(pf[pos]) * head
            if abs(cat.sectors[v] - expect) > DIM_TOL * max(1.0, expect):
                raise ValueError("dimension of %r is off the "
                                 "Perron-Frobenius ray" % v)
    for (left, right), result in cat.relations.items():
        lhs = sector_dim(cat, left) * sector_dim(cat, right)
        rhs = sum(sector_dim(cat, r) for r in result)
        if abs(lhs - rhs) > DIM_TOL * max(1.0, lhs):
            raise ValueError("relation (%r, %r) violates multiplicativity"
                             % (left, right))
    for auto in cat.automorphisms:
        if auto["kind"] not in ("equivalence", "conjugation-left",
                                "conjugation-right"):
            raise ValueError("unknown generator kind %r" % auto["kind"])
        for mapping in (auto["left_map"], auto["right_map"]):
            for src, dst in mapping.items():
                if not (known_name(cat, src) and known_name(cat, dst)):
                    raise ValueError("generator %r maps unknown names"
                                     % auto["name"])
    for u in cat.dual_automorphisms:
        if u not in _IDENTITIES and not known_name(cat, u):
            raise ValueError("unknown dual automorphism %r" % u)
    for rec in cat.lattices:
        tnorm = normalize_name(cat, rec["target"])
        dt = sector_dim(cat, tnorm)
        nodes = [(normalize_name(cat, l), normalize_name(cat, r))
                 for l, r in rec["nodes"]]
        for l, r in nodes:
            prod = sector_dim(cat, l) * sector_dim(cat, r)
            if abs(prod - dt) > DIM_TOL * max(1.0, dt):
                raise ValueError("pair (%r, %r) does not multiply to %r"
                                 % (l, r, tnorm))
            if not 1.0 + PROPER_EPS < sector_dim(cat, l) < dt:
                raise ValueError("pair (%r, %r) is not proper" % (l, r))
        for c, p, w in rec["covers"]:
            if not (0 <= c < len(nodes) and 0 <= p < len(nodes)):
                raise ValueError("cover index out of range")
            if w is not None and not known_name(cat, w):
                raise ValueError("unknown witness %r" % w)
        poset = Poset(nodes, [(nodes[c], nodes[p])
                              for c, p, _ in rec["covers"]])
        if not poset.is_lattice():
            raise ValueError("recorded covers for %r do not form a lattice"
                             % rec["target"])
    return True
