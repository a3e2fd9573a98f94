"""Finite groups as multiplication tables.

Everything downstream (idempotents, witness vectors, Wall-type counts)
works over a plain n x n table of element indices with identity 0, so
groups stay hashable, comparisons stay exact, and subgroup enumeration
is straightforward closure bookkeeping.  Constructors cover the named
families used by the test corpus: cyclic, dihedral, dicyclic,
symmetric/alternating (n <= 6), direct and semidirect products.
"""

import itertools
from dataclasses import dataclass
from functools import lru_cache

SUBGROUP_ORDER_BOUND = 200


@dataclass(frozen=True)
class FiniteGroup:
    mult: tuple   # mult[i][j] = index of the product, identity at 0
    name: str = ""

    @property
    def order(self):
        return len(self.mult)

    def __post_init__(self):
        n = len(self.mult)
        if n == 0:
            raise ValueError("empty multiplication table")
        for row in self.mult:
            if len(row) != n or any(not 0 <= x < n for x in row):
                raise ValueError("malformed multiplication table")
        for g in range(n):
            if self.mult[0][g] != g or self.mult[g][0] != g:
                raise ValueError("index 0 is not an identity")
        for g in range(n):
            if all(self.mult[g][h] != 0 for h in range(n)):
                raise ValueError("element %d has no inverse" % g)
        for a in range(n):
            ra = self.mult[a]
            for b in range(n):
                ab = ra[b]
                rb = self.mult[b]
                rab = self.mult[ab]
                for c in range(n):
                    if rab[c] != ra[rb[c]]:
                        raise ValueError(
                            "non-associative triple (%d, %d, %d)" % (a, b, c))

    def op(self, a, b):
        return self.mult[a][b]

    def inv(self, a):
        return self.mult[a].index(0)

    def conjugate(self, g, x):
        """g x g^-1."""
        return self.mult[self.mult[g][x]][self.inv(g)]

    def elements(self):
        return range(self.order)


def load_group(spec, name=""):
    """Group from a table record {"order": n, "mult": [[...]]}."""
    if isinstance(spec, FiniteGroup):
        return spec
    if isinstance(spec, dict):
        table = spec["mult"]
        if "order" in spec and int(spec["order"]) != len(table):
            raise ValueError("declared order disagrees with the table")
    else:
        table = spec
    return FiniteGroup(mult=tuple(tuple(int(x) for x in row)
                                  for row in table), name=name)


# ---------------------------------------------------------------------------
# constructors


def _table_from_elements(elems, compose, name):
    index = {e: i for i, e in enumerate(elems)}
    table = tuple(tuple(index[compose(a, b)] for b in elems) for a in elems)
    return FiniteGroup(mult=table, name=name)


def cyclic(n):
    if n < 1:
        raise ValueError("order must be positive")
    table = tuple(tuple((i + j) % n for j in range(n)) for i in range(n))
    return FiniteGroup(mult=table, name="C%d" % n)


def dihedral(n):
    """Dihedral group with n rotations (order 2n)."""
    if n < 1:
        raise ValueError("need at least one rotation")
    elems = [(r, s) for s in (0, 1) for r in range(n)]

    def compose(a, b):
        r1, s1 = a
        r2, s2 = b
        # reflections conjugate rotations to their inverses
        return ((r1 + (r2 if s1 == 0 else -r2)) % n, (s1 + s2) % 2)

    return _table_from_elements(elems, compose, "D%d" % n)


def dicyclic(n):
    """Dicyclic group of order 4n (n = 2 gives the quaternion group)."""
    if n < 1:
        raise ValueError("order parameter must be positive")
    elems = [(r, s) for s in (0, 1) for r in range(2 * n)]

    def compose(a, b):
        r1, s1 = a
        r2, s2 = b
        r = (r1 + (r2 if s1 == 0 else -r2)) % (2 * n)
        if s1 and s2:
            r = (r + n) % (2 * n)
        return (r, (s1 + s2) % 2)

    return _table_from_elements(elems, compose, "Dic%d" % n)


def quaternion():
    g = dicyclic(2)
    return FiniteGroup(mult=g.mult, name="Q8")


def _perm_compose(p, q):
    return tuple(p[q[i]] for i in range(len(p)))


def _perm_sign(p):
    sign = 1
    seen = [False] * len(p)
    for i in range(len(p)):
        if seen[i]:
            continue
        length = 0
        j = i
        while not seen[j]:
            seen[j] = True
            j = p[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def symmetric(n):
    if not 1 <= n <= 6:
        raise ValueError("symmetric groups are built for n <= 6 only")
    elems = sorted(itertools.permutations(range(n)))
    return _table_from_elements(elems, _perm_compose, "S%d" % n)


def alternating(n):
    if not 1 <= n <= 6:
        raise ValueError("alternating groups are built for n <= 6 only")
    elems = sorted(p for p in itertools.permutations(range(n))
                   if _perm_sign(p) == 1)
    return _table_from_elements(elems, _perm_compose, "A%d" % n)


def direct_product(a, b, name=""):
    elems = [(x, y) for x in a.elements() for y in b.elements()]

    def compose(u, v):
        return (a.op(u[0], v[0]), b.op(u[1], v[1]))

    label = name or "%sx%s" % (a.name or "?", b.name or "?")
    return _table_from_elements(elems, compose, label)


def semidirect(v, k, action, name=""):
    """Semidirect product V x| K from an action table.

    ``action[x]`` is the permutation of V induced by the K-element x;
    each must be an automorphism of V and the assignment a homomorphism
    from K to Aut(V), both validated here.
    """
    if len(action) != k.order:
        raise ValueError("one automorphism per K element required")
    for x in k.elements():
        perm = action[x]
        if sorted(perm) != list(v.elements()):
            raise ValueError("action of %d is not a permutation" % x)
        for p, q in itertools.product(v.elements(), repeat=2):
            if perm[v.op(p, q)] != v.op(perm[p], perm[q]):
                raise ValueError("action of %d is not an automorphism" % x)
    for x, y in itertools.product(k.elements(), repeat=2):
        composed = [action[x][action[y][p]] for p in v.elements()]
        if composed != list(action[k.op(x, y)]):
            raise ValueError("action is not a homomorphism")
    elems = [(p, x) for p in v.elements() for x in k.elements()]

    def compose(u, w):
        return (v.op(u[0], action[u[1]][w[0]]), k.op(u[1], w[1]))

    label = name or "%s:%s" % (v.name or "?", k.name or "?")
    return _table_from_elements(elems, compose, label)


def _mod_action(n, unit, k_order):
    """Action of a cyclic group on C_n by multiplication with a unit."""
    action = []
    power = 1
    for _ in range(k_order):
        action.append(tuple((power * i) % n for i in range(n)))
        power = (power * unit) % n
    return action


def heisenberg3():
    """Unitriangular 3x3 matrices over F_3 (order 27, exponent 3)."""
    v = direct_product(cyclic(3), cyclic(3), name="C3xC3")
    # direct_product encodes (a, b) as 3*a + b; the shear (a, b) -> (a, a+b)
    # is an order-3 automorphism of C3 x C3
    maps = []
    m = {(a, b): (a, b) for a in range(3) for b in range(3)}
    for _ in range(3):
        maps.append(tuple(3 * m[divmod(e, 3)][0] + m[divmod(e, 3)][1]
                          for e in range(9)))
        m = {ab: (m[ab][0], (m[ab][0] + m[ab][1]) % 3) for ab in m}
    return semidirect(v, cyclic(3), maps, name="He3")


NAMED_GROUPS = {
    "Q8": quaternion,
    "HE3": heisenberg3,
    "F20": lambda: semidirect(cyclic(5), cyclic(4), _mod_action(5, 2, 4),
                              name="F20"),
    "F21": lambda: semidirect(cyclic(7), cyclic(3), _mod_action(7, 2, 3),
                              name="F21"),
    "F52": lambda: semidirect(cyclic(13), cyclic(4), _mod_action(13, 5, 4),
                              name="F52"),
}


def named_group(name):
    """Group from a family name: C*, D*, Dic*, S*, A*, Q8, products
    with 'x', and a few named semidirect products."""
    key = str(name).strip()
    if "x" in key:
        parts = [named_group(p) for p in key.split("x")]
        out = parts[0]
        for extra in parts[1:]:
            out = direct_product(out, extra)
        return FiniteGroup(mult=out.mult, name=key)
    upper = key.upper()
    if upper in NAMED_GROUPS:
        return NAMED_GROUPS[upper]()
    for prefix, builder in (("DIC", dicyclic), ("D", dihedral),
                            ("C", cyclic), ("S", symmetric),
                            ("A", alternating)):
        if upper.startswith(prefix) and upper[len(prefix):].isdigit():
            return builder(int(upper[len(prefix):]))
    raise ValueError("unknown group name %r" % name)


# ---------------------------------------------------------------------------
# subgroup machinery


def closure(group, generators):
    """Subgroup generated by the given element indices.

    Right-multiplying by generators from the identity reaches every
    word in them, and words are closed under products and (by finite
    order) inverses, so the reachable set is the subgroup.
    """
    out = {0}
    frontier = [0]
    gens = sorted(set(generators) | {0})
    while frontier:
        x = frontier.pop()
        for g in gens:
            y = group.op(x, g)
            if y not in out:
                out.add(y)
                frontier.append(y)
    return frozenset(out)


def is_subgroup(group, subset):
    s = frozenset(subset)
    if 0 not in s:
        return False
    return all(group.op(a, b) in s for a in s for b in s)


@lru_cache(maxsize=None)
def subgroups(group):
    """Every subgroup, by closure of found subgroups with one new element."""
    if group.order > SUBGROUP_ORDER_BOUND:
        raise ValueError("group order %d exceeds the enumeration bound %d"
                         % (group.order, SUBGROUP_ORDER_BOUND))
    found = {frozenset([0])}
    frontier = [frozenset([0])]
    while frontier:
        h = frontier.pop()
        for g in group.elements():
            if g in h:
                continue
            grown = closure(group, h | {g})
            if grown not in found:
                found.add(grown)
                frontier.append(grown)
    return tuple(sorted(found, key=lambda s: (len(s), sorted(s))))


def maximal_subgroups(group):
    subs = [s for s in subgroups(group) if len(s) < group.order]
    return tuple(h for h in subs
                 if not any(h < k for k in subs if k != h))


def maximal_over(group, sub):
    """Maximal subgroups of G strictly containing the given subgroup."""
    h = frozenset(sub)
    return tuple(k for k in maximal_subgroups(group) if h < k)


def conjugate_subgroup(group, g, sub):
    return frozenset(group.conjugate(g, x) for x in sub)


def core(group, sub):
    """Largest normal subgroup of G contained in the subgroup."""
    out = frozenset(sub)
    for g in group.elements():
        out = out & conjugate_subgroup(group, g, sub)
    return out


def is_normal(group, sub):
    s = frozenset(sub)
    return all(conjugate_subgroup(group, g, s) == s for g in group.elements())


def normal_subgroups(group):
    return tuple(s for s in subgroups(group) if is_normal(group, s))


def minimal_normal_subgroups(group):
    normals = [s for s in normal_subgroups(group) if 1 < len(s)]
    return tuple(v for v in normals
                 if not any(w < v for w in normals if 1 < len(w) < len(v)))


def conjugacy_classes(group):
    seen = [False] * group.order
    classes = []
    for x in group.elements():
        if seen[x]:
            continue
        orbit = {group.conjugate(g, x) for g in group.elements()}
        for y in orbit:
            seen[y] = True
        classes.append(frozenset(orbit))
    return tuple(classes)


def subgroup_conjugacy_classes(group, subs):
    remaining = list(subs)
    classes = []
    while remaining:
        h = remaining[0]
        orbit = {conjugate_subgroup(group, g, h) for g in group.elements()}
        classes.append(tuple(sorted(orbit, key=sorted)))
        remaining = [s for s in remaining if s not in orbit]
    return tuple(classes)


def derived_subgroup(group):
    commutators = {group.op(group.op(a, b),
                            group.op(group.inv(a), group.inv(b)))
                   for a in group.elements() for b in group.elements()}
    return closure(group, commutators)


def _derived_of_subset(group, subset):
    commutators = {group.op(group.op(a, b),
                            group.op(group.inv(a), group.inv(b)))
                   for a in subset for b in subset}
    return closure(group, commutators)


def solvable(group):
    """Derived series reaches the trivial subgroup."""
    current = frozenset(group.elements())
    while True:
        nxt = _derived_of_subset(group, current)
        if nxt == current:
            return len(current) == 1
        current = nxt


def quotient(group, normal):
    """Quotient group plus the projection element -> coset index."""
    n = frozenset(normal)
    if not is_normal(group, n):
        raise ValueError("subgroup is not normal")
    cosets = []
    proj = [None] * group.order
    for g in group.elements():
        if proj[g] is not None:
            continue
        coset = frozenset(group.op(g, h) for h in n)
        idx = len(cosets)
        cosets.append(coset)
        for x in coset:
            proj[x] = idx
    reps = [min(c) for c in cosets]
    # coset of the identity must sit at index 0
    zero = proj[0]
    if zero != 0:
        order = [zero] + [i for i in range(len(cosets)) if i != zero]
        remap = {old: new for new, old in enumerate(order)}
        proj = [remap[p] for p in proj]
        reps = [reps[old] for old in order]
    table = tuple(tuple(proj[group.op(reps[i], reps[j])]
                        for j in range(len(reps)))
                  for i in range(len(reps)))
    q = FiniteGroup(mult=table, name=(group.name + "/N") if group.name
                    else "")
    return q, tuple(proj)
