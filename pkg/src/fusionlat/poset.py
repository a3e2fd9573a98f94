"""Finite posets from cover relations, with lattice checks.

A poset here is a Hasse diagram: nodes plus cover edges (child, parent)
meaning child < parent with nothing in between.  Everything else
(reachability order, minimal/maximal elements, meets and joins after
adjoining formal bounds, isomorphism of diagrams) is derived from that.
"""

import networkx as nx

BOTTOM = "__bot__"
TOP = "__top__"


class Poset:
    """Finite poset given by elements and cover relations."""

    def __init__(self, elements, covers):
        self.elements = list(elements)
        self.covers = [tuple(c) for c in covers]
        g = nx.DiGraph()
        g.add_nodes_from(self.elements)
        for child, parent in self.covers:
            if child not in g or parent not in g:
                raise ValueError("cover edge (%r, %r) uses unknown element" % (child, parent))
            g.add_edge(child, parent)
        if not nx.is_directed_acyclic_graph(g):
            raise ValueError("cover relation has a cycle")
        self.hasse = g
        # reflexive-transitive closure of the cover relation
        self._desc = {u: set(nx.descendants(g, u)) | {u} for u in g}

    def leq(self, a, b):
        """a <= b in the order generated by the covers."""
        return b in self._desc[a]

    def comparable(self, a, b):
        return self.leq(a, b) or self.leq(b, a)

    def minimal(self):
        return [u for u in self.elements if self.hasse.in_degree(u) == 0]

    def maximal(self):
        return [u for u in self.elements if self.hasse.out_degree(u) == 0]

    def up_set(self, a):
        return set(self._desc[a])

    def down_set(self, a):
        return {u for u in self.elements if self.leq(u, a)}

    def bounded(self):
        """The same poset with a formal top and bottom adjoined.

        Intermediate-subfactor figures draw only the proper intermediates;
        the lattice operations live in the bounded poset where N and M
        themselves are the extreme elements.
        """
        elements = [BOTTOM] + self.elements + [TOP]
        covers = list(self.covers)
        for u in self.minimal():
            covers.append((BOTTOM, u))
        for u in self.maximal():
            covers.append((u, TOP))
        if not self.elements:
            covers.append((BOTTOM, TOP))
        return Poset(elements, covers)

    def join(self, a, b):
        """Least upper bound, or None if it does not exist."""
        uppers = self.up_set(a) & self.up_set(b)
        least = [u for u in uppers if all(self.leq(u, v) for v in uppers)]
        return least[0] if len(least) == 1 else None

    def meet(self, a, b):
        """Greatest lower bound, or None if it does not exist."""
        lowers = self.down_set(a) & self.down_set(b)
        greatest = [u for u in lowers if all(self.leq(v, u) for v in lowers)]
        return greatest[0] if len(greatest) == 1 else None

    def is_lattice(self):
        """True if every pair in the *bounded* poset has a meet and a join."""
        b = self.bounded()
        for i, u in enumerate(b.elements):
            for v in b.elements[i + 1:]:
                if b.join(u, v) is None or b.meet(u, v) is None:
                    return False
        return True

    def dual(self):
        """Order-reversed poset over the same elements."""
        return Poset(self.elements, [(p, c) for c, p in self.covers])

    def relabel(self, mapping):
        return Poset(
            [mapping[u] for u in self.elements],
            [(mapping[c], mapping[p]) for c, p in self.covers],
        )


def poset_isomorphic(p, q):
    """Structural isomorphism of the Hasse diagrams (names ignored)."""
    if len(p.elements) != len(q.elements):
        return False
    if len(p.covers) != len(q.covers):
        return False
    return nx.is_isomorphic(p.hasse, q.hasse)


def dot_poset(p, title="poset", labels=None):
    """DOT source for the Hasse diagram, bottom-up, deterministic."""
    labels = labels or {}
    order = {u: i for i, u in enumerate(p.elements)}
    lines = ["digraph \"%s\" {" % title, "  rankdir=BT;", "  node [shape=box];"]
    for u in p.elements:
        text = labels.get(u, str(u))
        lines.append("  n%d [label=\"%s\"];" % (order[u], text.replace('"', '\\"')))
    for child, parent in sorted(p.covers, key=lambda e: (order[e[0]], order[e[1]])):
        lines.append("  n%d -> n%d;" % (order[child], order[parent]))
    lines.append("}")
    return "\n".join(lines) + "\n"
