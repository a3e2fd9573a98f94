"""A-D-E graphs as modules over the SU(2)_k fusion ring.

The action matrices are built by the Chebyshev recursion
M_{j+1/2} = M_{1/2} M_j - M_{j-1/2} starting from M_0 = id and
M_{1/2} = adjacency; integrality and the fusion-module identity
M_i M_j = sum_l N[i][j][l] M_l are then exact integer statements.

Vertex order of every builder runs along the tail from the
distinguished head vertex, with the branch vertex second-to-last for
E7/E8 and last for E6/D; recorded dimension data uses the same order.
"""

from dataclasses import dataclass, field

import numpy as np

from .fusion import make_level, format_label
from .modular import s_matrix

EIG_TOL = 1e-8


@dataclass(frozen=True)
class ADEGraph:
    name: str
    vertices: tuple
    adjacency: np.ndarray
    coxeter_number: int

    @property
    def level(self):
        return self.coxeter_number - 2

    def __post_init__(self):
        adj = self.adjacency
        if adj.shape != (len(self.vertices),) * 2:
            raise ValueError("adjacency shape mismatch")
        if not np.array_equal(adj, adj.T):
            raise ValueError("adjacency must be symmetric")


def _graph(name, vertices, edges, coxeter):
    n = len(vertices)
    adj = np.zeros((n, n), dtype=int)
    for i, j in edges:
        adj[i, j] = 1
        adj[j, i] = 1
    return ADEGraph(name=name, vertices=tuple(vertices), adjacency=adj,
                    coxeter_number=coxeter)


def a_graph(n, vertices=None):
    """Path on n vertices; Coxeter number n+1, level n-1."""
    if n < 2:
        raise ValueError("A_n needs n >= 2")
    if vertices is None:
        vertices = [format_label(v) for v in range(n)]
    edges = [(i, i + 1) for i in range(n - 1)]
    return _graph("A_%d" % n, vertices, edges, n + 1)


def d_graph(n, vertices=None):
    """Tail of n-2 vertices with a two-vertex fork at the end.

    Coxeter number 2n-2, level 2n-4.  Vertex order: tail from the head,
    fork last (D_4 degenerates to the three-leg star).
    """
    if n < 4:
        raise ValueError("D_n needs n >= 4")
    if vertices is None:
        vertices = ["v%d" % i for i in range(n)]
    edges = [(i, i + 1) for i in range(n - 3)]
    edges += [(n - 3, n - 2), (n - 3, n - 1)]
    return _graph("D_%d" % n, vertices, edges, 2 * n - 2)


def e6_graph(vertices=None):
    if vertices is None:
        vertices = ["v%d" % i for i in range(6)]
    edges = [(0, 1), (1, 2), (2, 3), (3, 4), (2, 5)]
    return _graph("E6", vertices, edges, 12)


def e7_graph(vertices=None):
    """Order: tail 0..4, branch 5 (at vertex 3), tail end 6."""
    if vertices is None:
        vertices = ["v%d" % i for i in range(7)]
    edges = [(0, 1), (1, 2), (2, 3), (3, 4), (3, 5), (4, 6)]
    return _graph("E7", vertices, edges, 18)


def e8_graph(vertices=None):
    """Order: tail 0..5, branch 6 (at vertex 4), tail end 7."""
    if vertices is None:
        vertices = ["v%d" % i for i in range(8)]
    edges = [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (4, 6), (5, 7)]
    return _graph("E8", vertices, edges, 30)


def classify_graph(adjacency):
    """A-D-E type of a connected symmetric 0/1 matrix, by shape matching.

    Returns the name string ("A_5", "D_6", "E7", ...).  Raises ValueError
    ("not A-D-E") when the spectral radius reaches 2 or the shape fits no
    simply-laced diagram.
    """
    adj = np.asarray(adjacency)
    n = adj.shape[0]
    if not np.array_equal(adj, adj.T) or np.any(np.diag(adj)):
        raise ValueError("not A-D-E: need symmetric zero-diagonal matrix")
    if not set(np.unique(adj)) <= {0, 1}:
        raise ValueError("not A-D-E: entries must be 0/1")
    # connectivity by breadth-first search
    seen = {0}
    frontier = [0]
    while frontier:
        v = frontier.pop()
        for w in np.nonzero(adj[v])[0]:
            if w not in seen:
                seen.add(int(w))
                frontier.append(int(w))
    if len(seen) != n:
        raise ValueError("not A-D-E: graph disconnected")
    radius = max(abs(np.linalg.eigvalsh(adj)))
    if radius >= 2.0 - 1e-12:
        raise ValueError("not A-D-E: spectral radius %.6f >= 2" % radius)
    degrees = adj.sum(axis=0)
    if degrees.max() > 3:
        raise ValueError("not A-D-E: vertex of degree > 3")
    forks = np.nonzero(degrees == 3)[0]
    if len(forks) > 1:
        raise ValueError("not A-D-E: more than one branch vertex")
    if len(forks) == 0:
        return "A_%d" % n
    # leg lengths measured in vertices hanging off the branch vertex
    fork = int(forks[0])
    legs = []
    for w in np.nonzero(adj[fork])[0]:
        length = 1
        prev, cur = fork, int(w)
        while degrees[cur] == 2:
            nxt = [int(u) for u in np.nonzero(adj[cur])[0] if u != prev]
            prev, cur = cur, nxt[0]
            length += 1
        legs.append(length)
    legs.sort()
    if legs[:2] == [1, 1]:
        return "D_%d" % n
    if legs == [1, 2, 2]:
        return "E6"
    if legs == [1, 2, 3]:
        return "E7"
    if legs == [1, 2, 4]:
        return "E8"
    raise ValueError("not A-D-E: leg profile %r" % (legs,))


def pf_dimension_vector(graph):
    """Perron-Frobenius eigenvector, entry 1 at the distinguished head
    (vertex 0, the rho end of the long tail)."""
    vals, vecs = np.linalg.eigh(graph.adjacency)
    top = vecs[:, np.argmax(vals)]
    if top[0] < 0:
        top = -top
    return top / top[0]


@dataclass
class Nimrep:
    graph: ADEGraph
    level: int
    matrices: list  # index two_j -> integer matrix
    exponents: list  # (two_mu, i) in eigenvalue order
    eigenvectors: np.ndarray  # columns aligned with exponents


def build_nimrep(graph, level=None):
    """Chebyshev construction of all action matrices plus spectral data.

    Raises if the graph's Coxeter number does not equal level+2 or if the
    recursion leaves the nonnegative integers (graph/level mismatch).
    """
    k = graph.level if level is None else level
    if graph.coxeter_number != k + 2:
        raise ValueError("Coxeter number %d incompatible with level %d"
                         % (graph.coxeter_number, k))
    make_level(k)
    n = len(graph.vertices)
    mats = [np.eye(n, dtype=int), graph.adjacency.astype(int)]
    for two_j in range(2, k + 1):
        nxt = mats[1] @ mats[two_j - 1] - mats[two_j - 2]
        if np.any(nxt < 0):
            raise ValueError("negative entry at label %s: not a level-%d "
                             "module" % (format_label(two_j), k))
        mats.append(nxt)
    tail = mats[1] @ mats[k] - mats[k - 1]
    if np.any(tail):
        raise ValueError("recursion does not truncate at the level")

    vals, vecs = np.linalg.eigh(graph.adjacency)
    exponents = []
    for idx, val in enumerate(vals):
        two_mu = int(round((k + 2) * np.arccos(np.clip(val / 2.0, -1, 1))
                           / np.pi - 1))
        if abs(val - 2 * np.cos(np.pi * (two_mu + 1) / (k + 2))) > 1e-9:
            raise ValueError("eigenvalue %.9f is not an exponent value" % val)
        exponents.append(two_mu)
    order = np.argsort(exponents, kind="stable")
    vecs = vecs[:, order]
    exponents = [exponents[i] for i in order]
    # vacuum eigenvector entrywise positive (Perron-Frobenius direction)
    counted = []
    seen = {}
    for pos, two_mu in enumerate(exponents):
        seen[two_mu] = seen.get(two_mu, 0) + 1
        counted.append((two_mu, seen[two_mu] - 1))
        if two_mu == 0 and vecs[0, pos] < 0:
            vecs[:, pos] = -vecs[:, pos]
    return Nimrep(graph=graph, level=k, matrices=mats, exponents=counted,
                  eigenvectors=vecs)


def fusion_module_identity_holds(nimrep):
    """Exact check of M_i M_j = sum_l N[i][j][l] M_l for all pairs."""
    ring = make_level(nimrep.level)
    mats = nimrep.matrices
    for a in ring.labels():
        for b in ring.labels():
            rhs = sum(mats[c] for c in ring.fuse_labels(a, b))
            if not np.array_equal(mats[a] @ mats[b], rhs):
                return False
    return True


def exponent_values_check(nimrep, tol=EIG_TOL):
    """Eigenvalues of M_{1/2} against 2cos(pi(2mu+1)/(k+2)) as multisets."""
    k = nimrep.level
    vals = np.sort(np.linalg.eigvalsh(nimrep.graph.adjacency))
    pred = np.sort([2 * np.cos(np.pi * (two_mu + 1) / (k + 2))
                    for two_mu, _ in nimrep.exponents])
    return float(np.max(np.abs(vals - pred))) <= tol


def ephi_checks(nimrep, tol=EIG_TOL):
    """The two eigenvector identities tying the module to the S matrix.

    (1) with d_b = phi^{(0)}_b / S[0][0]: sum_b d_b^2 = 1/S[0][0]^2, and
        phi^{(0)} is the positive Perron-Frobenius unit vector;
    (2) for every ambient label l:
        P_l / S[0][l]^2 = sum_v M_v S[v][l] / S[0][l]
        where P_l is the orthogonal projection onto the M_{1/2} eigenspace
        of the exponent value of l (zero when l is not an exponent) —
        entrywise this is sum_i phi_a phi_b* / S[0][l]^2 =
        sum_v <v-bar a, b> S[v][l]/S[0][l], basis-independent.
    Returns a report dict with max deviations.
    """
    k = nimrep.level
    s = s_matrix(k)
    vecs = nimrep.eigenvectors
    labels = [two_mu for two_mu, _ in nimrep.exponents]
    report = {}

    vacuum_cols = [i for i, two_mu in enumerate(labels) if two_mu == 0]
    phi0 = vecs[:, vacuum_cols[0]]
    d = phi0 / s[0, 0]
    report["vacuum_multiplicity"] = len(vacuum_cols)
    report["part1"] = abs(float(np.sum(d ** 2)) - 1.0 / s[0, 0] ** 2)
    report["vacuum_positive"] = bool(np.all(phi0 > 0))

    nverts = len(nimrep.graph.vertices)
    worst = 0.0
    for l in range(k + 1):
        cols = [i for i, two_mu in enumerate(labels) if two_mu == l]
        if cols:
            block = vecs[:, cols]
            proj = block @ block.T
        else:
            proj = np.zeros((nverts, nverts))
        rhs = sum(nimrep.matrices[v] * (s[v, l] / s[0, l])
                  for v in range(k + 1))
        dev = float(np.max(np.abs(proj / s[0, l] ** 2 - rhs)))
        worst = max(worst, dev)
    report["part2"] = worst
    report["ok"] = bool(report["part1"] <= tol and worst <= tol
                        and report["vacuum_multiplicity"] == 1
                        and report["vacuum_positive"])
    return report


def exponent_membership_check(nimrep, j_list):
    """Integer-spin exponent membership forced by a nonzero sine.

    For each half-integer j in j_list (twice-spin int), every integer spin
    i with sin(pi (2i+1)(2j+1)/(k+2)) != 0 must appear among the graph's
    exponents.  Returns a per-j report.
    """
    k = nimrep.level
    kappa = k + 2
    present = {two_mu for two_mu, _ in nimrep.exponents}
    report = {}
    for two_j in j_list:
        required = []
        for two_i in range(0, k + 1, 2):
            if (two_i + 1) * (two_j + 1) % kappa != 0:
                required.append(two_i)
        missing = [two_i for two_i in required if two_i not in present]
        report[two_j] = {"required": required, "missing": missing}
    report["ok"] = all(not v["missing"] for key, v in report.items()
                       if key != "ok")
    return report


def dot_graph(graph):
    """Graphviz source for the fusion graph of M_{1/2}."""
    lines = ["graph %s {" % _dot_id(graph.name)]
    lines.append('  layout=neato;')
    for idx, name in enumerate(graph.vertices):
        lines.append('  n%d [label="%s"];' % (idx, _dot_escape(name)))
    n = len(graph.vertices)
    for i in range(n):
        for j in range(i + 1, n):
            if graph.adjacency[i, j]:
                lines.append("  n%d -- n%d;" % (i, j))
    lines.append("}")
    return "\n".join(lines) + "\n"


def _dot_id(name):
    return "".join(ch if ch.isalnum() else "_" for ch in name)


def _dot_escape(text):
    return text.replace("\\", "\\\\").replace('"', '\\"')
