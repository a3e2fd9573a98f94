"""Exact SU(2) level-k fusion ring.

Labels are twice-spin integers (two_j in 0..k) so all label arithmetic is
integral; the display layer renders halves ("3/2").  Formal sectors are
sparse maps {two_j: multiplicity}.  Fusion multiplicities come from the
combinatorial rule only; the Verlinde formula lives in `modular` as an
independent cross-check oracle.
"""

from dataclasses import dataclass
from fractions import Fraction

import numpy as np


def parse_label(text):
    """Parse a spin label rendered as decimal halves: "3/2" -> 3, "2" -> 4.

    Accepts ints/floats that are exact (half-)integers as a convenience.
    """
    if isinstance(text, str):
        value = Fraction(text)
    else:
        value = Fraction(text)
    two_j = value * 2
    if two_j.denominator != 1 or two_j < 0:
        raise ValueError("not a nonnegative half-integer label: %r" % (text,))
    return int(two_j)


def format_label(two_j):
    """Render a twice-spin integer as decimal halves: 3 -> "3/2", 4 -> "2"."""
    if two_j % 2 == 0:
        return str(two_j // 2)
    return "%d/2" % two_j


@dataclass(frozen=True)
class FusionRing:
    """SU(2) level-k fusion data: labels 0..k (twice spin)."""

    k: int

    def labels(self):
        return range(self.k + 1)

    def check_label(self, a):
        if not isinstance(a, (int, np.integer)) or not 0 <= a <= self.k:
            raise ValueError(
                "label %r out of range for level %d" % (a, self.k))

    def fuse_labels(self, a, b):
        """Fusion channels of two irreducible labels (each with mult 1)."""
        self.check_label(a)
        self.check_label(b)
        top = min(a + b, 2 * self.k - a - b)
        return list(range(abs(a - b), top + 1, 2))

    def n(self, a, b, c):
        """Fusion multiplicity N_{ab}^c (0 or 1 for SU(2)_k)."""
        self.check_label(c)
        return 1 if c in self.fuse_labels(a, b) else 0

    def table(self):
        """Full N[a][b][c] table as an integer array of shape (k+1,)*3."""
        n = self.k + 1
        table = np.zeros((n, n, n), dtype=int)
        for a in self.labels():
            for b in self.labels():
                for c in self.fuse_labels(a, b):
                    table[a, b, c] = 1
        return table

    def qint(self, n):
        """Quantum integer [n] = sin(n pi/(k+2)) / sin(pi/(k+2))."""
        kappa = self.k + 2
        return np.sin(n * np.pi / kappa) / np.sin(np.pi / kappa)

    def qdim(self, a):
        """Quantum dimension d_a = [2a+1] with a the twice-spin label."""
        self.check_label(a)
        return self.qint(a + 1)

    def qdims(self):
        return np.array([self.qdim(a) for a in self.labels()])

    def global_dim_sq(self):
        """Sum of squared quantum dimensions, sum_a d_a^2."""
        return float(np.sum(self.qdims() ** 2))


def make_level(k):
    """Build the level-k ring; rejects k < 1."""
    if not isinstance(k, (int, np.integer)) or k < 1:
        raise ValueError("level must be a positive integer, got %r" % (k,))
    return FusionRing(int(k))


def sector(*labels):
    """Formal sector from irreducible labels; repeats add multiplicity."""
    out = {}
    for a in labels:
        out[a] = out.get(a, 0) + 1
    return out


def add(a, b):
    out = dict(a)
    for label, mult in b.items():
        out[label] = out.get(label, 0) + mult
    return {label: m for label, m in out.items() if m}


def fuse(ring, a, b):
    """Bilinear extension of the fusion rule to formal sectors."""
    out = {}
    for la, ma in a.items():
        for lb, mb in b.items():
            for lc in ring.fuse_labels(la, lb):
                out[lc] = out.get(lc, 0) + ma * mb
    return out


def pairing(ring, a, b):
    """Frobenius pairing <a, b> = sum of products of multiplicities."""
    for label in a:
        ring.check_label(label)
    for label in b:
        ring.check_label(label)
    return sum(mult * b.get(label, 0) for label, mult in a.items())
