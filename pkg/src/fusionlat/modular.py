"""Modular data for SU(2)_k: S, T, Y matrices, central charge residue,
and the Verlinde formula used as an independent oracle for the fusion rule.

Conventions recorded once: the univalence of the label j is
omega_j = exp(2 pi i j(j+1)/(k+2)) and T = exp(-2 pi i c0/24) diag(omega).
All checks carry explicit tolerances; integrality is recovered by rounding
with a guard, never assumed.
"""

from dataclasses import dataclass

import numpy as np

from .fusion import make_level

VERLINDE_GUARD = 1e-6
RELATION_TOL = 1e-8


def s_matrix(k):
    """S[i][j] = sqrt(2/(k+2)) sin(pi (2i+1)(2j+1)/(k+2)), labels twice-spin."""
    ring = make_level(k)
    kappa = k + 2
    idx = np.arange(k + 1) + 1  # 2j+1 for two_j = 0..k
    grid = np.outer(idx, idx)
    return np.sqrt(2.0 / kappa) * np.sin(np.pi * grid / kappa)


def conformal_weights(k):
    """Univalence omega_j = exp(2 pi i j(j+1)/(k+2)) for two_j = 0..k."""
    make_level(k)
    two_j = np.arange(k + 1)
    h = two_j * (two_j + 2) / 4.0  # j(j+1) with j = two_j/2
    return np.exp(2j * np.pi * h / (k + 2))


def y_matrix(k):
    """Y[l][m] = sum_n N[l][m][n] (omega_l omega_m / omega_n) d_n."""
    ring = make_level(k)
    table = ring.table()
    omega = conformal_weights(k)
    dims = ring.qdims()
    weighted = dims / omega  # d_n / omega_n
    base = np.tensordot(table, weighted, axes=([2], [0]))
    return base * np.outer(omega, omega)


def gauss_sum(k):
    """a = sum_l d_l^2 / omega_l."""
    ring = make_level(k)
    dims = ring.qdims()
    omega = conformal_weights(k)
    return complex(np.sum(dims ** 2 / omega))


def central_charge_residue(k):
    """c0 in [0, 8) with a = |a| exp(-2 pi i c0/8)."""
    a = gauss_sum(k)
    c0 = (-np.angle(a) * 8.0 / (2.0 * np.pi)) % 8.0
    return float(c0)


def t_matrix(k):
    """T = exp(-2 pi i c0/24) diag(omega)."""
    omega = conformal_weights(k)
    c0 = central_charge_residue(k)
    return np.diag(np.exp(-2j * np.pi * c0 / 24.0) * omega)


def verlinde(k, guard=VERLINDE_GUARD):
    """Fusion coefficients from the S matrix.

    N[l][m][n] = sum_d S[l][d] S[m][d] conj(S[n][d]) / S[0][d], rounded to
    the nearest integer.  Raises if any entry sits farther than `guard`
    from an integer.  Independent of the combinatorial rule by design.
    """
    s = s_matrix(k).astype(complex)
    raw = np.einsum("ld,md,nd,d->lmn", s, s, s.conj(), 1.0 / s[0])
    rounded = np.rint(raw.real)
    err = np.max(np.abs(raw - rounded))
    if err > guard:
        raise ArithmeticError(
            "Verlinde entry %.3e away from integer at level %d" % (err, k))
    return rounded.astype(int)


@dataclass
class ModularData:
    k: int
    s: np.ndarray
    t: np.ndarray
    y: np.ndarray
    omega: np.ndarray
    c0: float


def make_modular(k):
    return ModularData(k=k, s=s_matrix(k), t=t_matrix(k), y=y_matrix(k),
                       omega=conformal_weights(k),
                       c0=central_charge_residue(k))


def modular_relations_check(k, tol=RELATION_TOL):
    """Max deviation per relation: unitarity, ST relation, S^2 = C, TC = CT.

    The conjugation matrix C is the identity (self-conjugate labels).
    Returns {"relation": max_abs_deviation}; `ok` iff all within tol.
    """
    md = make_modular(k)
    s = md.s.astype(complex)
    t = md.t
    eye = np.eye(k + 1)
    report = {}
    report["s_unitary"] = float(np.max(np.abs(s @ s.conj().T - eye)))
    report["t_unitary"] = float(np.max(np.abs(t @ t.conj().T - eye)))
    tinv = np.diag(1.0 / np.diag(t))
    report["sts"] = float(np.max(np.abs(s @ t @ s - tinv @ s @ tinv)))
    c = s @ s
    report["s_squared_conjugation"] = float(np.max(np.abs(c - eye)))
    report["tc_commute"] = float(np.max(np.abs(t @ c - c @ t)))
    report["y_vs_s"] = float(np.max(np.abs(np.abs(gauss_sum(k)) * s - md.y)))
    report["ok"] = bool(all(v <= tol for key, v in report.items()
                            if key != "ok"))
    return report


def y_invertible(k, tol=1e-8):
    """The Y matrix is invertible for SU(2)_k; asserted, not branched on."""
    y = y_matrix(k)
    return bool(abs(np.linalg.det(y)) > tol)
