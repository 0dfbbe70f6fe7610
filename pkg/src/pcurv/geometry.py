"""Pointwise differential geometry of immersed surface jets.

Everything here is a pure function of a second-order jet (f, Df, D2f) at one
parameter point, with the two parameter indices written first and the ambient
index last: Df has shape (2, n), D2f has shape (2, 2, n).  All functions also
accept leading batch axes, which is how the rest of the package calls them.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DegenerateJet

# Below this, the normal projector loses all significant digits for
# order-one jets.
DET_G_FLOOR = 1e-14


@dataclass(frozen=True)
class Jet2:
    """Second-order jet of an immersion at one parameter point."""

    f: np.ndarray     # (n,)
    Df: np.ndarray    # (2, n)  rows are the partials along the two parameters
    D2f: np.ndarray   # (2, 2, n), symmetric in the first two axes

    def __post_init__(self):
        f = np.asarray(self.f, dtype=float)
        Df = np.asarray(self.Df, dtype=float)
        D2f = np.asarray(self.D2f, dtype=float)
        object.__setattr__(self, "f", f)
        object.__setattr__(self, "Df", Df)
        object.__setattr__(self, "D2f", D2f)
        if Df.shape != (2, f.shape[-1]) or D2f.shape != (2, 2, f.shape[-1]):
            raise ValueError("jet arrays have inconsistent shapes")
        if not np.array_equal(D2f[0, 1], D2f[1, 0]):
            raise ValueError("D2f must be exactly symmetric in the parameter indices")

    @property
    def n(self) -> int:
        return self.f.shape[-1]


@dataclass(frozen=True)
class CurvatureData:
    """All pointwise first/second fundamental form data at one jet."""

    g: np.ndarray         # (2, 2)
    ginv: np.ndarray      # (2, 2)
    detg: float
    sqrtdetg: float
    Pperp: np.ndarray     # (n, n) orthogonal projector onto the normal space
    A: np.ndarray         # (2, 2, n) second fundamental form
    H: np.ndarray         # (n,) mean curvature vector
    normA2: float
    normH2: float


@dataclass(frozen=True)
class Christoffel:
    """Levi-Civita symbols Gamma^gamma_{alpha beta}, symmetric in (alpha, beta)."""

    Gamma: np.ndarray     # (2, 2, 2), last axis is the upper index


def metric(Df: np.ndarray) -> np.ndarray:
    """Induced metric g_ab = <d_a f, d_b f>; batched over leading axes."""
    return np.einsum("...ak,...bk->...ab", Df, Df)


def inv22(g: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Closed-form inverse and determinant of a (batched) 2x2 matrix."""
    det = g[..., 0, 0] * g[..., 1, 1] - g[..., 0, 1] * g[..., 1, 0]
    ginv = np.empty_like(g)
    ginv[..., 0, 0] = g[..., 1, 1]
    ginv[..., 1, 1] = g[..., 0, 0]
    ginv[..., 0, 1] = -g[..., 0, 1]
    ginv[..., 1, 0] = -g[..., 1, 0]
    ginv = ginv / det[..., None, None]
    return ginv, det


def curvature_fields(Df: np.ndarray, D2f: np.ndarray, check: bool = True) -> dict:
    """Batched fundamental-form fields for arrays of jets.

    Returns a dict with keys g, ginv, detg, sq, T, P, A, Ar, A2, H, H2, Htot.
    T[..., a, k] = g^{ab} Df[b, k] are the raised tangent vectors; Ar is the
    index-raised second fundamental form A^{ab}; Htot = g^{ab} D2f_{ab} is the
    full (not normal-projected) trace of the Hessian.
    """
    g = metric(Df)
    ginv, detg = inv22(g)
    if check and np.min(detg) <= DET_G_FLOOR:
        flat = np.argmin(detg)
        raise DegenerateJet(
            f"det g = {np.min(detg):.3e} <= {DET_G_FLOOR:g} at flat node index {flat}",
            node=int(flat),
        )
    sq = np.sqrt(detg)
    T = np.einsum("...ab,...bk->...ak", ginv, Df)
    n = Df.shape[-1]
    P = np.eye(n) - np.einsum("...ak,...al->...kl", T, Df)
    A = np.einsum("...kl,...abl->...abk", P, D2f)
    Ar = np.einsum("...ac,...bd,...cdk->...abk", ginv, ginv, A)
    A2 = np.einsum("...abk,...abk->...", A, Ar)
    H = np.einsum("...ab,...abk->...k", ginv, A)
    H2 = np.einsum("...k,...k->...", H, H)
    Htot = np.einsum("...ab,...abk->...k", ginv, D2f)
    return dict(g=g, ginv=ginv, detg=detg, sq=sq, T=T, P=P, A=A, Ar=Ar,
                A2=A2, H=H, H2=H2, Htot=Htot)


def curvature_data(jet: Jet2) -> CurvatureData:
    """All quantities of the pointwise curvature dictionary at one jet.

    Raises DegenerateJet when det g <= 1e-14 (non-immersed sample point).
    """
    fields = curvature_fields(jet.Df, jet.D2f)
    return CurvatureData(
        g=fields["g"], ginv=fields["ginv"],
        detg=float(fields["detg"]), sqrtdetg=float(fields["sq"]),
        Pperp=fields["P"], A=fields["A"], H=fields["H"],
        normA2=float(fields["A2"]), normH2=float(fields["H2"]),
    )


def christoffel(g: np.ndarray, Dg: np.ndarray) -> Christoffel:
    """Levi-Civita symbols from the metric and its parameter derivatives.

    Dg[..., c, a, b] = d_c g_{ab}.  Gamma^g_{ab} = g^{gd}(d_a g_{db} +
    d_b g_{da} - d_d g_{ab}) / 2, returned as Gamma[..., a, b, g].
    """
    g = np.asarray(g, dtype=float)
    Dg = np.asarray(Dg, dtype=float)
    ginv, detg = inv22(g)
    if np.min(detg) <= DET_G_FLOOR:
        raise DegenerateJet(f"det g = {np.min(detg):.3e} not SPD")
    bracket = (np.einsum("...adb->...abd", Dg) + np.einsum("...bda->...abd", Dg)
               - np.einsum("...dab->...abd", Dg))
    Gamma = 0.5 * np.einsum("...gd,...abd->...abg", ginv, bracket)
    return Christoffel(Gamma=Gamma)


# ---------------------------------------------------------------------------
# Slot derivatives of the metric quantities with respect to the first-jet
# entries p^k_m = Df[m, k].  Derivations are written out in
# docs/slot_derivatives.md; tests cross-check them against central finite
# differences and a complex-step oracle.
# ---------------------------------------------------------------------------

def dsqrtdetg_dDf(sq: np.ndarray, T: np.ndarray) -> np.ndarray:
    """d sqrt(det g) / d Df[m, k] = sqrt(det g) * T[m, k]."""
    return sq[..., None, None] * T


def dginv_dDf(ginv: np.ndarray, T: np.ndarray) -> np.ndarray:
    """d g^{cd} / d Df[m, k], returned as [..., m, k, c, d]."""
    term = np.einsum("...cm,...dk->...mkcd", ginv, T)
    return -(term + np.einsum("...mkcd->...mkdc", term))


def dPperp_dDf(T: np.ndarray, P: np.ndarray) -> np.ndarray:
    """d P_{lq} / d Df[m, k], returned as [..., m, k, l, q].

    Equals -(T^m_l P_{kq} + P_{kl} T^m_q): pushing a tangent slot moves the
    projector by rank-one couplings of the raised tangent with P e_k.
    """
    term = np.einsum("...ml,...kq->...mklq", T, P)
    return -(term + np.einsum("...mklq->...mkql", term))
