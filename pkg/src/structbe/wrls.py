"""Weighted regularized least squares as a saddle-point system and the
structured backward error zeta(z~) of an approximate stationary pair (r~, z~).

The stationarity conditions of min_z ||W^(1/2)(K^T z - f)||^2 + lambda ||z||^2
form the saddle system [[W^-1, K^T], [K, -lambda I]] [r; z] = [f; 0]; only K
and f are perturbed (structured, sparsity-preserving), W and lambda are data.
"""

from dataclasses import dataclass

import numpy as np
import scipy.linalg

from .backward_error import SaddleSystem
from .dense import ShapeError, min_norm_solve, numerical_rank, sign_pattern
from .structured import (
    SYM_TOEPLITZ,
    TOEPLITZ,
    StructuredGenerator,
    build_sym_toeplitz,
    build_toeplitz,
    g_matrix,
    i_matrix,
    k_matrix,
    scaling_for,
    vec_of_structure,
)


@dataclass(frozen=True)
class WRLSProblem:
    W: np.ndarray
    K: np.ndarray
    lam: float
    f: np.ndarray
    k_kind: str

    def __post_init__(self):
        W = np.atleast_2d(np.asarray(self.W))
        K = np.atleast_2d(np.asarray(self.K))
        f = np.atleast_1d(np.asarray(self.f))
        object.__setattr__(self, "W", W)
        object.__setattr__(self, "K", K)
        object.__setattr__(self, "f", f)
        n = W.shape[0]
        if W.shape != (n, n):
            raise ShapeError("W must be square")
        if np.linalg.norm(W - W.T) > 1e-12 * max(np.linalg.norm(W), 1e-300):
            raise ValueError("W must be symmetric")
        scipy.linalg.cholesky(W)  # SPD check; raises LinAlgError otherwise
        if self.lam <= 0:
            raise ValueError("lambda must be positive")
        if self.k_kind not in (TOEPLITZ, SYM_TOEPLITZ):
            raise ValueError(f"unsupported kernel structure {self.k_kind!r}")
        if K.shape[1] != n or f.shape != (n,):
            raise ShapeError("K columns and f length must match W")
        vec_of_structure(K, self.k_kind)

    @property
    def n(self):
        return self.W.shape[0]

    @property
    def m(self):
        return self.K.shape[0]


@dataclass(frozen=True)
class WRLSReport:
    zeta: float
    dK: np.ndarray
    df: np.ndarray
    feasible: bool
    r_tilde_f: np.ndarray
    r_tilde_g: np.ndarray


def _w_solve(p, v):
    c = scipy.linalg.cho_factor(p.W)
    return scipy.linalg.cho_solve(c, v)


def to_saddle(p):
    a_inv = _w_solve(p, np.eye(p.n))
    return SaddleSystem(
        A=a_inv,
        B=p.K,
        C=-p.lam * np.eye(p.m),
        f=p.f,
        g=np.zeros(p.m),
        tags={"B": p.k_kind},
    )


def wrls_residual(p, r_tilde, z_tilde):
    r = np.atleast_1d(np.asarray(r_tilde))
    z = np.atleast_1d(np.asarray(z_tilde))
    if r.shape != (p.n,) or z.shape != (p.m,):
        raise ShapeError(f"expected lengths ({p.n},), ({p.m},), got {r.shape}, {z.shape}")
    rf = p.f - _w_solve(p, r) - p.K.T @ z
    rg = p.lam * z - p.K @ r
    return rf, rg


def compute_zeta(p, r_tilde, z_tilde, w2, w4, tol=None):
    """Structured BE of (r_tilde, z_tilde): smallest sparsity-preserving
    (dK, df) with W^-1 r + (K+dK)^T z = f + df and (K+dK) r = lambda z."""
    if w2 <= 0 or w4 <= 0:
        raise ValueError("w2 and w4 must be positive")
    r = np.atleast_1d(np.asarray(r_tilde))
    z = np.atleast_1d(np.asarray(z_tilde))
    rf, rg = wrls_residual(p, r, z)
    rd = np.concatenate([rf, rg])
    n, m = p.n, p.m
    scale = scaling_for(p.k_kind, m, n)
    mask = sign_pattern(vec_of_structure(p.K, p.k_kind))
    cols = mask / scale
    if p.k_kind == TOEPLITZ:
        top_k = g_matrix(z, n) * cols[None, :]
        bot_k = k_matrix(r, m) * cols[None, :]
    else:
        top_k = i_matrix(z) * cols[None, :]
        bot_k = i_matrix(r) * cols[None, :]
    X = np.block(
        [[top_k / w2, -np.eye(n) / w4], [bot_k / w2, np.zeros((m, n))]]
    )
    feasible = numerical_rank(X, tol) == numerical_rank(np.column_stack([X, rd]), tol)
    if not feasible:
        return WRLSReport(
            zeta=float("nan"),
            dK=np.zeros_like(p.K, dtype=float),
            df=np.zeros(n),
            feasible=False,
            r_tilde_f=rf,
            r_tilde_g=rg,
        )
    sol = min_norm_solve(X, rd, tol)
    k_cols = len(scale)
    gen = sol.solution[:k_cols] / (w2 * scale) * mask
    if p.k_kind == TOEPLITZ:
        dK = build_toeplitz(StructuredGenerator(TOEPLITZ, m, n, gen))
    else:
        dK = build_sym_toeplitz(gen)
    df = sol.solution[k_cols:] / w4
    return WRLSReport(
        zeta=float(np.linalg.norm(sol.solution)),
        dK=dK,
        df=df,
        feasible=True,
        r_tilde_f=rf,
        r_tilde_g=rg,
    )
