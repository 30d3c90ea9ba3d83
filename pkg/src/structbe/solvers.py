"""Reference solvers whose approximate solutions are audited: Gaussian
elimination with partial pivoting (GEP) and unrestarted GMRES."""

from dataclasses import dataclass, field

import numpy as np
import scipy.linalg

from .dense import ShapeError


class SingularMatrixError(np.linalg.LinAlgError):
    pass


@dataclass(frozen=True)
class SolveOutcome:
    solution: np.ndarray
    iterations: int
    rel_residual: float
    converged: bool
    residual_history: tuple = field(default=())


def _rel_residual(a, d, u):
    dn = np.linalg.norm(d)
    return float(np.linalg.norm(d - a @ u) / dn) if dn > 0 else float(np.linalg.norm(a @ u))


def gep(a_full, d):
    a = np.atleast_2d(np.asarray(a_full))
    d = np.atleast_1d(np.asarray(d))
    if a.shape[0] != a.shape[1]:
        raise ShapeError(f"gep needs a square matrix, got {a.shape}")
    if d.shape != (a.shape[0],):
        raise ShapeError(f"rhs length {d.shape} != {a.shape[0]}")
    import warnings

    with warnings.catch_warnings():
        warnings.simplefilter("error", scipy.linalg.LinAlgWarning)
        try:
            lu, piv = scipy.linalg.lu_factor(a)
        except scipy.linalg.LinAlgWarning as exc:
            raise SingularMatrixError(str(exc)) from exc
    if np.any(np.diag(lu) == 0) or not np.all(np.isfinite(lu)):
        raise SingularMatrixError("zero pivot encountered after partial pivoting")
    u = scipy.linalg.lu_solve((lu, piv), d)
    return SolveOutcome(
        solution=u, iterations=0, rel_residual=_rel_residual(a, d, u), converged=True
    )


def gmres(a_full, d, tol, max_iter=None):
    """GMRES with modified Gram-Schmidt Arnoldi, zero initial guess, no restart."""
    a = np.atleast_2d(np.asarray(a_full))
    d = np.atleast_1d(np.asarray(d)).astype(np.result_type(a, d, float))
    if tol <= 0:
        raise ValueError("tol must be positive")
    N = d.size
    max_iter = N if max_iter is None else min(max_iter, N)
    dn = np.linalg.norm(d)
    if dn == 0:
        return SolveOutcome(np.zeros(N, dtype=d.dtype), 0, 0.0, True, (0.0,))
    Q = np.zeros((N, max_iter + 1), dtype=d.dtype)
    H = np.zeros((max_iter + 1, max_iter), dtype=d.dtype)
    Q[:, 0] = d / dn
    history = []
    y = np.zeros(0)
    k = 0
    for k in range(max_iter):
        w = a @ Q[:, k]
        for j in range(k + 1):
            H[j, k] = np.vdot(Q[:, j], w)
            w = w - H[j, k] * Q[:, j]
        H[k + 1, k] = np.linalg.norm(w)
        breakdown = abs(H[k + 1, k]) < 1e3 * np.finfo(float).tiny
        if not breakdown:
            Q[:, k + 1] = w / H[k + 1, k]
        e1 = np.zeros(k + 2, dtype=d.dtype)
        e1[0] = dn
        y, _, _, _ = np.linalg.lstsq(H[: k + 2, : k + 1], e1, rcond=None)
        history.append(float(np.linalg.norm(H[: k + 2, : k + 1] @ y - e1) / dn))
        if history[-1] <= tol or breakdown:
            break
    u = Q[:, : k + 1] @ y
    rel = _rel_residual(a, d, u)
    return SolveOutcome(
        solution=u,
        iterations=k + 1,
        rel_residual=rel,
        converged=rel <= tol,
        residual_history=tuple(history),
    )
