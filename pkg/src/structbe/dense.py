"""Dense matrix/vector kernel: Hadamard and Kronecker products, column-major
vectorization, norms, numerical rank, and minimum-norm least squares."""

import os
from dataclasses import dataclass

import numpy as np

EPS = np.finfo(float).eps


class ShapeError(ValueError):
    pass


@dataclass(frozen=True)
class MinNormSolution:
    solution: np.ndarray
    residual_norm: float
    effective_rank: int


def _rank_rcond(x, tol):
    if tol is not None:
        return tol
    env = os.environ.get("STRUCTBE_RANK_TOL")
    if env is not None:
        return float(env)
    return EPS * max(x.shape)


def consistency_tol(default=1e-10):
    env = os.environ.get("STRUCTBE_CONSISTENCY_TOL")
    return float(env) if env is not None else default


def hadamard(a, b):
    a = np.asarray(a)
    b = np.asarray(b)
    if a.shape != b.shape:
        raise ShapeError(f"hadamard: shapes {a.shape} and {b.shape} differ")
    return a * b


def kron(a, b):
    return np.kron(np.asarray(a), np.asarray(b))


def vec_col_major(a):
    # stacks columns: vec(A) = [a_1; a_2; ...; a_n]
    return np.asarray(a).reshape(-1, order="F")


def unvec_col_major(v, rows, cols):
    v = np.asarray(v)
    if v.size != rows * cols:
        raise ShapeError(f"unvec: length {v.size} != {rows}*{cols}")
    return v.reshape(rows, cols, order="F")


def frob_norm(a):
    return float(np.linalg.norm(np.asarray(a), "fro"))


def sign_pattern(a):
    return (np.asarray(a) != 0).astype(float)


def min_norm_solve(x, r, tol=None):
    """Minimum-Euclidean-norm z with ||x z - r||_2 minimal, via SVD."""
    x = np.asarray(x)
    r = np.asarray(r)
    if r.shape[0] != x.shape[0]:
        raise ShapeError(f"min_norm_solve: rhs length {r.shape[0]} != rows {x.shape[0]}")
    z, _, rank, _ = np.linalg.lstsq(x, r, rcond=_rank_rcond(x, tol))
    res = float(np.linalg.norm(x @ z - r))
    return MinNormSolution(solution=z, residual_norm=res, effective_rank=int(rank))


def numerical_rank(x, tol=None):
    x = np.asarray(x)
    if x.size == 0:
        return 0
    sv = np.linalg.svd(x, compute_uv=False)
    if sv.size == 0 or sv[0] == 0:
        return 0
    return int(np.count_nonzero(sv > _rank_rcond(x, tol) * sv[0]))
