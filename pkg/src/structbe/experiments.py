"""Experiment harness: fixed audit instances (ex71, ex56) and randomized
solver-stability sweeps (ex72 Toeplitz, ex73 symmetric-Toeplitz)."""

import numpy as np

from .backward_error import (
    S0,
    S2,
    S3,
    SaddleSystem,
    Weights,
    compute_be,
    rigal_gaches,
)
from .solvers import gep, gmres
from .structured import build_sym_toeplitz

EX72_HEADER = ("n", "eta_u", "eta_sps", "eta_s2", "eta_s2_sps")
EX73_HEADER = ("n", "eta_u", "eta_sps", "eta_s3", "eta_s3_sps")


def ex71_system():
    A = np.array(
        [
            [1e-6, 0, 1e3, 0],
            [1e8, 1e-6, 0, 1e3],
            [10, 1e8, 1e-6, 0],
            [0, 10, 1e8, 1e-6],
        ]
    )
    B = np.array(
        [
            [1e-5, 1e7, 0, 0],
            [1e5, 1e-5, 1e7, 0],
            [0, 1e5, 1e-5, 1e7],
            [0, 0, 1e5, 1e-5],
        ]
    )
    C = np.array(
        [
            [0, 1e8, -60, 0],
            [-0.5, 0, 1e8, -60],
            [0, -0.5, 0, 1e8],
            [0, 0, -0.5, 0],
        ]
    )
    f = np.array([1e8, 0, 1e3, 0])
    g = np.array([1e-8, 0, 0, 0])
    return SaddleSystem(A=A, B=B, C=C, f=f, g=g)


def run_ex71():
    """GEP solution of the fixed ill-scaled Toeplitz instance, audited with
    unit weights (the published BE values correspond to w_i = 1)."""
    sys = ex71_system()
    out = gep(sys.full_matrix(), sys.rhs())
    x, y = out.solution[: sys.n], out.solution[sys.n :]
    w = Weights.absolute()
    return {
        "eta_u": rigal_gaches(sys, x, y),
        "eta_s2": compute_be(sys, x, y, w, S2, sparsity=False).eta,
        "eta_s2_sps": compute_be(sys, x, y, w, S2, sparsity=True).eta,
    }


def ex56_system():
    A = np.eye(4)
    B = np.array([[2.0, 1, 3, 1], [-1, 2, 1, 1]])
    C = np.zeros((2, 2))
    f = np.array([-1.0, 0, 2, 3])
    g = np.zeros(2)
    return SaddleSystem(A=A, B=B, C=C, f=f, g=g)


EX56_SOLUTION = np.array([-1.495, 1.505, 1.505, 1.505, 1.005, -0.495])


def run_ex56():
    """Dense BE of the fixed 2x4 instance with only B and f perturbed."""
    sys = ex56_system()
    x, y = EX56_SOLUTION[:4], EX56_SOLUTION[4:]
    w = Weights(0.0, 1.0, 0.0, 1.0, 0.0)
    report = compute_be(sys, x, y, w, S0, sparsity=False)
    return {"eta": report.eta, "feasible": report.feasible}


def _sprand(rng, n, density):
    # Bernoulli(density) mask over uniform(0, 1) values
    return rng.random(n) * (rng.random(n) < density)


def _toeplitz_from_col_row(col, row):
    import scipy.linalg

    return scipy.linalg.toeplitz(col, row)


def ex72_instance(n, rng):
    """Random sparse Toeplitz saddle system: first columns sparse-uniform with
    densities 0.4 / 0.1 / 0.1, first rows standard normal; the shared corner
    entry is taken from the dense row vector."""
    blocks = []
    for density in (0.4, 0.1, 0.1):
        col = _sprand(rng, n, density)
        row = rng.standard_normal(n)
        col[0] = row[0]
        blocks.append(_toeplitz_from_col_row(col, row))
    A, B, C = blocks
    f = rng.standard_normal(n)
    g = rng.standard_normal(n)
    return SaddleSystem(A=A, B=B, C=C, f=f, g=g)


def run_ex72(sizes, seed, tol=1e-7):
    rng = np.random.default_rng(seed)
    w = Weights.absolute()
    rows = []
    for n in sizes:
        sys = ex72_instance(n, rng)
        out = gmres(sys.full_matrix(), sys.rhs(), tol=tol)
        x, y = out.solution[:n], out.solution[n:]
        rows.append(
            (
                n,
                rigal_gaches(sys, x, y),
                compute_be(sys, x, y, w, S0, sparsity=True).eta,
                compute_be(sys, x, y, w, S2, sparsity=False).eta,
                compute_be(sys, x, y, w, S2, sparsity=True).eta,
            )
        )
    return rows


def ex73_instance(n, rng, mu=0.01):
    t = np.exp(-0.5 * np.arange(n) ** 2) / np.sqrt(2 * np.pi)
    B = build_sym_toeplitz(t)
    return SaddleSystem(
        A=np.eye(n),
        B=B,
        C=-mu * np.eye(n),
        f=rng.standard_normal(n),
        g=np.zeros(n),
        tags={"B": "symToeplitz"},
    )


def run_ex73(sizes, seed, tol=1e-13):
    # unpreconditioned GMRES, run close to machine precision so that the
    # audited solutions are converged
    rng = np.random.default_rng(seed)
    rows = []
    for n in sizes:
        sys = ex73_instance(n, rng)
        out = gmres(sys.full_matrix(), sys.rhs(), tol=tol)
        x, y = out.solution[:n], out.solution[n:]
        w = Weights.relative(sys)  # w5 = 0 since g = 0
        rows.append(
            (
                n,
                rigal_gaches(sys, x, y),
                compute_be(sys, x, y, w, S0, sparsity=True).eta,
                compute_be(sys, x, y, w, S3, sparsity=False).eta,
                compute_be(sys, x, y, w, S3, sparsity=True).eta,
            )
        )
    return rows
