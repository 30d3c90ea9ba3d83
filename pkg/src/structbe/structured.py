"""Circulant / Toeplitz / symmetric-Toeplitz construction and deconstruction,
the lemma builder matrices, and the Frobenius-compensating scaling diagonals.

Generator conventions:
  circulant    gen = first column, length n
  toeplitz     gen = [t_{-m+1}, ..., t_{-1}, t_0, t_1, ..., t_{n-1}], length m+n-1,
               entry (i, j) = gen[(j - i) + m - 1] (0-based)
  symToeplitz  gen = [t_0, ..., t_{n-1}] = first row, length n
"""

from dataclasses import dataclass

import numpy as np
import scipy.linalg

from .dense import ShapeError

CIRCULANT = "circulant"
TOEPLITZ = "toeplitz"
SYM_TOEPLITZ = "symToeplitz"
KINDS = (CIRCULANT, TOEPLITZ, SYM_TOEPLITZ)


class StructureViolationError(ValueError):
    pass


@dataclass(frozen=True)
class StructuredGenerator:
    kind: str
    rows: int
    cols: int
    gen: np.ndarray

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown structure kind {self.kind!r}")
        gen = np.atleast_1d(np.asarray(self.gen))
        object.__setattr__(self, "gen", gen)
        if self.kind == TOEPLITZ:
            want = self.rows + self.cols - 1
        else:
            if self.rows != self.cols:
                raise ShapeError(f"{self.kind} requires rows == cols")
            want = self.cols
        if gen.size != want:
            raise ShapeError(f"{self.kind} generator length {gen.size}, expected {want}")


def gen_length(kind, m, n):
    return m + n - 1 if kind == TOEPLITZ else n


def build_circulant(c):
    c = np.atleast_1d(np.asarray(c))
    if c.size == 0:
        raise ShapeError("empty circulant generator")
    return scipy.linalg.circulant(c)


def build_toeplitz(gen):
    if not isinstance(gen, StructuredGenerator) or gen.kind != TOEPLITZ:
        raise ShapeError("build_toeplitz expects a toeplitz StructuredGenerator")
    m = gen.rows
    col = gen.gen[m - 1 :: -1]  # t_0, t_{-1}, ..., t_{-m+1}
    row = gen.gen[m - 1 :]  # t_0, t_1, ..., t_{n-1}
    return scipy.linalg.toeplitz(col, row)


def build_sym_toeplitz(t):
    t = np.atleast_1d(np.asarray(t))
    return scipy.linalg.toeplitz(t)


def build(kind, gen, m, n):
    if kind == CIRCULANT:
        return build_circulant(gen)
    if kind == TOEPLITZ:
        return build_toeplitz(StructuredGenerator(TOEPLITZ, m, n, gen))
    return build_sym_toeplitz(gen)


def vec_of_structure(a, kind, tol=0.0):
    """Generator vector of a; raises StructureViolationError if a does not
    have the claimed structure to within absolute tolerance tol."""
    a = np.asarray(a)
    m, n = a.shape
    if kind == CIRCULANT:
        if m != n:
            raise StructureViolationError("circulant matrix must be square")
        gen = a[:, 0].copy()
    elif kind == TOEPLITZ:
        gen = np.concatenate([a[:0:-1, 0], a[0, :]])
    elif kind == SYM_TOEPLITZ:
        if m != n:
            raise StructureViolationError("symToeplitz matrix must be square")
        gen = a[0, :].copy()
    else:
        raise ValueError(f"unknown structure kind {kind!r}")
    rebuilt = build(kind, gen, m, n)
    err = np.abs(a - rebuilt).max() if a.size else 0.0
    if err > tol:
        raise StructureViolationError(f"matrix is not {kind} (max deviation {err:g})")
    return gen


def has_structure(a, kind, tol=0.0):
    try:
        vec_of_structure(a, kind, tol=tol)
        return True
    except StructureViolationError:
        return False


# Lemma builder matrices.  Each realizes a matrix-vector product against a
# structured matrix's generator: (A (.) Theta)x = builder(x) D_pattern gen.

cr_of_vector = build_circulant


def h_matrix(y):
    # entry (i, j) = y_{(i+j) mod n}, 0-based; (B (.) Theta)^T y = H_y D vec_C(B (.) Theta)
    y = np.atleast_1d(np.asarray(y))
    n = y.size
    i, j = np.indices((n, n))
    return y[(i + j) % n]


def k_matrix(x, m):
    # m x (m+n-1); row i carries x_0..x_{n-1} starting at column m-1-i
    x = np.atleast_1d(np.asarray(x))
    n = x.size
    K = np.zeros((m, m + n - 1), dtype=np.result_type(x, float))
    for i in range(m):
        K[i, m - 1 - i : m - 1 - i + n] = x
    return K


def g_matrix(y, n):
    # n x (m+n-1); row i carries y_{m-1}, ..., y_0 starting at column i
    y = np.atleast_1d(np.asarray(y))
    m = y.size
    G = np.zeros((n, m + n - 1), dtype=np.result_type(y, float))
    for i in range(n):
        G[i, i : i + m] = y[::-1]
    return G


def i_matrix(x):
    # Hankel part x_{i+k} (i+k < n) plus lower-triangular part x_{i-k} (1 <= k <= i)
    x = np.atleast_1d(np.asarray(x))
    n = x.size
    M = np.zeros((n, n), dtype=np.result_type(x, float))
    for i in range(n):
        for k in range(n):
            v = x[i + k] if i + k < n else 0.0
            if 1 <= k <= i:
                v = v + x[i - k]
            M[i, k] = v
    return M


def j1_matrix(x, m):
    x = np.atleast_1d(np.asarray(x))
    return np.kron(x.reshape(1, -1), np.eye(m))


def j2_matrix(y, n):
    y = np.atleast_1d(np.asarray(y))
    return np.kron(np.eye(n), y.reshape(1, -1))


def scaling_for(kind, m, n):
    """Diagonal d with ||diag(d) vec_of_structure(A)||_2 = ||A||_F for every
    matrix A of the given structure; returned as a 1-d array."""
    if kind == CIRCULANT:
        if m != n:
            raise ShapeError("circulant scaling requires m == n")
        return np.full(n, np.sqrt(n))
    if kind == TOEPLITZ:
        # entry p counts the length of diagonal with offset p-(m-1)
        counts = []
        for p in range(m + n - 1):
            off = p - (m - 1)
            counts.append(min(m, n - off) if off >= 0 else min(n, m + off))
        return np.sqrt(np.array(counts, dtype=float))
    if kind == SYM_TOEPLITZ:
        if m != n:
            raise ShapeError("symToeplitz scaling requires m == n")
        return np.sqrt(np.array([n] + [2 * (n - k) for k in range(1, n)], dtype=float))
    raise ValueError(f"unknown structure kind {kind!r}")
