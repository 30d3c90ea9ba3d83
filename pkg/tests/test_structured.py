import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from structbe import (
    ShapeError,
    StructuredGenerator,
    StructureViolationError,
    build_circulant,
    build_sym_toeplitz,
    build_toeplitz,
    scaling_for,
    sign_pattern,
    vec_of_structure,
)
from structbe.structured import (
    build,
    g_matrix,
    h_matrix,
    i_matrix,
    j1_matrix,
    j2_matrix,
    k_matrix,
)
from conftest import random_block


def test_build_circulant():
    expected = np.array([[5, 7, 3], [3, 5, 7], [7, 3, 5]], dtype=float)
    assert np.array_equal(build_circulant([5.0, 3.0, 7.0]), expected)
    assert np.array_equal(build_circulant([1.0]), [[1.0]])
    assert np.array_equal(build_circulant([1.0, 0, 0]), np.eye(3))
    with pytest.raises(ShapeError):
        build_circulant([])


def test_build_toeplitz():
    t = build_toeplitz(StructuredGenerator("toeplitz", 2, 2, [9.0, 1.0, 5.0]))
    assert np.array_equal(t, [[1, 5], [9, 1]])
    gen = np.zeros(5)
    gen[2] = 1.0  # t_0
    assert np.array_equal(
        build_toeplitz(StructuredGenerator("toeplitz", 3, 3, gen)), np.eye(3)
    )


def test_build_sym_toeplitz():
    assert np.array_equal(build_sym_toeplitz([2.0, 1.0]), [[2, 1], [1, 2]])
    assert np.array_equal(build_sym_toeplitz([1.0, 0, 0, 0]), np.eye(4))
    n = 8
    t = np.exp(-0.5 * np.arange(n) ** 2) / np.sqrt(2 * np.pi)
    b = build_sym_toeplitz(t)
    i, j = np.indices((n, n))
    assert np.allclose(b, np.exp(-0.5 * (i - j) ** 2) / np.sqrt(2 * np.pi))


def test_vec_of_structure_examples():
    a = np.array([[5, 7, 3], [3, 5, 7], [7, 3, 5]], dtype=float)
    assert np.array_equal(vec_of_structure(a, "circulant"), [5, 3, 7])
    assert np.array_equal(vec_of_structure(np.eye(3), "symToeplitz"), [1, 0, 0])
    with pytest.raises(StructureViolationError):
        vec_of_structure(np.array([[1.0, 2.0], [3.0, 5.0]]), "symToeplitz")


@settings(max_examples=60, deadline=None)
@given(
    st.sampled_from(["circulant", "toeplitz", "symToeplitz"]),
    st.integers(1, 16),
    st.integers(1, 16),
    st.integers(0, 10_000),
)
def test_round_trips(kind, m, n, seed):
    if kind != "toeplitz":
        m = n
    rng = np.random.default_rng(seed)
    a = random_block(rng, kind, m, n)
    gen = vec_of_structure(a, kind)
    assert np.array_equal(build(kind, gen, m, n), a)


def _rel_err(lhs, rhs):
    scale = max(np.linalg.norm(lhs), np.linalg.norm(rhs), 1e-300)
    return np.linalg.norm(lhs - rhs) / scale


def lemma31_errors(rng, n):
    a = random_block(rng, "circulant", n, n)
    m = random_block(rng, "circulant", n, n)
    x = rng.standard_normal(n)
    y = rng.standard_normal(n)
    theta = sign_pattern(m)
    d = np.diag(sign_pattern(vec_of_structure(m, "circulant")))
    masked = a * theta
    v = vec_of_structure(masked, "circulant")
    e1 = _rel_err(masked @ x, build_circulant(x) @ d @ v)
    e2 = _rel_err(masked.T @ y, h_matrix(y) @ d @ v)
    return e1, e2


def lemma41_errors(rng, m, n):
    a = random_block(rng, "toeplitz", m, n)
    mk = random_block(rng, "toeplitz", m, n)
    x = rng.standard_normal(n)
    y = rng.standard_normal(m)
    theta = sign_pattern(mk)
    d = np.diag(sign_pattern(vec_of_structure(mk, "toeplitz")))
    masked = a * theta
    v = vec_of_structure(masked, "toeplitz")
    e1 = _rel_err(masked @ x, k_matrix(x, m) @ d @ v)
    e2 = _rel_err(masked.T @ y, g_matrix(y, n) @ d @ v)
    return e1, e2


def lemma51_errors(rng, n):
    a = random_block(rng, "symToeplitz", n, n)
    mk = random_block(rng, "symToeplitz", n, n)
    x = rng.standard_normal(n)
    theta = sign_pattern(mk)
    d = np.diag(sign_pattern(vec_of_structure(mk, "symToeplitz")))
    masked = a * theta
    v = vec_of_structure(masked, "symToeplitz")
    return (_rel_err(masked @ x, i_matrix(x) @ d @ v),)


def lemma52_errors(rng, m, n):
    from structbe import vec_col_major

    a = rng.standard_normal((m, n))
    x = rng.standard_normal(n)
    y = rng.standard_normal(m)
    e1 = _rel_err(a @ x, j1_matrix(x, m) @ vec_col_major(a))
    e2 = _rel_err(a.T @ y, j2_matrix(y, n) @ vec_col_major(a))
    return e1, e2


def test_lemma_identities(rng):
    for _ in range(30):
        n = int(rng.integers(1, 13))
        m = int(rng.integers(1, 13))
        for err in (
            lemma31_errors(rng, n)
            + lemma41_errors(rng, m, n)
            + lemma51_errors(rng, n)
            + lemma52_errors(rng, m, n)
        ):
            assert err <= 1e-13


def test_h_matrix_unrolls():
    y = np.array([3.0, 5.0])
    assert np.array_equal(h_matrix(y), [[3, 5], [5, 3]])
    assert np.array_equal(h_matrix(np.zeros(4)), np.zeros((4, 4)))


def test_k_matrix_small():
    assert np.array_equal(k_matrix([4.0], 1), [[4.0]])
    # x = e1, m = n = 3: each row selects one generator position
    k = k_matrix([1.0, 0.0, 0.0], 3)
    assert np.array_equal(k, [[0, 0, 1, 0, 0], [0, 1, 0, 0, 0], [1, 0, 0, 0, 0]])


def test_g_matrix_small():
    g = g_matrix([7.0], 3)
    assert np.array_equal(g, 7.0 * np.eye(3))
    assert np.array_equal(g_matrix(np.zeros(2), 3), np.zeros((3, 4)))


def test_i_matrix_small():
    assert np.array_equal(i_matrix([6.0]), [[6.0]])
    assert np.array_equal(i_matrix([1.0, 2.0]), [[1, 2], [2, 1]])


def test_scaling_values():
    assert np.allclose(scaling_for("circulant", 3, 3), np.sqrt(3) * np.ones(3))
    assert np.allclose(scaling_for("toeplitz", 3, 3), [1, np.sqrt(2), np.sqrt(3), np.sqrt(2), 1])
    assert np.allclose(scaling_for("symToeplitz", 3, 3), [np.sqrt(3), 2, np.sqrt(2)])


@settings(max_examples=60, deadline=None)
@given(
    st.sampled_from(["circulant", "toeplitz", "symToeplitz"]),
    st.integers(1, 12),
    st.integers(1, 12),
    st.integers(0, 10_000),
)
def test_frobenius_compensation(kind, m, n, seed):
    if kind != "toeplitz":
        m = n
    rng = np.random.default_rng(seed)
    a = random_block(rng, kind, m, n)
    d = scaling_for(kind, m, n)
    lhs = np.linalg.norm(d * vec_of_structure(a, kind))
    rhs = np.linalg.norm(a, "fro")
    assert abs(lhs - rhs) <= 1e-14 * max(rhs, 1.0)


def test_structure_closure_under_sign_pattern(rng):
    for kind in ("circulant", "toeplitz", "symToeplitz"):
        a = random_block(rng, kind, 5, 5)
        vec_of_structure(sign_pattern(a), kind)  # must not raise
