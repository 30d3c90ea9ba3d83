import numpy as np
import pytest

from structbe import SingularMatrixError, gep, gmres


def test_gep_identity():
    d = np.array([3.0, -1.0, 2.0])
    out = gep(np.eye(3), d)
    assert np.allclose(out.solution, d)
    assert out.converged


def test_gep_hand_check():
    out = gep(np.array([[2.0, 1.0], [1.0, 3.0]]), np.array([3.0, 4.0]))
    assert np.allclose(out.solution, [1.0, 1.0], rtol=1e-12)


def test_gep_random_residual():
    rng = np.random.default_rng(5)
    a = rng.standard_normal((20, 20)) + 20 * np.eye(20)
    d = rng.standard_normal(20)
    out = gep(a, d)
    assert out.rel_residual <= 1e-12


def test_gep_singular():
    with pytest.raises(SingularMatrixError):
        gep(np.zeros((2, 2)), np.ones(2))


def test_gmres_identity():
    out = gmres(np.eye(4), np.ones(4), tol=1e-10)
    assert out.iterations == 1
    assert out.converged
    assert np.allclose(out.solution, np.ones(4))


def test_gmres_spd_diagonal():
    d = np.array([1.0, 2.0, 3.0, 4.0])
    out = gmres(np.diag(d), np.ones(4), tol=1e-9)
    assert out.converged
    assert out.rel_residual <= 1e-9
    assert np.allclose(out.solution, 1 / d, rtol=1e-8)


def test_gmres_random_nonsymmetric():
    rng = np.random.default_rng(6)
    a = rng.standard_normal((30, 30)) + 10 * np.eye(30)
    d = rng.standard_normal(30)
    out = gmres(a, d, tol=1e-7)
    assert out.converged
    assert out.rel_residual <= 1e-7


def test_gmres_monotone_residuals():
    rng = np.random.default_rng(7)
    a = rng.standard_normal((25, 25)) + 5 * np.eye(25)
    d = rng.standard_normal(25)
    out = gmres(a, d, tol=1e-14)
    hist = np.array(out.residual_history)
    assert np.all(np.diff(hist) <= 1e-14)


def test_gmres_max_iter_exceeded():
    rng = np.random.default_rng(8)
    a = rng.standard_normal((20, 20)) + 5 * np.eye(20)
    d = rng.standard_normal(20)
    out = gmres(a, d, tol=1e-14, max_iter=3)
    assert not out.converged
    assert out.iterations == 3


def test_gmres_bad_tol():
    with pytest.raises(ValueError):
        gmres(np.eye(2), np.ones(2), tol=0.0)
