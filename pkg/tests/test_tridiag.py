import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qosc.tridiag import bisect_eigenvalues, sturm_count, twisted_eigenvectors


def dense(d, e):
    return np.diag(d) + np.diag(e, 1) + np.diag(e, -1)


def test_two_by_two():
    ev = bisect_eigenvalues([0.0, 0.0], [1.0])
    np.testing.assert_allclose(ev, [-1.0, 1.0], rtol=1e-15)


def test_sturm_count():
    d, e = np.zeros(3), np.array([1.0, 1.0])
    # eigenvalues -sqrt2, 0, sqrt2
    assert list(sturm_count(d, e * e, np.array([-2.0, -1.0, 0.5, 2.0]))) == [0, 1, 2, 3]


@given(st.integers(2, 40), st.integers(0, 2**31 - 1))
@settings(max_examples=30, deadline=None)
def test_matches_dense_solver_on_tame_matrices(n, seed):
    rng = np.random.default_rng(seed)
    d = rng.normal(size=n)
    e = rng.uniform(0.1, 2.0, size=n - 1)
    ev = bisect_eigenvalues(d, e)
    ref = np.linalg.eigvalsh(dense(d, e))
    np.testing.assert_allclose(ev, ref, atol=1e-13 * np.abs(ref).max())
    mant, expo = twisted_eigenvectors(d, e, ev)
    V = np.ldexp(mant, expo)
    A = dense(d, e)
    assert np.abs(A @ V - V * ev).max() <= 1e-12 * np.abs(ev).max()
    np.testing.assert_allclose(np.linalg.norm(V, axis=0), 1.0, rtol=1e-14)
    assert np.all(V[0] >= 0)


def test_graded_matrix_small_components():
    # off-diagonals growing like 2**(n/2): first components span hundreds of decades
    n = 80
    e = np.sqrt(2.0 ** np.arange(1, n) - 1)
    d = np.zeros(n)
    ev = bisect_eigenvalues(d, e)
    mant, expo = twisted_eigenvectors(d, e, ev)
    w = np.ldexp(mant[0] ** 2, 2 * expo[0])
    assert np.sum(w) == pytest.approx(1.0, abs=1e-14)
    assert expo[0].min() < -200
