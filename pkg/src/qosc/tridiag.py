"""Symmetric tridiagonal eigensolver.

Eigenvalues come from bisection on Sturm counts, run for all indices at once.
Eigenvectors come from one step of inverse iteration started at the
best-conditioned coordinate (twisted factorization).  The vector is
accumulated as binary mantissa/exponent pairs, so components far below the
binary64 range keep their relative accuracy.  That matters for
Gauss-type weights, which are squared first components and can be
astronomically small for strongly graded matrices.
"""

from __future__ import annotations

import numpy as np

from .qcore import NonConvergenceError

__all__ = ["sturm_count", "bisect_eigenvalues", "twisted_eigenvectors"]

_TINY = np.finfo(float).tiny


def _pivmin(off2):
    return _TINY * max(1.0, float(np.max(off2))) if len(off2) else _TINY


def sturm_count(diag, off2, x):
    """Number of eigenvalues strictly below each entry of ``x``.

    ``off2`` holds the squared off-diagonal entries.
    """
    x = np.asarray(x, dtype=float)
    pivmin = _pivmin(off2)
    d = diag[0] - x
    d = np.where(np.abs(d) < pivmin, -pivmin, d)
    count = (d < 0).astype(int)
    for i in range(1, len(diag)):
        d = (diag[i] - x) - off2[i - 1] / d
        d = np.where(np.abs(d) < pivmin, -pivmin, d)
        count += d < 0
    return count


def bisect_eigenvalues(diag, off, tol=4e-16, max_iter=2200):
    """All eigenvalues in ascending order, each to relative width ``tol``.

    Iteration stops per eigenvalue once the bracket is narrower than
    ``tol`` times its magnitude or no binary64 number lies strictly inside
    it.
    """
    diag = np.asarray(diag, dtype=float)
    off = np.asarray(off, dtype=float)
    n = len(diag)
    if n == 1:
        return diag.copy()
    off2 = off * off
    a = np.abs(off)
    radius = np.abs(diag) + np.concatenate([a, [0.0]]) + np.concatenate([[0.0], a])
    lo = np.full(n, float(np.min(diag - radius)))
    hi = np.full(n, float(np.max(diag + radius)))
    span = hi[0] - lo[0]
    lo -= 1e-14 * span + _TINY
    hi += 1e-14 * span + _TINY
    k = np.arange(n)
    active = np.ones(n, dtype=bool)
    for _ in range(max_iter):
        idx = np.nonzero(active)[0]
        if len(idx) == 0:
            return 0.5 * (lo + hi)
        mid = 0.5 * (lo[idx] + hi[idx])
        cnt = sturm_count(diag, off2, mid)
        upper = cnt > k[idx]
        hi[idx[upper]] = mid[upper]
        lo[idx[~upper]] = mid[~upper]
        width = hi[idx] - lo[idx]
        mag = np.maximum(np.abs(lo[idx]), np.abs(hi[idx]))
        mid2 = 0.5 * (lo[idx] + hi[idx])
        stuck = (mid2 <= lo[idx]) | (mid2 >= hi[idx])
        done = (width <= tol * mag) | stuck
        active[idx[done]] = False
    raise NonConvergenceError(f"bisection did not converge in {max_iter} steps")


def twisted_eigenvectors(diag, off, sigma):
    """Eigenvectors at the approximate eigenvalues ``sigma``.

    Returns ``(mant, expo)``, each of shape ``(n, len(sigma))``: column
    ``j`` is the unit eigenvector for ``sigma[j]`` with components
    ``numpy.ldexp(mant, expo)``.  The sign is fixed so the first component
    is non-negative.
    """
    diag = np.asarray(diag, dtype=float)
    off = np.asarray(off, dtype=float)
    sigma = np.asarray(sigma, dtype=float)
    n, m = len(diag), len(sigma)
    if n == 1:
        return np.ones((1, m)), np.zeros((1, m))
    off2 = off * off
    pivmin = _pivmin(off2)

    def guard(d):
        return np.where(np.abs(d) < pivmin, np.where(d < 0, -pivmin, pivmin), d)

    shifted = diag[:, None] - sigma[None, :]
    dp = np.empty((n, m))
    dm = np.empty((n, m))
    dp[0] = guard(shifted[0])
    for i in range(1, n):
        dp[i] = guard(shifted[i] - off2[i - 1] / dp[i - 1])
    dm[n - 1] = guard(shifted[n - 1])
    for i in range(n - 2, -1, -1):
        dm[i] = guard(shifted[i] - off2[i] / dm[i + 1])
    gamma = dp + dm - shifted
    twist = np.argmin(np.abs(gamma), axis=0)

    # v_i / v_{i+1} = -off[i] / dp[i] above the twist,
    # v_i / v_{i-1} = -off[i-1] / dm[i] below it.
    # Products are carried as frexp mantissa/exponent pairs.
    up_m, up_e = np.frexp(-off[:, None] / dp[:-1])
    dn_m, dn_e = np.frexp(-off[:, None] / dm[1:])
    Pm, Pe = _prefix_products(up_m, up_e)  # P[i] = prod_{j<i} up[j]
    Mm, Me = _prefix_products(dn_m, dn_e)  # M[i] = prod_{1<=j<=i} dn[j-1]

    cols = np.arange(m)
    below = np.arange(n)[:, None] < twist[None, :]
    # above the twist v_i = P[k] / P[i]; below it v_i = M[i] / M[k]
    mant = np.where(below, Pm[twist, cols][None, :] / Pm, Mm / Mm[twist, cols][None, :])
    expo = np.where(below, Pe[twist, cols][None, :] - Pe, Me - Me[twist, cols][None, :])
    mant, e2 = np.frexp(mant)
    expo = expo + e2

    top = expo.max(axis=0)
    norm2 = np.sum(np.ldexp(mant, 2 * (expo - top[None, :])) * mant, axis=0)
    nm, ne = np.frexp(np.sqrt(norm2))
    mant = mant / nm
    expo = expo - top[None, :] - ne
    mant, e2 = np.frexp(mant)
    expo = expo + e2
    mant = mant * np.where(mant[0] < 0, -1.0, 1.0)[None, :]
    return mant, expo


def _prefix_products(mant, expo):
    n, m = mant.shape
    Pm = np.ones((n + 1, m))
    Pe = np.zeros((n + 1, m), dtype=int)
    for i in range(n):
        pm, pe = np.frexp(Pm[i] * mant[i])
        Pm[i + 1] = pm
        Pe[i + 1] = Pe[i] + expo[i] + pe
    return Pm, Pe
