"""q-Hermite polynomials and the Jacobi "coordinate" matrix.

The coordinate ``J(lam) = a(lam) + a_dagger(lam)`` is a symmetric
tridiagonal matrix with zero diagonal and off-diagonal
``c_n = sqrt([n; q, lam])``.  Its polynomials of the first kind obey

    c_n H_{n-1}(x) + c_{n+1} H_{n+1}(x) = x H_n(x),   H_{-1} = 0, H_0 = 1,

so ``H_n`` is orthonormal against the spectral measure of ``J`` seen from
the vacuum.  A ``D``-point truncation gives a Gauss-type discrete measure
(eigenvalues as nodes, squared first eigenvector components as weights)
that reproduces the vacuum moments ``<0|J**k|0>`` for ``k <= 2D - 1``.

Moment sequences are mapped back to recurrence coefficients with the
Chebyshev algorithm.  The map is exponentially ill-conditioned; the
implementation carries a running error bound and refuses to continue once
positivity of the Hankel determinants is no longer certified.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .qcore import ConditioningError, DomainError, q_bracket_lambda
from .tridiag import bisect_eigenvalues, twisted_eigenvectors

__all__ = [
    "TridiagonalOperator",
    "SpectralMeasure",
    "recurrence_coefficients",
    "hermite_sequence",
    "hermite_scaled",
    "jacobi_matrix",
    "eigendecompose",
    "measure_moments",
    "vacuum_moments",
    "moment_discrepancy",
    "jacobi_from_moments",
    "normalized_hermite_table",
    "orthonormality_check",
    "eigenvector_proportionality",
]

_EPS = np.finfo(float).eps


@dataclass(frozen=True, eq=False)
class TridiagonalOperator:
    """Real symmetric tridiagonal matrix ``diag`` / ``offdiag`` (``c_1 .. c_{D-1}``).

    ``condition`` is filled in by :func:`jacobi_from_moments` with the
    largest relative error bound met during the reconstruction.
    """

    diag: np.ndarray
    offdiag: np.ndarray
    condition: Optional[float] = None

    def __post_init__(self):
        d = np.array(self.diag, dtype=float)
        o = np.array(self.offdiag, dtype=float)
        if d.ndim != 1 or o.ndim != 1 or len(o) != max(len(d) - 1, 0):
            raise DomainError("offdiag must have exactly one entry fewer than diag")
        if len(d) == 0:
            raise DomainError("empty operator")
        if np.any(~(o > 0)):
            raise DomainError("off-diagonal entries must be strictly positive")
        d.flags.writeable = False
        o.flags.writeable = False
        object.__setattr__(self, "diag", d)
        object.__setattr__(self, "offdiag", o)

    @property
    def dimension(self):
        return len(self.diag)

    def to_dense(self):
        return np.diag(self.diag) + np.diag(self.offdiag, 1) + np.diag(self.offdiag, -1)


@dataclass(frozen=True, eq=False)
class SpectralMeasure:
    """Discrete measure ``sum_i w_i delta(x - x_i)`` with ascending nodes.

    Weights are also held exactly as ``ldexp(weight_mantissa,
    weight_exponent)`` so that values below the binary64 range stay usable.
    ``vectors`` (columns = unit eigenvectors, first component >= 0) is only
    present when requested from :func:`eigendecompose`.
    """

    nodes: np.ndarray
    weights: np.ndarray
    weight_mantissa: Optional[np.ndarray] = None
    weight_exponent: Optional[np.ndarray] = None
    vectors: Optional[np.ndarray] = None

    def __post_init__(self):
        if self.weight_mantissa is None:
            m, e = np.frexp(np.asarray(self.weights, dtype=float))
            object.__setattr__(self, "weight_mantissa", m)
            object.__setattr__(self, "weight_exponent", e)

    def __len__(self):
        return len(self.nodes)

    @property
    def log_weights(self):
        with np.errstate(divide="ignore"):
            return np.log(self.weight_mantissa) + self.weight_exponent * math.log(2.0)


def recurrence_coefficients(params, n_max):
    """``c_n = sqrt([n; q, lam])`` for ``n = 1 .. n_max``."""
    return np.sqrt(
        np.array([q_bracket_lambda(n, params.q, params.lam) for n in range(1, n_max + 1)])
    )


def _coeffs_for(params, n):
    return recurrence_coefficients(params, n) if n > 0 else np.zeros(0)


def hermite_sequence(x, n_max, params):
    """Values ``H_0(x), ..., H_{n_max}(x)``.

    ``x`` may be a scalar or an array; the result has the polynomial index as
    its leading axis.  Values can overflow for large ``|x|`` with strongly
    growing ``c_n``; see :func:`hermite_scaled`.

    >>> from qosc.qcore import QParams
    >>> hermite_sequence(0.5, 2, QParams(0.5))
    array([ 1.        ,  0.5       , -0.61237244])
    """
    if n_max < 0:
        raise DomainError("n_max must be non-negative")
    x = np.asarray(x, dtype=float)
    c = np.concatenate([[0.0], _coeffs_for(params, n_max)])
    H = np.empty((n_max + 1,) + x.shape)
    H[0] = 1.0
    if n_max >= 1:
        H[1] = x / c[1]
    for n in range(1, n_max):
        H[n + 1] = (x * H[n] - c[n] * H[n - 1]) / c[n + 1]
    return H


def hermite_scaled(x, n_max, c):
    """``H_n(x)`` as ``(mant, expo)`` with ``H_n = ldexp(mant, expo)``.

    ``c`` holds ``c_1 .. c_{n_max}``.  Rescaling happens whenever the running
    pair approaches the overflow threshold, so the sequence is representable
    for any node of a truncated Jacobi matrix.
    """
    x = np.asarray(x, dtype=float)
    c = np.concatenate([[0.0], np.asarray(c, dtype=float)])
    mant = np.empty((n_max + 1,) + x.shape)
    expo = np.zeros((n_max + 1,) + x.shape, dtype=int)
    prev = np.zeros(x.shape)
    cur = np.ones(x.shape)
    scale = np.zeros(x.shape, dtype=int)  # shared binary exponent of prev and cur
    mant[0], expo[0] = np.frexp(cur)
    for n in range(0, n_max):
        nxt = (x * cur - c[n] * prev) / c[n + 1]
        prev, cur = cur, nxt
        big = np.maximum(np.abs(prev), np.abs(cur))
        _, e = np.frexp(np.where(big > 0, big, 1.0))
        shift = np.where(big > 2.0**500, e, 0)
        prev = np.ldexp(prev, -shift)
        cur = np.ldexp(cur, -shift)
        scale = scale + shift
        m, e = np.frexp(cur)
        mant[n + 1] = m
        expo[n + 1] = e + scale
    return mant, expo


def jacobi_matrix(params, D):
    """Truncated coordinate matrix ``a(lam) + a_dagger(lam)`` of size ``D``."""
    if D < 2:
        raise DomainError("Jacobi matrix needs D >= 2")
    return TridiagonalOperator(np.zeros(D), recurrence_coefficients(params, D - 1))


def eigendecompose(J, tol=4e-16, vectors=False):
    """Gauss-type measure of ``J``: nodes are eigenvalues, weights ``v_0**2``.

    Eigenvalues are found by Sturm-sequence bisection to relative bracket
    width ``tol`` (default: working precision); eigenvectors by a twisted
    inverse-iteration step.  Weights keep full relative accuracy even below
    the binary64 range (see ``log_weights``).
    """
    nodes = bisect_eigenvalues(J.diag, J.offdiag, tol=tol)
    mant, expo = twisted_eigenvectors(J.diag, J.offdiag, nodes)
    w_m, w_e = np.frexp(mant[0] ** 2)
    w_e = w_e + 2 * expo[0]
    with np.errstate(under="ignore"):
        weights = np.ldexp(w_m, w_e)
        vecs = np.ldexp(mant, expo) if vectors else None
    return SpectralMeasure(nodes, weights, w_m, w_e, vecs)


def measure_moments(m, k_max):
    """Power moments ``sum_i w_i x_i**k`` for ``k = 0 .. k_max`` (compensated sums)."""
    out = np.empty(k_max + 1)
    xm, xe = np.frexp(np.asarray(m.nodes, dtype=float))
    for k in range(k_max + 1):
        with np.errstate(under="ignore", over="ignore"):
            terms = np.ldexp(m.weight_mantissa * xm**k, m.weight_exponent + k * xe)
        try:
            out[k] = math.fsum(terms)
        except (OverflowError, ValueError):
            # overflowing terms; +inf and -inf may both be present
            out[k] = float(np.sum(terms))
    return out


def vacuum_moments(J, k_max):
    """``<0|J**k|0>`` by repeated matrix-vector products (exact-path oracle)."""
    A = J.to_dense()
    v = np.zeros(J.dimension)
    v[0] = 1.0
    out = np.empty(k_max + 1)
    for k in range(k_max + 1):
        out[k] = v[0]
        v = A @ v
    return out


def moment_discrepancy(measure, J, k_max):
    """Max scaled error of the quadrature moments against ``<0|J**k|0>``, ``k <= k_max``.

    Even moments are compared relatively.  Odd moments vanish and are
    scaled by ``sqrt(m_{k-1} m_{k+1})``, the Cauchy-Schwarz bound on the
    absolute moment ``sum_i w_i |x_i|**k``.
    """
    mq = measure_moments(measure, k_max)
    mv = vacuum_moments(J, k_max + 1)
    worst = 0.0
    for k in range(k_max + 1):
        scale = mv[k] if k % 2 == 0 else math.sqrt(mv[k - 1] * mv[k + 1])
        worst = max(worst, abs(mq[k] - mv[k]) / scale)
    return worst


def jacobi_from_moments(moments, n_out, rtol=_EPS):
    """Recurrence coefficients of the measure behind ``moments``.

    Parameters
    ----------
    moments : array_like
        ``m_0, m_1, ...``; at least ``2 * n_out`` entries are used.
    n_out : int
        Dimension of the returned Jacobi matrix: diagonal ``b_0 .. b_{n_out-1}``
        and off-diagonal ``c_1 .. c_{n_out-1}``.
    rtol : float
        Relative accuracy of the supplied moments, seeding the error bound.

    Returns
    -------
    TridiagonalOperator
        ``condition`` holds the largest relative error bound encountered.

    Raises
    ------
    ConditioningError
        When the next Hankel ratio cannot be certified positive.  ``order``
        is the offending index; ``degenerate`` is set when the error bound is
        at the level of that step's own rounding, so the failure is a true
        zero (a measure with too few atoms) rather than propagated error.
    """
    mu = np.asarray(moments, dtype=float)
    n = int(n_out)
    if n < 1:
        raise DomainError("n_out must be at least 1")
    L = 2 * n
    if len(mu) < L:
        raise DomainError(f"need {L} moments for n_out={n}, got {len(mu)}")
    mu = mu[:L]
    if not np.all(np.isfinite(mu)):
        raise DomainError("moments must be finite")
    if not mu[0] > 0:
        raise ConditioningError("zeroth moment is not positive", order=0, degenerate=True)
    alpha = np.zeros(n)
    beta = np.zeros(n)
    sig_prev = np.zeros(L + 1)
    err_prev = np.zeros(L + 1)
    sig = np.append(mu, 0.0)
    err = np.append(rtol * np.abs(mu), 0.0)
    alpha[0] = mu[1] / mu[0] if L > 1 else 0.0
    beta[0] = mu[0]
    ea = abs(alpha[0]) * (err[1] / abs(mu[1]) + err[0] / mu[0]) if L > 1 and mu[1] else 0.0
    eb = 0.0
    worst = err[0] / mu[0]
    for k in range(1, n):
        new = np.zeros(L + 1)
        new_err = np.zeros(L + 1)
        ls = np.arange(k, L - k)
        t1 = sig[ls + 1]
        t2 = alpha[k - 1] * sig[ls]
        t3 = beta[k - 1] * sig_prev[ls]
        new[ls] = t1 - t2 - t3
        new_err[ls] = (
            err[ls + 1]
            + abs(alpha[k - 1]) * err[ls]
            + abs(beta[k - 1]) * err_prev[ls]
            + ea * np.abs(sig[ls])
            + eb * np.abs(sig_prev[ls])
            + _EPS * (np.abs(t1) + np.abs(t2) + np.abs(t3))
        )
        s_kk, e_kk = new[k], new_err[k]
        if not s_kk > e_kk:
            # degenerate: the bound is no larger than this step's own rounding,
            # so sigma is (near) zero in fact rather than swamped by propagated error
            local = 1024 * _EPS * (abs(t1[0]) + abs(t2[0]) + abs(t3[0]))
            degenerate = abs(s_kk) <= e_kk <= local or (s_kk == 0 and e_kk == 0)
            raise ConditioningError(
                f"Hankel positivity lost at order {k}: sigma={s_kk:.3e}, "
                f"error bound={e_kk:.3e}",
                order=k,
                degenerate=bool(degenerate),
                estimate=float(e_kk / abs(s_kk)) if s_kk else math.inf,
            )
        worst = max(worst, e_kk / s_kk)
        r1 = new[k + 1] / s_kk
        r0 = sig[k] / sig[k - 1]
        alpha[k] = r1 - r0
        beta[k] = s_kk / sig[k - 1]
        rel_kk = e_kk / s_kk
        rel_prev = err[k - 1] / abs(sig[k - 1])
        ea = abs(r1) * (new_err[k + 1] / abs(new[k + 1]) + rel_kk if new[k + 1] else rel_kk) + abs(
            r0
        ) * (err[k] / abs(sig[k]) + rel_prev if sig[k] else rel_prev)
        eb = beta[k] * (rel_kk + rel_prev)
        sig_prev, sig = sig, new
        err_prev, err = err, new_err
    return TridiagonalOperator(alpha, np.sqrt(beta[1:]), condition=float(worst))


def normalized_hermite_table(measure, params, m_max):
    """Matrix ``U[n, i] = sqrt(w_i) H_n(x_i)`` for ``n <= m_max``.

    Evaluated through :func:`hermite_scaled` and ``log_weights`` so that
    neither factor over- or underflows.
    """
    c = recurrence_coefficients(params, m_max) if m_max > 0 else np.zeros(0)
    mant, expo = hermite_scaled(measure.nodes, m_max, c)
    # sqrt(w) from the exact mantissa/exponent pair: make the exponent even first
    wm, we = measure.weight_mantissa, measure.weight_exponent
    odd = we % 2 == 1
    root_m = np.sqrt(np.where(odd, 2 * wm, wm))
    root_e = np.where(odd, we - 1, we) // 2
    with np.errstate(under="ignore"):
        return np.ldexp(mant * root_m[None, :], expo + root_e[None, :])


def orthonormality_check(params, D, m_max, tol=4e-16):
    """``max_{m,n <= m_max} |sum_i w_i H_m(x_i) H_n(x_i) - delta_mn|`` on the D-point measure."""
    if m_max > D - 1:
        raise DomainError("m_max must be <= D - 1")
    meas = eigendecompose(jacobi_matrix(params, D), tol=tol)
    U = normalized_hermite_table(meas, params, m_max)
    G = U @ U.T
    return float(np.abs(G - np.eye(m_max + 1)).max())


def eigenvector_proportionality(params, D, tol=4e-16):
    """``max |v_i - sqrt(w_i) (H_0(x_i), ..., H_{D-1}(x_i))|`` over all eigenvectors.

    The eigenvectors come from the tridiagonal solver; the comparison
    vectors from the three-term recurrence.  Both are unit vectors, so the
    deviation is absolute.
    """
    J = jacobi_matrix(params, D)
    meas = eigendecompose(J, tol=tol, vectors=True)
    U = normalized_hermite_table(meas, params, D - 1)
    return float(np.abs(U - meas.vectors).max())
