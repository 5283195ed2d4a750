"""Jackson q-integration and the radial resolution of unity for q-coherent states.

The Jackson integral replaces the Riemann integral by a geometric sampling
of ``(0, b]``:

    int_0^b f(x) d_q x = (1 - q) sum_{m >= 0} q**m b f(q**m b).

Against the weight ``1 / e_q(q x)`` on ``[0, 1/(1-q)]`` the power moments
are ``[n; q]!``, which is what makes the coherent states ``|z>`` resolve the
identity.  The off-diagonal matrix elements of that identity vanish through
the angular integral alone and are not computed here.
"""

from __future__ import annotations

import math

import numpy as np

from .qcore import (
    DEFAULT_POLICY,
    DomainError,
    NonConvergenceError,
    QoscError,
    q_bracket_lambda,
    q_factorial_lambda,
    q_pochhammer,
)

__all__ = [
    "JacksonGrid",
    "EvaluationError",
    "jackson_integral",
    "resolution_weight",
    "jackson_moment",
    "resolution_of_unity_diag",
    "stieltjes_moment_target",
    "moment_growth",
]


class EvaluationError(QoscError, ArithmeticError):
    """The integrand was not finite at a grid point."""


class JacksonGrid:
    """Grid points ``q**m b`` for ``m = 0 .. m_cut`` of a Jackson sum."""

    def __init__(self, b, q, m_cut):
        if not b > 0:
            raise DomainError("upper limit b must be positive")
        if not 0 < q < 1:
            raise DomainError("Jackson integral needs 0 < q < 1")
        self.b = float(b)
        self.q = float(q)
        self.m_cut = int(m_cut)

    @property
    def points(self):
        return self.b * self.q ** np.arange(self.m_cut + 1)

    def __repr__(self):
        return f"JacksonGrid(b={self.b!r}, q={self.q!r}, m_cut={self.m_cut})"


def jackson_integral(f, b, q, policy=DEFAULT_POLICY, full_output=False):
    """``(1-q) sum_m q**m b f(q**m b)``, compensated.

    The sum stops once two consecutive summands fall below
    ``policy.tail_cutoff`` while decreasing.  With ``full_output`` the
    :class:`JacksonGrid` actually used is returned as well.
    """
    if not 0 < q < 1:
        raise DomainError("Jackson integral needs 0 < q < 1")
    if not b > 0:
        raise DomainError("upper limit b must be positive")
    terms = []
    prev = math.inf
    quiet = 0
    for m in range(policy.max_terms):
        x = b * q**m
        try:
            fx = f(x)
        except (ZeroDivisionError, OverflowError) as exc:
            raise EvaluationError(f"integrand failed at x = {x!r}: {exc}") from exc
        if not np.all(np.isfinite(fx)):
            raise EvaluationError(f"integrand is not finite at x = {x!r}")
        t = q**m * b * fx
        terms.append(t)
        at = abs(t)
        quiet = quiet + 1 if at < policy.tail_cutoff and at <= prev else 0
        prev = at
        if quiet >= 2:
            value = (1 - q) * math.fsum(terms)
            if full_output:
                return value, JacksonGrid(b, q, m)
            return value
    raise NonConvergenceError(
        f"Jackson sum did not decay below {policy.tail_cutoff} in {policy.max_terms} points"
    )


def resolution_weight(x, q, shifted=True, policy=DEFAULT_POLICY):
    """Radial weight ``1 / e_q(q x)`` (``shifted``) or ``1 / e_q(x)``.

    Evaluated as the finite product ``((1-q) q x; q)_inf``, which stays
    valid at the grid points ``q**m / (1-q)`` where the series for ``e_q``
    does not converge.
    """
    arg = (1 - q) * (q * x if shifted else x)
    return q_pochhammer(arg, q, math.inf, policy)


def jackson_moment(n, q, policy=DEFAULT_POLICY, shifted=True):
    """``int_0^{1/(1-q)} x**n / e_q(q x) d_q x``."""
    if n < 0:
        raise DomainError("moment order must be non-negative")
    b = 1.0 / (1.0 - q)
    return jackson_integral(
        lambda x: x**n * resolution_weight(x, q, shifted, policy), b, q, policy
    )


def resolution_of_unity_diag(n, q, policy=DEFAULT_POLICY, shifted=True):
    """Diagonal element ``<n| ... |n>`` of the coherent-state resolution of unity.

    Equals ``jackson_moment(n) / [n; q]!`` and should be 1.  ``shifted=False``
    swaps in the weight ``1/e_q(x)``, which breaks the identity (useful as a
    negative control).
    """
    if not 0 < q < 1:
        raise DomainError("resolution of unity needs 0 < q < 1")
    return jackson_moment(n, q, policy, shifted) / q_factorial_lambda(n, q, 0.0)


def stieltjes_moment_target(n, params):
    """Moment ``[n; q, lam]!`` required of the measure resolving ``|z; lam>``."""
    return q_factorial_lambda(n, params.q, params.lam)


def moment_growth(params, n_max):
    """Growth diagnostics of the target moment sequence.

    Returns a dict with ``n``, ``log_moment`` (natural log of ``[n; q, lam]!``)
    and ``carleman`` (partial sums of ``s_n**(-1/(2n))``).  A bounded
    Carleman sum is necessary for indeterminacy but nothing here decides
    determinacy; the numbers only describe how fast the moments grow.
    """
    logs = [0.0]
    for n in range(1, n_max + 1):
        logs.append(logs[-1] + math.log(q_bracket_lambda(n, params.q, params.lam)))
    logs = np.array(logs)
    ns = np.arange(n_max + 1)
    inv_root = np.zeros(n_max + 1)
    inv_root[1:] = np.exp(-logs[1:] / (2 * ns[1:]))
    return {"n": ns, "log_moment": logs, "carleman": np.cumsum(inv_root)}
