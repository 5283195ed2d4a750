"""Scalar q-arithmetic: brackets, factorials and q-Pochhammer symbols.

Everything here works in binary64.  The parameter and truncation types
consumed by the rest of the package (:class:`QParams`,
:class:`SeriesPolicy`) and the package exception hierarchy also live here.
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass
from typing import Optional

__all__ = [
    "QoscError",
    "DomainError",
    "DivergenceError",
    "NonConvergenceError",
    "PoleError",
    "ConditioningError",
    "FactorialOverflowError",
    "QParams",
    "SeriesPolicy",
    "DEFAULT_POLICY",
    "q_bracket",
    "q_bracket_sym",
    "q_bracket_lambda",
    "q_factorial_lambda",
    "q_pochhammer",
    "csum",
]


class QoscError(Exception):
    """Base class for all errors raised by this package."""


class DomainError(QoscError, ValueError):
    """An argument lies outside the domain of the operation."""


class DivergenceError(QoscError, ArithmeticError):
    """A series was asked for outside its region of convergence."""


class NonConvergenceError(QoscError, ArithmeticError):
    """An iteration hit its hard cap before meeting its tolerance."""


class PoleError(QoscError, ZeroDivisionError):
    """Evaluation point coincides with a pole."""


class ConditioningError(QoscError, ArithmeticError):
    """A numerically ill-posed reconstruction was refused.

    ``order`` is the first recurrence order at which positivity could no
    longer be certified.  ``degenerate`` is set when the loss is exact
    (the measure has fewer support points than requested).
    """

    def __init__(self, message, order, degenerate=False, estimate=None):
        super().__init__(message)
        self.order = order
        self.degenerate = degenerate
        self.estimate = estimate


class FactorialOverflowError(QoscError, OverflowError):
    """A q-factorial left the binary64 range."""


def _check_q(q):
    if not q > 0 or not math.isfinite(q):
        raise DomainError(f"q must be a positive finite real, got {q!r}")


@dataclass(frozen=True)
class QParams:
    """Deformation parameter ``q``, family parameter ``lam``, optional ``gamma``.

    ``gamma`` labels the Z-graded representations; it requires ``0 < q < 1``
    and ``gamma >= 1/(1-q)``.
    """

    q: float
    lam: float = 0.0
    gamma: Optional[float] = None

    def __post_init__(self):
        _check_q(self.q)
        if not math.isfinite(self.lam):
            raise DomainError(f"lambda must be finite, got {self.lam!r}")
        if self.gamma is not None:
            if not self.q < 1:
                raise DomainError("gamma representations require 0 < q < 1")
            if not self.gamma >= self.gamma_c * (1 - 1e-15):
                raise DomainError(
                    f"gamma={self.gamma!r} below critical value {self.gamma_c!r}"
                )

    @property
    def gamma_c(self):
        """Critical central-element parameter ``1/(1-q)``."""
        if self.q == 1:
            return math.inf
        return 1.0 / (1.0 - self.q)

    @property
    def p(self):
        """Two-parameter presentation: ``p = q**(1-lam)``."""
        return self.q ** (1.0 - self.lam)

    @property
    def r(self):
        """Two-parameter presentation: ``r = q**(-lam)``."""
        return self.q ** (-self.lam)


@dataclass(frozen=True)
class SeriesPolicy:
    """Truncation contract for infinite sums, products and Jackson integrals."""

    eps_term: float = 1e-16
    max_terms: int = 10**6
    tail_cutoff: float = 1e-18

    def __post_init__(self):
        if not self.eps_term > 0:
            raise DomainError("eps_term must be positive")
        if self.max_terms < 1:
            raise DomainError("max_terms must be at least 1")
        if not self.tail_cutoff > 0:
            raise DomainError("tail_cutoff must be positive")

    @classmethod
    def from_env(cls, **overrides):
        """Default policy with ``eps_term`` taken from ``QOSC_DEFAULT_EPS`` if set."""
        env = os.environ.get("QOSC_DEFAULT_EPS")
        if env is not None and "eps_term" not in overrides:
            try:
                overrides["eps_term"] = float(env)
            except ValueError:
                raise DomainError(f"QOSC_DEFAULT_EPS={env!r} is not a number")
        return cls(**overrides)


DEFAULT_POLICY = SeriesPolicy()


def csum(terms):
    """Correctly rounded sum of real or complex terms (``math.fsum`` per component)."""
    terms = list(terms)
    if any(isinstance(t, complex) for t in terms):
        return complex(
            math.fsum(t.real for t in terms), math.fsum(t.imag for t in terms)
        )
    return math.fsum(terms)


def q_bracket(n, q):
    """q-number ``[n; q] = (1 - q**n) / (1 - q)``.

    Negative ``n`` is allowed.  At ``q == 1`` the continuous limit ``n`` is
    returned.

    >>> q_bracket(2, 0.5)
    1.5
    """
    _check_q(q)
    if q == 1:
        return float(n)
    # expm1/log form keeps accuracy for q close to 1
    return math.expm1(n * math.log(q)) / math.expm1(math.log(q))


def q_bracket_sym(m, q):
    """Symmetric q-number ``[m]_q = (q**m - q**-m) / (q - 1/q)``."""
    _check_q(q)
    if q == 1:
        return float(m)
    lq = math.log(q)
    return math.sinh(m * lq) / math.sinh(lq)


def q_bracket_lambda(m, q, lam):
    """Interpolating bracket ``[m; q, lam] = q**(lam*(1-m)) * [m; q]``.

    Returns ``inf`` when the prefactor overflows.
    """
    try:
        pre = q ** (lam * (1 - m))
    except OverflowError:
        return math.inf
    return pre * q_bracket(m, q)


def q_factorial_lambda(n, q, lam=0.0):
    """Product ``[1; q, lam] [2; q, lam] ... [n; q, lam]`` with the empty product 1.

    Raises
    ------
    DomainError
        If ``n`` is negative or ``q <= 0``.
    FactorialOverflowError
        If the product leaves the binary64 range.
    """
    if n < 0 or int(n) != n:
        raise DomainError(f"factorial needs a non-negative integer, got {n!r}")
    _check_q(q)
    out = 1.0
    for k in range(1, int(n) + 1):
        out *= q_bracket_lambda(k, q, lam)
    if not math.isfinite(out) or (out == 0.0 and n > 0):
        raise FactorialOverflowError(
            f"[{n}; {q}, {lam}]! is outside the binary64 range"
        )
    return out


def q_pochhammer(x, q, n=math.inf, policy=DEFAULT_POLICY):
    """q-Pochhammer symbol ``(x; q)_n = prod_{k<n} (1 - x q**k)``.

    For ``n = inf`` (requires ``0 < q < 1``) the product is cut once the
    remaining factors can move it by less than ``policy.eps_term``; the bound
    used is ``sum_{j>=k} |x| q**j = |x q**k| / (1 - q)``.
    """
    if n == math.inf:
        if not 0 < q < 1:
            raise DomainError("infinite q-Pochhammer product needs 0 < q < 1")
        ax = abs(x)
        out = 1.0
        term = x
        for k in range(policy.max_terms):
            if abs(term) / (1.0 - q) < policy.eps_term:
                return out
            out *= 1.0 - term
            term *= q
            if out == 0:
                return out
        raise NonConvergenceError(
            f"(x; q)_inf with |x|={ax!r}, q={q!r} did not settle in "
            f"{policy.max_terms} factors"
        )
    if n < 0 or int(n) != n:
        raise DomainError(f"n must be a non-negative integer or inf, got {n!r}")
    out = 1.0
    term = x
    for _ in range(int(n)):
        out *= 1.0 - term
        term *= q
    return out
