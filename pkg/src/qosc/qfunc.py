"""q-exponential functions.

Three families are provided:

* ``e_q(z) = sum z**n / [n; q]!`` with radius ``1/(1-q)``, evaluated either
  by its series or by the reciprocal infinite product
  ``1 / ((1-q) z; q)_inf``;
* the symmetric ``E_q(z) = sum z**m / [m]_q!``, an entire function;
* the one-parameter family ``exp(z; q, lam) = sum q**(lam n (n-1) / 2)
  z**n / [n; q]!``, which interpolates the two above and has zero radius of
  convergence for ``lam < 0``.

The one-parameter series is only summed for ``lam < 0`` in ``formal`` mode,
which returns a tagged partial sum rather than a value.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from enum import Enum

from .qcore import (
    DEFAULT_POLICY,
    DivergenceError,
    DomainError,
    NonConvergenceError,
    PoleError,
    csum,
    q_bracket,
    q_bracket_sym,
    q_pochhammer,
)

__all__ = [
    "ConvergenceKind",
    "ConvergenceClass",
    "SeriesResult",
    "convergence_class",
    "exp_q_lambda",
    "e_q",
    "e_q_product",
    "big_E_q",
]


class ConvergenceKind(str, Enum):
    ENTIRE = "entire"
    FINITE_RADIUS = "finite_radius"
    ZERO_RADIUS = "zero_radius"


@dataclass(frozen=True)
class ConvergenceClass:
    kind: ConvergenceKind
    radius: float

    def __post_init__(self):
        if self.kind is ConvergenceKind.FINITE_RADIUS and not self.radius > 0:
            raise DomainError("finite radius must be positive")

    def contains(self, z):
        """Whether ``z`` lies strictly inside the disc of convergence."""
        if self.kind is ConvergenceKind.ENTIRE:
            return True
        if self.kind is ConvergenceKind.ZERO_RADIUS:
            return z == 0
        return abs(z) < self.radius


@dataclass(frozen=True)
class SeriesResult:
    """Value of a (possibly partial) power-series sum plus diagnostics.

    ``terms`` is the number of terms summed.  ``converged`` means the
    tail bound met the tolerance.  ``diverging`` is raised when term
    magnitudes were still growing at the point the summation stopped.
    """

    value: complex
    terms: int
    converged: bool
    diverging: bool = False
    smallest_term_index: int = 0


def convergence_class(q, lam):
    """Convergence class of ``exp(z; q, lam)`` as a power series in ``z``.

    >>> convergence_class(0.5, 0)
    ConvergenceClass(kind=<ConvergenceKind.FINITE_RADIUS: 'finite_radius'>, radius=2.0)
    """
    if not 0 < q < 1:
        raise DomainError(f"convergence class is defined for 0 < q < 1, got q={q!r}")
    if lam > 0:
        return ConvergenceClass(ConvergenceKind.ENTIRE, math.inf)
    if lam == 0:
        return ConvergenceClass(ConvergenceKind.FINITE_RADIUS, 1.0 / (1.0 - q))
    return ConvergenceClass(ConvergenceKind.ZERO_RADIUS, 0.0)


def _power_series(z, ratio, policy, monotone):
    # ratio(n) = t_n / (z t_{n-1}) > 0.  When |t_n / t_{n-1}| is known to be
    # non-increasing (monotone=True) the geometric tail bound below is
    # rigorous and is used to stop; otherwise summation runs to the cap or
    # to overflow, with magnitudes carried as logarithms so that an
    # intermediate underflow cannot masquerade as convergence.
    if not monotone:
        return _log_power_series(z, ratio, policy)
    terms = [complex(1.0)]
    t = complex(1.0)
    running = 1.0
    prev_abs = 1.0
    smallest, smallest_at = 1.0, 0
    rho = 0.0
    for n in range(1, policy.max_terms):
        t = t * z * ratio(n)
        at = abs(t)
        if not math.isfinite(at):
            return SeriesResult(csum(terms), n, False, True, smallest_at)
        terms.append(t)
        running += t
        if at < smallest:
            smallest, smallest_at = at, n
        rho = at / prev_abs
        prev_abs = at
        if at == 0.0:
            return SeriesResult(csum(terms), n + 1, True, False, n)
        if rho < 1 and at * rho / (1.0 - rho) <= policy.eps_term * abs(running):
            return SeriesResult(csum(terms), n + 1, True, False, smallest_at)
    return SeriesResult(csum(terms), len(terms), False, rho > 1, smallest_at)


_LOG_MAX = math.log(1.7e308)


def _log_power_series(z, ratio, policy):
    lz = math.log(abs(z))
    phase = cmath.exp(1j * cmath.phase(z))
    terms = [complex(1.0)]
    log_t = 0.0
    rot = complex(1.0)
    smallest, smallest_at = 0.0, 0
    step = 0.0
    for n in range(1, policy.max_terms):
        step = lz + math.log(ratio(n))
        log_t += step
        rot *= phase
        if log_t > _LOG_MAX:
            return SeriesResult(csum(terms), n, False, True, smallest_at)
        if log_t < smallest:
            smallest, smallest_at = log_t, n
        terms.append(math.exp(log_t) * rot)
    return SeriesResult(csum(terms), len(terms), False, step > 0, smallest_at)


def exp_q_lambda(z, q, lam, policy=DEFAULT_POLICY, mode="strict"):
    """Sum ``exp(z; q, lam) = sum_n q**(lam n(n-1)/2) z**n / [n; q]!``.

    Parameters
    ----------
    z : complex
    q : float
        Must satisfy ``0 < q < 1``.
    lam : float
    policy : SeriesPolicy
    mode : {"strict", "formal"}
        ``strict`` refuses points outside the disc of convergence and raises
        when the cap is hit.  ``formal`` always returns the partial sum and
        flags growing terms in :attr:`SeriesResult.diverging`.

    Returns
    -------
    SeriesResult
    """
    if mode not in ("strict", "formal"):
        raise DomainError(f"mode must be 'strict' or 'formal', got {mode!r}")
    cls = convergence_class(q, lam)
    z = complex(z)
    if z == 0:
        return SeriesResult(complex(1.0), 1, True)
    if mode == "strict" and not cls.contains(z):
        if cls.kind is ConvergenceKind.ZERO_RADIUS:
            raise DivergenceError(
                f"exp(z; q={q}, lambda={lam}) has zero radius of convergence"
            )
        raise DivergenceError(
            f"|z|={abs(z)!r} is outside the radius {cls.radius!r} of exp(z; q, lambda)"
        )
    lq = math.log(q)

    def ratio(n):
        return math.exp(lam * (n - 1) * lq) / q_bracket(n, q)

    res = _power_series(z, ratio, policy, monotone=lam >= 0)
    if mode == "strict" and not res.converged:
        raise NonConvergenceError(
            f"exp(z; q, lambda) at |z|={abs(z)!r} needed more than "
            f"{policy.max_terms} terms"
        )
    return res


def e_q(z, q, policy=DEFAULT_POLICY):
    """Series evaluation of ``e_q(z) = sum z**n / [n; q]!``.

    For ``0 < q < 1`` only ``|z| < 1/(1-q)`` is accepted.  For ``q > 1``
    the brackets grow geometrically and the series is entire; it is summed
    directly over ``[n; q]`` with the same stopping rule.
    """
    if q > 1:
        z = complex(z)
        if z == 0:
            return complex(1.0)
        res = _power_series(z, lambda n: 1.0 / q_bracket(n, q), policy, monotone=True)
        if not res.converged:
            raise NonConvergenceError(
                f"e_q at |z|={abs(z)!r} needed more than {policy.max_terms} terms"
            )
        return res.value
    return exp_q_lambda(z, q, 0.0, policy).value


def e_q_product(z, q, policy=DEFAULT_POLICY, pole_rtol=1e-12):
    """``e_q(z)`` through ``1 / ((1-q) z; q)_inf``; valid beyond the series radius.

    Raises :class:`PoleError` within ``pole_rtol`` relative distance of any
    pole ``q**-k / (1-q)``.
    """
    if not 0 < q < 1:
        raise DomainError("e_q requires 0 < q < 1")
    z = complex(z)
    x = (1.0 - q) * z
    if abs(x) >= 1.0 * (1 - pole_rtol):
        # nearest pole index k with q**-k ~ |x|
        k0 = max(0, int(round(-math.log(abs(x)) / math.log(q))))
        for k in (k0 - 1, k0, k0 + 1):
            if k < 0:
                continue
            pole = q ** (-k)
            if abs(x - pole) <= pole_rtol * pole:
                raise PoleError(f"z={z!r} is at the pole q^-{k}/(1-q) of e_q")
    prod = q_pochhammer(x, q, math.inf, policy)
    if prod == 0:
        raise PoleError(f"z={z!r} is at a pole of e_q")
    return 1.0 / prod


def big_E_q(z, q, policy=DEFAULT_POLICY):
    """Symmetric q-exponential ``E_q(z) = sum z**m / [m]_q!`` (entire).

    Summed directly over the symmetric brackets, independently of
    :func:`exp_q_lambda`.
    """
    if not q > 0 or q == 1:
        raise DomainError(f"E_q requires q > 0 and q != 1, got {q!r}")
    z = complex(z)
    if z == 0:
        return complex(1.0)
    res = _power_series(z, lambda m: 1.0 / q_bracket_sym(m, q), policy, monotone=True)
    if not res.converged:
        raise NonConvergenceError(
            f"E_q at |z|={abs(z)!r} needed more than {policy.max_terms} terms"
        )
    return res.value
