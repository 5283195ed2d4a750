"""Coherent states in truncated bases.

* :func:`coherent_state` gives the eigenvectors ``a(lam)|z> = z|z>`` on the
  Fock module, ``<n|z> = q**(lam n(n-1)/4) z**n / sqrt([n; q]!)``.
* :func:`hgamma_creation_coherent` solves ``a_dagger|psi> = z|psi>`` on an
  ``Hgamma`` window and reports whether the solution looks normalizable there.
* :func:`generating_vector` gives the z-power coefficients of the generating
  function of the orthonormal q-Hermite polynomials and checks the
  difference equation they satisfy.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass

import numpy as np

from .oscrep import BasisWindow, OperatorMatrix, hgamma_coefficients
from .qcore import DivergenceError, DomainError, QoscError, csum, q_bracket_lambda
from .qfunc import ConvergenceKind, convergence_class
from .qhermite import hermite_sequence

__all__ = [
    "TruncationWarning",
    "StateVector",
    "coherent_state",
    "eigen_residual",
    "overlap",
    "norm_squared",
    "CreationCoherentState",
    "hgamma_creation_coherent",
    "GeneratingVector",
    "generating_vector",
]

TAIL_WARN = 1e-10
NORMALIZABLE_TAIL = 1e-12


class TruncationWarning(UserWarning):
    """The last retained coefficient carries non-negligible norm."""


@dataclass(frozen=True, eq=False)
class StateVector:
    """Coefficients of a state over a basis window.

    ``tail_mass`` is ``|last coefficient|**2 / norm**2`` when the state was
    produced by truncating an infinite sequence, else ``None``.
    """

    window: BasisWindow
    coeffs: np.ndarray
    label: str = ""
    tail_mass: float | None = None

    def __post_init__(self):
        c = np.array(self.coeffs, dtype=complex, copy=True)
        if c.shape != (self.window.size,):
            raise DomainError(
                f"{c.shape[0] if c.ndim == 1 else c.shape} coefficients for a "
                f"window of size {self.window.size}"
            )
        if not np.all(np.isfinite(c)):
            raise DomainError("state coefficients must be finite")
        c.flags.writeable = False
        object.__setattr__(self, "coeffs", c)

    @property
    def norm(self):
        return math.sqrt(norm_squared(self))


def norm_squared(state):
    """Compensated ``sum |c_n|**2``."""
    return math.fsum(np.abs(state.coeffs) ** 2)


def _coherent_coeffs(z, params, D):
    q, lam = params.q, params.lam
    c = np.empty(D, dtype=complex)
    c[0] = 1.0
    for n in range(1, D):
        c[n] = c[n - 1] * z / math.sqrt(q_bracket_lambda(n, q, lam))
    return c


def coherent_state(z, params, D, normalize=False):
    """Truncated coherent state ``|z; lam>`` on ``|0>, ..., |D-1>``.

    Parameters
    ----------
    z : complex
    params : QParams
        ``params.lam`` selects the annihilation operator ``a(lam)``.
    D : int
        Basis dimension.
    normalize : bool
        Divide by the norm of the truncated vector.

    Raises
    ------
    DivergenceError
        For ``0 < q < 1`` outside the normalizable domain: ``lam < 0`` and
        ``z != 0``, or ``lam = 0`` and ``|z|**2 >= 1/(1-q)``.

    Warns
    -----
    TruncationWarning
        When the tail mass exceeds ``1e-10``.
    """
    if D < 1:
        raise DomainError("dimension must be positive")
    z = complex(z)
    q = params.q
    if 0 < q < 1 and z != 0:
        cls = convergence_class(q, params.lam)
        if cls.kind is ConvergenceKind.ZERO_RADIUS:
            raise DivergenceError(
                f"coherent states of a(lambda={params.lam}) are not normalizable: "
                "the exponential has zero radius of convergence"
            )
        if not cls.contains(abs(z) ** 2):
            raise DivergenceError(
                f"|z|**2 = {abs(z) ** 2!r} is outside the normalizable disc "
                f"|z|**2 < {cls.radius!r}"
            )
    c = _coherent_coeffs(z, params, D)
    n2 = math.fsum(np.abs(c) ** 2)
    tail = float(abs(c[-1]) ** 2 / n2)
    if tail > TAIL_WARN:
        warnings.warn(
            f"truncation at D={D} keeps tail mass {tail:.3g} > {TAIL_WARN:g}",
            TruncationWarning,
            stacklevel=2,
        )
    if normalize:
        c = c / math.sqrt(n2)
    return StateVector(
        BasisWindow(0, D - 1), c, f"coherent z={z!r} lam={params.lam!r}", tail
    )


_EXCLUDE = ("last", "first", "both", "none")


def eigen_residual(op, state, z, exclude="last"):
    """``||op psi - z psi|| / ||psi||`` away from the truncation boundary.

    ``exclude`` names the boundary component dropped from the numerator:
    ``"last"`` for lowering operators, ``"first"`` for raising operators
    on a window with a lower edge.
    """
    if not isinstance(op, OperatorMatrix):
        raise DomainError("op must be an OperatorMatrix")
    if op.window != state.window:
        raise DomainError("operator and state live on different basis windows")
    if exclude not in _EXCLUDE:
        raise DomainError(f"exclude must be one of {_EXCLUDE}")
    psi = state.coeffs
    r = op.entries.astype(complex) @ psi - complex(z) * psi
    lo = 1 if exclude in ("first", "both") else 0
    hi = len(r) - 1 if exclude in ("last", "both") else len(r)
    n2 = norm_squared(state)
    if n2 == 0:
        raise DomainError("zero state")
    return math.sqrt(math.fsum(np.abs(r[lo:hi]) ** 2) / n2)


def overlap(bra, ket):
    """Compensated inner product ``<bra|ket>``."""
    if bra.window != ket.window:
        raise DomainError("states live on different basis windows")
    return csum(np.conj(bra.coeffs) * ket.coeffs)


@dataclass(frozen=True, eq=False)
class CreationCoherentState:
    """Eigenvector of the raising operator on an ``Hgamma`` window.

    ``state.coeffs`` are ``d_n`` rescaled by ``2**-scale_exponent`` (zero
    unless ``d_0 = 1`` would overflow).  ``tail_increment`` is the larger of
    the two end contributions ``|d_end|**2 / sum |d_n|**2``.
    """

    state: StateVector
    verdict: str
    tail_increment: float
    log_norm: float
    scale_exponent: int = 0

    @property
    def normalizable(self):
        return self.verdict == "normalizable"


def hgamma_creation_coherent(z, params, window):
    """Solve ``a_dagger |psi> = z |psi>`` on an ``Hgamma`` window.

    The recurrence ``d_n = d_{n-1} l_n / z`` is run in both directions from
    ``d_0 = 1``, where ``l_n`` is the matrix element ``<n|a_dagger|n-1>``
    (``c_n`` times the ``lam`` scaling).  The verdict is ``"normalizable"``
    when both end contributions to the norm are below ``1e-12``, otherwise
    ``"non-normalizable at this window"``; it describes this window only.
    """
    z = complex(z)
    if z == 0:
        raise DomainError("z = 0 makes the recurrence degenerate")
    if params.gamma is None or not 0 < params.q < 1:
        raise DomainError("needs Hgamma parameters (0 < q < 1, gamma set)")
    if not isinstance(window, BasisWindow):
        window = BasisWindow(*window)
    n = window.indices
    c2 = hgamma_coefficients(params, n)
    if np.any(c2 <= 0):
        raise DomainError("c_n**2 <= 0 in window; gamma below critical value")
    ell = np.sqrt(c2) * params.q ** (-params.lam * (n - 1) / 2)
    # log|d_n| and arg d_n, built outward from n = 0
    k0 = window.position(0)
    logd = np.zeros(len(n))
    for i in range(k0 + 1, len(n)):
        logd[i] = logd[i - 1] + math.log(ell[i]) - math.log(abs(z))
    for i in range(k0 - 1, -1, -1):
        logd[i] = logd[i + 1] + math.log(abs(z)) - math.log(ell[i + 1])
    phase = np.exp(-1j * n * np.angle(z))
    top = float(np.max(logd))
    shift = 0
    if top > 700.0:
        shift = int(math.ceil(top / math.log(2.0)))
    with np.errstate(under="ignore"):
        d = np.exp(logd - shift * math.log(2.0)) * phase
    lse = top + math.log(math.fsum(np.exp(2 * (logd - top)))) / 2
    ends = np.exp(2 * (logd[[0, -1]] - lse))
    tail = float(np.max(ends))
    verdict = "normalizable" if tail < NORMALIZABLE_TAIL else "non-normalizable at this window"
    st = StateVector(window, d, f"creation-coherent z={z!r} gamma={params.gamma!r}", tail)
    return CreationCoherentState(st, verdict, tail, lse, shift)


@dataclass(frozen=True, eq=False)
class GeneratingVector:
    """z-power coefficients ``w_n`` of the q-Hermite generating function.

    ``residual[k]`` is the componentwise relative residual of
    ``[k+1; q, lam] w_{k+1} + w_{k-1} = 2x w_k`` at order ``k``.
    """

    x: float
    coeffs: np.ndarray
    residual: np.ndarray

    @property
    def max_residual(self):
        return float(np.max(self.residual)) if len(self.residual) else 0.0


def generating_vector(x, z_order, params, D):
    """Coefficients of ``omega(z, x) = sum_n w_n z**n`` and its difference-equation check.

    ``w_n = H_n(2x) / sqrt([n; q, lam]!)`` with ``H_n`` the orthonormal
    polynomials of the coordinate matrix (:func:`~qosc.qhermite.hermite_sequence`).
    ``omega`` then satisfies ``(Dz + z) omega = 2x omega`` where ``Dz``
    lowers ``z**n`` to ``[n; q, lam] z**(n-1)``; at ``q -> 1``, ``lam = 0``
    it tends to ``exp(2xz - z**2/2)``.  Orders ``0 .. z_order`` are checked,
    which needs ``z_order <= D - 2``.
    """
    if D < 2:
        raise DomainError("D must be at least 2")
    if not 0 <= z_order <= D - 2:
        raise DomainError(f"z_order must lie in [0, {D - 2}] for D = {D}")
    H = hermite_sequence(2.0 * x, D - 1, params)
    br = np.array([q_bracket_lambda(n, params.q, params.lam) for n in range(1, D)])
    inv_sqrt_fact = np.concatenate([[1.0], np.cumprod(1.0 / np.sqrt(br))])
    w = H * inv_sqrt_fact
    if not np.all(np.isfinite(w)):
        raise QoscError("generating coefficients overflowed; reduce D or |x|")
    res = np.empty(z_order + 1)
    for k in range(z_order + 1):
        lower = br[k] * w[k + 1]
        shift = w[k - 1] if k > 0 else 0.0
        rhs = 2.0 * x * w[k]
        scale = abs(lower) + abs(shift) + abs(rhs)
        diff = abs(math.fsum([lower, shift, -rhs]))
        res[k] = diff / scale if scale > 0 else 0.0
    return GeneratingVector(float(x), w, res)
