"""Truncated matrix representations of the deformed oscillator algebra.

Two families of irreducible representations are built on a finite window of
number-operator eigenstates ``|n>``:

* ``H0`` (Fock type): ``n = 0, 1, ..., n_max`` with vacuum ``a|0> = 0`` and
  ``a|n> = sqrt([n; q]) |n-1>``;
* ``Hgamma``: ``n`` ranges over an integer window around 0 and
  ``a|n> = c_n |n-1>`` with ``c_n**2 = gamma q**n + [n; q]``; the central
  element takes the value ``-gamma`` there.

The ``lam`` field of :class:`~qosc.qcore.QParams` selects the generator
family ``a(lam) = q**(-lam N / 2) a``; ``lam = 1/2`` and ``lam = 1`` give the
symmetric (``A``) and contracted (``alpha``) generators.

Truncation corrupts only the window boundary, so every residual here is
measured on an interior block that excludes the boundary rows/columns.
Residuals are componentwise relative by default: each entry of the
defining identity is divided by the sum of the magnitudes of its terms.
This keeps them meaningful when entries span many orders of magnitude
(``lam = 1`` reaches ``[n; 1/q] ~ q**-n``).
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from enum import Enum

import numpy as np

from .qcore import DomainError, QParams, q_bracket, q_bracket_lambda

__all__ = [
    "ModuleKind",
    "BasisWindow",
    "OperatorMatrix",
    "RepSpec",
    "Representation",
    "RELATIONS",
    "build_h0",
    "build_hgamma",
    "build",
    "lambda_similarity",
    "shift_number",
    "commutation_residual",
    "central_element",
    "central_deviation",
    "commutator_with_center",
    "verify_ordering_identity",
    "basis_vector_residual",
    "WignerDeformation",
    "wigner_deformation",
]


class ModuleKind(str, Enum):
    H0 = "H0"
    HGAMMA = "Hgamma"


@dataclass(frozen=True)
class BasisWindow:
    """Integer index window ``[n_min, n_max]`` of the number-operator basis."""

    n_min: int
    n_max: int

    def __post_init__(self):
        if not self.n_min <= 0 <= self.n_max:
            raise DomainError(
                f"window [{self.n_min}, {self.n_max}] must contain n = 0"
            )

    @property
    def size(self):
        return self.n_max - self.n_min + 1

    @property
    def indices(self):
        return np.arange(self.n_min, self.n_max + 1)

    def position(self, n):
        """Row index of basis state ``|n>``."""
        if not self.n_min <= n <= self.n_max:
            raise DomainError(f"|{n}> is outside window [{self.n_min}, {self.n_max}]")
        return n - self.n_min


@dataclass(frozen=True, eq=False)
class OperatorMatrix:
    """Dense matrix over a basis window.  ``entries`` is made read-only."""

    window: BasisWindow
    entries: np.ndarray
    label: str = ""

    def __post_init__(self):
        arr = np.array(self.entries, copy=True)
        if arr.shape != (self.window.size, self.window.size):
            raise DomainError(
                f"matrix shape {arr.shape} does not match window size {self.window.size}"
            )
        arr.flags.writeable = False
        object.__setattr__(self, "entries", arr)

    def __matmul__(self, other):
        if isinstance(other, OperatorMatrix):
            _same_window(self, other)
            return OperatorMatrix(self.window, self.entries @ other.entries)
        return self.entries @ other

    def __repr__(self):
        return (
            f"OperatorMatrix(label={self.label!r}, window=[{self.window.n_min}, "
            f"{self.window.n_max}], dtype={self.entries.dtype})"
        )


def _same_window(*ops):
    w = ops[0].window
    for op in ops[1:]:
        if op.window != w:
            raise DomainError("operators live on different basis windows")


@dataclass(frozen=True)
class RepSpec:
    params: QParams
    window: BasisWindow
    kind: ModuleKind = ModuleKind.H0

    def __post_init__(self):
        kind = ModuleKind(self.kind)
        object.__setattr__(self, "kind", kind)
        if kind is ModuleKind.H0 and self.window.n_min != 0:
            raise DomainError("H0 windows start at n = 0")
        if kind is ModuleKind.HGAMMA:
            if self.params.gamma is None:
                raise DomainError("Hgamma needs params.gamma")
            if not 0 < self.params.q < 1:
                raise DomainError("Hgamma needs 0 < q < 1")

    @classmethod
    def h0(cls, params, dim):
        """Fock window ``|0>, ..., |dim-1>``."""
        return cls(params, BasisWindow(0, int(dim) - 1), ModuleKind.H0)

    @classmethod
    def hgamma(cls, params, n_min=-20, n_max=20):
        return cls(params, BasisWindow(int(n_min), int(n_max)), ModuleKind.HGAMMA)


@dataclass(frozen=True)
class Representation:
    """Annihilation, creation and number operators of one truncated module."""

    spec: RepSpec
    a: OperatorMatrix
    a_dagger: OperatorMatrix
    N: OperatorMatrix
    precision: str = "double"
    nu: float = field(default=0.0)

    @property
    def params(self):
        return self.spec.params

    @property
    def window(self):
        return self.spec.window

    @property
    def kind(self):
        return self.spec.kind

    def interior(self, depth_top=1, depth_bottom=None):
        """Boolean mask of window positions untouched by truncation."""
        if depth_bottom is None:
            depth_bottom = 1 if self.kind is ModuleKind.HGAMMA else 0
        size = self.window.size
        mask = np.ones(size, dtype=bool)
        if depth_top:
            mask[size - depth_top :] = False
        if depth_bottom:
            mask[:depth_bottom] = False
        return mask


_PRECISION = {
    "double": (np.float64, np.complex128),
    "extended": (np.longdouble, np.clongdouble),
}


def _dtypes(precision):
    try:
        return _PRECISION[precision]
    except KeyError:
        raise DomainError(f"precision must be 'double' or 'extended', got {precision!r}")


def _brackets(n, q, lam, precision):
    # [n; q, lam] for an integer array n
    if precision == "double":
        return np.array([q_bracket_lambda(int(k), q, lam) for k in n], dtype=np.float64)
    real, _ = _dtypes(precision)
    qq = real(q)
    nn = n.astype(real)
    if qq == 1:
        base = nn
    else:
        base = (1 - qq**nn) / (1 - qq)
    return qq ** (real(lam) * (1 - nn)) * base


def _plain_brackets(n, q, precision):
    if precision == "double":
        return np.array([q_bracket(int(k), q) for k in n], dtype=np.float64)
    return _brackets(n, q, 0.0, precision)


def _assemble(spec, lowering, precision, label):
    # lowering[i] is the coefficient of |n_i - 1> in a|n_i>
    real, cplx = _dtypes(precision)
    size = spec.window.size
    a = np.zeros((size, size), dtype=cplx)
    idx = np.arange(1, size)
    a[idx - 1, idx] = lowering[1:]
    n = spec.window.indices
    N = np.diag(n.astype(real)).astype(cplx)
    return Representation(
        spec,
        OperatorMatrix(spec.window, a, f"a({label})"),
        OperatorMatrix(spec.window, a.conj().T, f"a_dagger({label})"),
        OperatorMatrix(spec.window, N, "N"),
        precision,
    )


def build_h0(spec, precision="double"):
    """Fock-type representation with ``a(lam)|n> = sqrt([n; q, lam]) |n-1>``.

    Parameters
    ----------
    spec : RepSpec
        ``kind`` must be ``H0`` and the window must hold at least 2 states.
    precision : {"double", "extended"}
        ``extended`` assembles the matrices in ``numpy.longdouble``.
    """
    if spec.kind is not ModuleKind.H0:
        raise DomainError("build_h0 needs a RepSpec of kind H0")
    if spec.window.size < 2:
        raise DomainError("H0 window needs at least 2 states")
    n = spec.window.indices
    real, _ = _dtypes(precision)
    low = np.sqrt(_brackets(n, spec.params.q, spec.params.lam, precision))
    low[0] = 0
    return _assemble(spec, low, precision, f"lam={spec.params.lam:g}")


def hgamma_coefficients(params, n, precision="double"):
    """``c_n**2 = gamma q**n + [n; q]`` for an integer array ``n``.

    Evaluated as ``gamma_c + (gamma - gamma_c) q**n`` with
    ``gamma_c = 1/(1-q)``; the two terms of the defining sum cancel
    catastrophically for negative ``n``.
    """
    real, _ = _dtypes(precision)
    q = real(params.q)
    n = np.asarray(n)
    gc = 1 / (1 - q)
    return gc + (real(params.gamma) - gc) * q ** n.astype(real)


def build_hgamma(spec, precision="double"):
    """Z-graded representation with ``a_dagger|n-1> = c_n |n>``.

    The ``lam`` family acts as ``a(lam)|n> = q**(-lam (n-1)/2) c_n |n-1>``.
    """
    if spec.kind is not ModuleKind.HGAMMA:
        raise DomainError("build_hgamma needs a RepSpec of kind Hgamma")
    if spec.window.size < 3 or spec.window.n_min >= 0:
        raise DomainError("Hgamma window must span negative and positive n")
    p = spec.params
    n = spec.window.indices
    real, _ = _dtypes(precision)
    c2 = hgamma_coefficients(p, n, precision)
    if np.any(c2 < 0):
        raise DomainError("c_n**2 < 0 in window; gamma below critical value")
    scale = real(p.q) ** (-real(p.lam) * (n.astype(real) - 1) / 2)
    return _assemble(spec, scale * np.sqrt(c2), precision, f"gamma={p.gamma:g}, lam={p.lam:g}")


def build(spec, precision="double"):
    if spec.kind is ModuleKind.H0:
        return build_h0(spec, precision)
    return build_hgamma(spec, precision)


def lambda_similarity(rep, lam):
    """Generators ``q**(-lam N/2) a`` and their adjoint, built from ``rep``'s matrices.

    This is the explicit change of generators applied to existing matrices,
    independent of the closed-form entries used by :func:`build_h0`.
    """
    real, cplx = _dtypes(rep.precision)
    n = rep.window.indices.astype(real)
    S = np.diag(real(rep.params.q) ** (-real(lam) * n / 2)).astype(cplx)
    a = S @ rep.a.entries
    label = f"a({lam:g})"
    return replace(
        rep,
        spec=replace(rep.spec, params=replace(rep.params, lam=rep.params.lam + lam)),
        a=OperatorMatrix(rep.window, a, label),
        a_dagger=OperatorMatrix(rep.window, a.conj().T, label + "_dagger"),
    )


def shift_number(rep, nu):
    """Shift ``N -> N + nu`` (the formal extra parameter of the generator set)."""
    N = rep.N.entries + nu * np.eye(rep.window.size, dtype=rep.N.entries.dtype)
    return replace(rep, N=OperatorMatrix(rep.window, N, f"N+{nu:g}"), nu=rep.nu + nu)


def _residual(terms, signs, mask_rows, mask_cols, relative=True):
    total = sum(s * t for s, t in zip(signs, terms))
    sub = np.abs(total[np.ix_(mask_rows, mask_cols)])
    if sub.size == 0:
        return 0.0
    if not relative:
        return float(sub.max())
    scale = sum(np.abs(t) for t in terms)[np.ix_(mask_rows, mask_cols)]
    out = np.zeros(sub.shape, dtype=sub.dtype)
    nz = scale > 0
    out[nz] = sub[nz] / scale[nz]
    return float(out.max())


# relation name -> required lam (None: any)
RELATIONS = {
    "canonical": 0.0,  # a a+ - q a+ a = 1
    "symmetric": 0.5,  # A A+ - q^(1/2) A+ A = q^(-N/2)
    "contracted": 1.0,  # [alpha, alpha+] = q^(-N)
    "lambda": None,  # a(l) a+(l) - q^(1-l) a+(l) a(l) = q^(-l N)
}


def commutation_residual(rep, relation="lambda", relative=True, upto=None):
    """Interior residual of ``a a_dagger - p a_dagger a = r**N``.

    ``p = q**(1-lam)``, ``r = q**(-lam)``.  ``relation`` names one of
    :data:`RELATIONS`; all but ``"lambda"`` pin the generator family and
    raise :class:`DomainError` if ``rep`` was built for another ``lam``.
    ``upto`` further restricts the block to basis states ``n <= upto``,
    which allows the same block to be compared across window sizes.
    """
    if relation not in RELATIONS:
        raise DomainError(f"unknown relation {relation!r}; choose from {sorted(RELATIONS)}")
    if rep.window.size < 3:
        raise DomainError("residuals need a window of at least 3 states")
    lam = rep.params.lam
    need = RELATIONS[relation]
    if need is not None and abs(lam - need) > 1e-15:
        raise DomainError(f"relation {relation!r} needs lam={need}, representation has lam={lam}")
    real, _ = _dtypes(rep.precision)
    q = real(rep.params.q)
    p = q ** (1 - real(lam))
    r = q ** (-real(lam))
    a, ad = rep.a.entries, rep.a_dagger.entries
    n = rep.window.indices.astype(real)
    rhs = np.diag(r**n).astype(a.dtype)
    mask = rep.interior()
    if upto is not None:
        mask &= rep.window.indices <= upto
    return _residual([a @ ad, p * (ad @ a), rhs], [1, -1, -1], mask, mask, relative)


def central_element(rep):
    """``zeta = q**-N ([N; q] - a_dagger a)`` for a ``lam = 0`` representation."""
    if abs(rep.params.lam) > 1e-15:
        raise DomainError("central element is formed from the lam = 0 generators")
    real, cplx = _dtypes(rep.precision)
    n = rep.window.indices
    q = real(rep.params.q)
    qn_inv = np.diag(q ** (-n.astype(real))).astype(cplx)
    br = np.diag(_plain_brackets(n, rep.params.q, rep.precision)).astype(cplx)
    z = qn_inv @ (br - rep.a_dagger.entries @ rep.a.entries)
    return OperatorMatrix(rep.window, z, "zeta")


def central_deviation(rep):
    """Interior max deviation of ``zeta`` from its expected value.

    The expected value is ``0`` on ``H0`` and ``-gamma`` times the identity
    on ``Hgamma``.  Returns ``(diagonal_deviation, offdiagonal_max)``.
    """
    zeta = central_element(rep).entries
    mask = rep.interior()
    sub = zeta[np.ix_(mask, mask)]
    expected = 0.0 if rep.kind is ModuleKind.H0 else -rep.params.gamma
    diag = np.abs(np.diag(sub) - expected)
    off = np.abs(sub - np.diag(np.diag(sub)))
    return float(diag.max()), float(off.max())


def commutator_with_center(rep):
    """Interior max-norm of ``[zeta, X]`` for ``X`` in ``a, a_dagger, N``."""
    zeta = central_element(rep).entries
    mask = rep.interior()
    out = 0.0
    for X in (rep.a.entries, rep.a_dagger.entries, rep.N.entries):
        c = zeta @ X - X @ zeta
        out = max(out, float(np.abs(c[np.ix_(mask, mask)]).max()))
    return out


def verify_ordering_identity(rep, m, relative=True):
    """Residual of ``a (a+)**m = (p a+)**m a + (p a+)**(m-1) r**N [m; r/p]``.

    Measured on the columns ``|n>`` with ``n + m <= n_max`` (and ``n > n_min``
    on ``Hgamma``), where no intermediate state leaves the window.
    """
    m = int(m)
    if m < 1:
        raise DomainError("m must be a positive integer")
    if m > rep.window.size - 2:
        raise DomainError(f"m={m} too large for a window of {rep.window.size} states")
    real, _ = _dtypes(rep.precision)
    q = real(rep.params.q)
    lam = real(rep.params.lam)
    p = q ** (1 - lam)
    r = q ** (-lam)
    a, ad = rep.a.entries, rep.a_dagger.entries
    n = rep.window.indices.astype(real)
    pad = p * ad
    pad_m1 = np.linalg.matrix_power(pad, m - 1) if m > 1 else np.eye(len(n), dtype=a.dtype)
    bracket = _plain_brackets(np.array([m]), float(r / p), rep.precision)[0]
    t1 = a @ np.linalg.matrix_power(ad, m)
    t2 = np.linalg.matrix_power(pad, m) @ a
    t3 = pad_m1 @ np.diag(r**n).astype(a.dtype) * bracket
    cols = rep.interior(depth_top=m)
    rows = np.ones(len(n), dtype=bool)
    return _residual([t1, t2, t3], [1, -1, -1], rows, cols, relative)


def basis_vector_residual(rep, n_max):
    """Max over ``n <= n_max`` of ``|(a+)**n |0> - sqrt([n; q, lam]!) |n>|``, relative.

    Only meaningful on ``H0``.
    """
    if rep.kind is not ModuleKind.H0:
        raise DomainError("basis-vector construction is defined on H0")
    if n_max > rep.window.n_max:
        raise DomainError("n_max exceeds the window")
    size = rep.window.size
    v = np.zeros(size, dtype=rep.a.entries.dtype)
    v[0] = 1
    br = _brackets(rep.window.indices, rep.params.q, rep.params.lam, rep.precision)
    fact = 1.0
    worst = 0.0
    for n in range(n_max + 1):
        if n > 0:
            v = rep.a_dagger.entries @ v
            fact = fact * br[n]
        target = np.zeros(size, dtype=v.dtype)
        target[n] = np.sqrt(fact)
        worst = max(worst, float(np.abs(v - target).max() / np.sqrt(fact)))
    return worst


@dataclass(frozen=True)
class WignerDeformation:
    """Deformation function ``F(n) = c_{n+1}**2 - c_n**2`` of a Jacobi-type ``a``.

    ``n`` holds the indices where ``F`` is defined; ``commutator_residual``
    is the interior max-norm of ``[a, a+] - F(N)``; ``zeta_shift`` is the
    constant value of ``c(N)**2 - a+ a`` on interior states and
    ``zeta_spread`` its variation.
    """

    n: np.ndarray
    F: np.ndarray
    commutator_residual: float
    zeta_shift: float
    zeta_spread: float


def wigner_deformation(c, n_start=1):
    """Treat ``a|n> = c_n |n-1>`` as an annihilation operator and read off ``F``.

    Parameters
    ----------
    c : sequence of float
        Positive coefficients ``c_{n_start}, c_{n_start+1}, ...``.
    n_start : int
        Index of the first coefficient.  ``n_start = 1`` means a vacuum at
        ``n = 0`` (``c_0 = 0``); smaller values describe a Z-graded module
        whose lowest state is a truncation boundary.
    """
    c = np.asarray(c, dtype=float)
    if c.ndim != 1 or len(c) < 2:
        raise DomainError("need at least two coefficients")
    if np.any(~(c > 0)):
        raise DomainError("coefficients must be strictly positive")
    if n_start > 1:
        raise DomainError("n_start must be <= 1")
    fock = n_start == 1
    window = BasisWindow(n_start - 1, n_start - 1 + len(c)) if not fock else BasisWindow(0, len(c))
    size = window.size
    a = np.zeros((size, size))
    a[np.arange(size - 1), np.arange(1, size)] = c
    c2 = np.zeros(size)
    c2[1:] = c**2
    ad = a.T
    comm = a @ ad - ad @ a
    n = window.indices
    # F(n) needs c_{n+1}: defined for all but the top state
    F = c2[1:] - c2[:-1]
    mask = np.ones(size, dtype=bool)
    mask[-1] = False
    if not fock:
        mask[0] = False
    FN = np.diag(np.append(F, 0.0))
    res = np.abs((comm - FN)[np.ix_(mask, mask)]).max()
    central = np.diag(c2) - ad @ a
    vals = np.diag(central)[mask]
    if fock:
        F_n, F_vals = n[:-1], F
    else:
        F_n, F_vals = n[1:-1], F[1:]
    return WignerDeformation(
        F_n, F_vals, float(res), float(vals.mean()), float(vals.max() - vals.min())
    )
