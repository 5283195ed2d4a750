"""Numerics for the q-deformed oscillator algebra ``a a_dagger - q a_dagger a = 1``.

Modules
-------
qcore      q-brackets, factorials, Pochhammer symbols, parameters, policies
qfunc      q-exponentials ``e_q``, ``E_q`` and ``exp(z; q, lam)``
oscrep     truncated matrix representations and algebra residuals
qstates    coherent states, overlaps, generating functions
qhermite   q-Hermite polynomials, Jacobi matrix, Gauss measures, moments
qmeasure   Jackson integration and the coherent-state resolution of unity
cli        command-line front end (``qosc``)
"""

__version__ = "0.1.0"

from .qcore import (  # noqa: F401
    ConditioningError,
    DivergenceError,
    DomainError,
    NonConvergenceError,
    PoleError,
    QoscError,
    QParams,
    SeriesPolicy,
    q_bracket,
    q_bracket_lambda,
    q_bracket_sym,
    q_factorial_lambda,
    q_pochhammer,
)
