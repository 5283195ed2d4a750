import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qosc.qcore import DomainError, NonConvergenceError, QParams, SeriesPolicy, q_bracket, q_factorial_lambda
from qosc.qfunc import e_q
from qosc.qmeasure import (
    EvaluationError,
    JacksonGrid,
    jackson_integral,
    jackson_moment,
    moment_growth,
    resolution_of_unity_diag,
    resolution_weight,
    stieltjes_moment_target,
)


@given(st.floats(0.01, 50), st.floats(0.05, 0.95))
def test_constant(b, q):
    assert jackson_integral(lambda x: 1.0, b, q) == pytest.approx(b, rel=1e-14)


def test_linear():
    assert jackson_integral(lambda x: x, 1.0, 0.5) == pytest.approx(2 / 3, rel=1e-15)


@given(st.integers(0, 8), st.floats(0.1, 3), st.floats(0.1, 0.9))
@settings(max_examples=50)
def test_power_closed_form(n, b, q):
    exact = b ** (n + 1) / q_bracket(n + 1, q)
    assert jackson_integral(lambda x: x**n, b, q) == pytest.approx(exact, rel=1e-13)


coef = st.one_of(st.just(0.0), st.floats(1e-6, 3), st.floats(-3, -1e-6))


@given(st.lists(coef, min_size=3, max_size=3), st.floats(0.2, 0.9))
@settings(max_examples=40)
def test_linearity(c, q):
    fs = [lambda x: x, lambda x: math.exp(-x), lambda x: x * x]
    combo = jackson_integral(lambda x: sum(ci * f(x) for ci, f in zip(c, fs)), 1.5, q)
    parts = sum(ci * jackson_integral(f, 1.5, q) for ci, f in zip(c, fs))
    scale = sum(abs(ci) * jackson_integral(lambda x, f=f: abs(f(x)), 1.5, q) for ci, f in zip(c, fs))
    assert abs(combo - parts) <= 1e-13 * max(scale, 1e-300)


def test_errors():
    with pytest.raises(DomainError):
        jackson_integral(lambda x: x, 1.0, 1.0)
    with pytest.raises(EvaluationError):
        jackson_integral(lambda x: 1 / (x - 0.5), 1.0, 0.5)
    with pytest.raises(NonConvergenceError):
        jackson_integral(lambda x: x**-1.5, 1.0, 0.5, SeriesPolicy(max_terms=200))


def test_full_output_grid():
    _, grid = jackson_integral(lambda x: 1.0, 2.0, 0.5, full_output=True)
    pts = grid.points
    assert isinstance(grid, JacksonGrid)
    assert pts[0] == 2.0 and np.all(np.diff(pts) < 0)
    assert 2.0 * 0.5 ** grid.m_cut < 1e-17


def test_weight_is_reciprocal_of_e_q():
    for x in (0.0, 0.3, 1.1):
        assert resolution_weight(x, 0.5) == pytest.approx(1 / e_q(0.5 * x, 0.5).real, rel=1e-14)
    # at the endpoint the series diverges, the product does not
    assert resolution_weight(2.0, 0.5) > 0


@pytest.mark.parametrize("q", [0.3, 0.5, 0.8])
def test_moment_identity(q):
    for n in range(13):
        assert jackson_moment(n, q) == pytest.approx(q_factorial_lambda(n, q), rel=1e-10)


@pytest.mark.parametrize("n", [0, 10])
def test_resolution_of_unity(n):
    assert resolution_of_unity_diag(n, 0.5) == pytest.approx(1.0, abs=1e-10)


def test_negative_control():
    devs = [abs(resolution_of_unity_diag(n, 0.5, shifted=False) - 1) for n in range(6)]
    assert min(devs) > 0.1
    assert all(b >= a for a, b in zip(devs, devs[1:]))


def test_deeper_cut_is_invariant():
    a = resolution_of_unity_diag(7, 0.5)
    b = resolution_of_unity_diag(7, 0.5, SeriesPolicy(tail_cutoff=1e-30))
    assert abs(a - b) <= 1e-10


def test_stieltjes_targets():
    assert stieltjes_moment_target(0, QParams(0.5)) == 1.0
    assert stieltjes_moment_target(3, QParams(0.5)) == pytest.approx(2.625)
    assert stieltjes_moment_target(2, QParams(0.5, 1.0)) == pytest.approx(3.0)
    # the symmetric family: [n;q^2,1/2]! = [n]_q!
    from qosc.qcore import q_bracket_sym

    sym = math.prod(q_bracket_sym(m, 0.5) for m in range(1, 6))
    assert stieltjes_moment_target(5, QParams(0.25, 0.5)) == pytest.approx(sym, rel=1e-13)


def test_moment_growth():
    g = moment_growth(QParams(0.5, 1.0), 20)
    assert g["log_moment"][0] == 0
    assert np.all(np.diff(g["log_moment"])[1:] > 0)
    assert g["carleman"][-1] < moment_growth(QParams(0.5, 0.0), 20)["carleman"][-1]
