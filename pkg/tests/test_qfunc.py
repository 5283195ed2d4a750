import cmath

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qosc.qcore import DivergenceError, DomainError, PoleError
from qosc.qfunc import (
    ConvergenceKind,
    big_E_q,
    convergence_class,
    e_q,
    e_q_product,
    exp_q_lambda,
)


def test_convergence_classes():
    assert convergence_class(0.5, 0.3).kind is ConvergenceKind.ENTIRE
    c = convergence_class(0.5, 0.0)
    assert c.kind is ConvergenceKind.FINITE_RADIUS and c.radius == 2.0
    assert convergence_class(0.5, -0.1).kind is ConvergenceKind.ZERO_RADIUS
    with pytest.raises(DomainError):
        convergence_class(1.0, 0.0)


def test_e_q_frozen_oracle():
    # mpmath: 1/(0.5*x; 0.5)_inf at 40 digits
    assert e_q(1.9, 0.5).real == pytest.approx(63.99720823573140805, rel=1e-14)
    assert e_q_product(1.9, 0.5).real == pytest.approx(63.99720823573140805, rel=1e-14)
    assert e_q_product(2.5, 0.5).real == pytest.approx(-21.58993727491793427, rel=1e-13)
    assert e_q(1.0, 0.5).real == pytest.approx(3.462746619455063612, rel=1e-15)


def test_e_q_above_one_is_entire():
    # mpmath: sum 3^n / [n;2]!
    assert e_q(3.0, 2.0).real == pytest.approx(8.568955248757098962, rel=1e-14)


def test_big_E_q_frozen_oracle():
    assert big_E_q(2, 0.6).real == pytest.approx(5.901809546627586147, rel=1e-14)
    assert big_E_q(-3, 0.5).real == pytest.approx(0.04748850786035455441, rel=1e-12)


def test_e_q_zero():
    assert e_q(0, 0.5) == 1.0
    assert exp_q_lambda(0, 0.5, -1.0).value == 1.0


def test_outside_radius_refused():
    with pytest.raises(DivergenceError):
        exp_q_lambda(2.5, 0.5, 0.0)


def test_zero_radius_message():
    with pytest.raises(DivergenceError, match="zero radius of convergence"):
        exp_q_lambda(1e-8, 0.5, -0.5)


def test_formal_mode_flags_growth():
    r = exp_q_lambda(1.0, 0.5, -0.5, mode="formal")
    assert r.diverging and not r.converged
    assert r.smallest_term_index > 0


def test_pole_refused():
    with pytest.raises(PoleError):
        e_q_product(2.0, 0.5)
    with pytest.raises(PoleError):
        e_q_product(8.0, 0.5)


def test_big_E_q_rejects_one():
    with pytest.raises(DomainError):
        big_E_q(1.0, 1.0)


@given(st.floats(0.1, 0.9), st.floats(0, 0.9), st.floats(0, 2 * np.pi))
@settings(max_examples=60, deadline=None)
def test_series_matches_product(q, frac, theta):
    z = frac / (1 - q) * cmath.exp(1j * theta)
    a, b = e_q(z, q), e_q_product(z, q)
    scale = e_q(abs(z), q).real
    assert abs(a - b) <= 1e-13 * scale


@given(st.floats(0.2, 0.9), st.floats(0, 5), st.floats(0, 2 * np.pi))
@settings(max_examples=60, deadline=None)
def test_family_identities(q, r, theta):
    z = r * cmath.exp(1j * theta)
    a = exp_q_lambda(z, q, 1.0).value
    b = e_q(z, 1 / q)
    assert abs(a - b) <= 1e-13 * e_q(r, 1 / q).real
    c = exp_q_lambda(z, q * q, 0.5).value
    d = big_E_q(z, q)
    assert abs(c - d) <= 1e-13 * big_E_q(r, q).real


@given(st.floats(0.1, 0.9), st.floats(-1.5, 1.5))
@settings(max_examples=40)
def test_jackson_derivative_of_e_q(q, x):
    # D_q e_q(x) = e_q(x) with D_q f(x) = (f(x) - f(qx)) / ((1-q) x)
    x = x / (1 - q) * 0.6
    if abs(x) < 1e-3:
        return
    lhs = (e_q(x, q) - e_q(q * x, q)) / ((1 - q) * x)
    assert lhs.real == pytest.approx(e_q(x, q).real, rel=1e-9)


def test_formal_mode_survives_intermediate_underflow():
    # terms dip below the binary64 range before the superexponential growth
    r = exp_q_lambda(1e-6, 0.5, -0.1, mode="formal")
    assert r.diverging and not r.converged
    assert r.terms > 100
