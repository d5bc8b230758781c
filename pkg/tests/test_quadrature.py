"""Tests for the adaptive Gauss-Kronrod integrators.

The battery of analytic integrals checks two promises at once: when a
result reports ``converged`` the true error respects the requested
tolerance, and the reported ``error_estimate`` is honest (the true
error never exceeds it by more than a small factor).  Reference values
come from closed forms; the one non-elementary pin was generated by
``tests/oracles.py``.
"""

import math

import numpy as np
import pytest
from hypothesis import given, strategies as st

from coaxcasimir import (
    QuadratureSpec,
    integrate_finite,
    integrate_semi_infinite,
    log_mode_factor,
)

# oracle pin: integral_0^2pi sin t / (0.1 + 0.05 sin t)^4 dt
TRIG_QUARTIC = -182723.491508039724208
# oracle pin: integral_0^inf y ln M_0(y; ratio=2) dy
ORDER_ZERO_TERM_AT_2 = -0.4601514589219998824517

FINITE_CASES = [
    (lambda x: np.sin(x), 0.0, math.pi, 2.0),
    (lambda x: x**2, 0.0, 1.0, 1.0 / 3.0),
    (lambda x: np.exp(x), 0.0, 1.0, math.e - 1.0),
    (lambda x: 1.0 / (1.0 + x * x), 0.0, 1.0, math.pi / 4.0),
    (lambda x: np.sqrt(x), 0.0, 1.0, 2.0 / 3.0),
    (lambda x: np.log(x), 0.0, 1.0, -1.0),
    (lambda x: x**20, 0.0, 1.0, 1.0 / 21.0),
    (lambda x: np.abs(x - 1.0 / 3.0), 0.0, 1.0, 5.0 / 18.0),
    (lambda x: 1.0 / (1.0 + 25.0 * x * x), -1.0, 1.0,
     0.4 * math.atan(5.0)),
    (lambda x: np.exp(-x) * np.cos(x), 0.0, 20.0,
     0.5 * (1.0 + math.exp(-20.0) * (math.sin(20.0) - math.cos(20.0)))),
    (lambda x: np.exp(-x * x), -5.0, 5.0, math.sqrt(math.pi) * math.erf(5.0)),
    (lambda x: np.sin(51.0 * x), 0.0, math.pi, 2.0 / 51.0),
    (lambda x: np.sin(x) / (0.1 + 0.05 * np.sin(x)) ** 4, 0.0,
     2.0 * math.pi, TRIG_QUARTIC),
    (lambda x: x**3 - 2.0 * x + 1.0, -2.0, 3.0, 16.25),
    (lambda x: np.cosh(x), 0.0, 2.0, math.sinh(2.0)),
    (lambda x: 1.0 / x, 1.0, math.e, 1.0),
    (lambda x: np.sin(x) ** 2, 0.0, 2.0 * math.pi, math.pi),
    (lambda x: x * np.cos(x), 0.0, 3.0 * math.pi, -2.0),
]

SEMI_INFINITE_CASES = [
    (lambda x: np.exp(-x), 1.0),
    (lambda x: x * np.exp(-2.0 * x), 0.25),
    (lambda x: np.exp(-x * x), 0.5 * math.sqrt(math.pi)),
    (lambda x: x * x * np.exp(-x), 2.0),
    (lambda x: np.exp(-x) * np.sin(x), 0.5),
    (lambda x: 1.0 / (1.0 + x * x), 0.5 * math.pi),
    (lambda x: 1.0 / np.cosh(x), 0.5 * math.pi),
    (lambda y: y * log_mode_factor(0, y, 2.0), ORDER_ZERO_TERM_AT_2),
]

DEFAULT = QuadratureSpec()


def _assert_honest(result, exact, spec):
    true_error = abs(result.value - exact)
    assert result.converged
    assert true_error <= max(spec.abs_tol, spec.rel_tol * abs(exact))
    assert true_error <= 10.0 * result.error_estimate + 1e-13 * (
        1.0 + abs(exact)
    )


@pytest.mark.parametrize("f,lo,hi,exact", FINITE_CASES)
def test_finite_integrals_converge_within_tolerance(f, lo, hi, exact):
    _assert_honest(integrate_finite(f, lo, hi), exact, DEFAULT)


@pytest.mark.parametrize("f,exact", SEMI_INFINITE_CASES)
def test_semi_infinite_integrals_converge_within_tolerance(f, exact):
    _assert_honest(integrate_semi_infinite(f), exact, DEFAULT)


def test_error_estimate_within_requested_tolerance_on_success():
    result = integrate_finite(lambda x: np.sin(x), 0.0, math.pi)
    assert result.error_estimate <= max(
        DEFAULT.abs_tol, DEFAULT.rel_tol * abs(result.value)
    )


def test_divergent_integrand_raises():
    """Non-integrable pole inside the range: refuse, never fake a value."""
    with np.errstate(divide="ignore"):
        with pytest.raises(ValueError):
            integrate_finite(
                lambda t: np.sin(t) / (0.1 + 0.1 * np.sin(t)) ** 4,
                0.0,
                2.0 * math.pi,
            )


def test_non_finite_integrand_raises_with_location():
    def bad(x):
        out = np.ones_like(x)
        out[x > 0.5] = np.nan
        return out

    with pytest.raises(ValueError, match="non-finite"):
        integrate_finite(bad, 0.0, 1.0)


def test_results_are_deterministic():
    f = lambda x: np.exp(-x) * np.sin(3.0 * x)  # noqa: E731
    first = integrate_semi_infinite(f)
    second = integrate_semi_infinite(f)
    assert first == second


def test_budget_exhaustion_reports_non_convergence():
    spec = QuadratureSpec(rel_tol=1e-9, abs_tol=1e-14, max_subdivisions=3)
    result = integrate_finite(
        lambda x: np.sin(51.0 * x), 0.0, math.pi, spec
    )
    assert not result.converged
    assert math.isfinite(result.value)


def test_tail_cut_controls_leading_panel():
    """A matched tail_cut must not change the converged answer."""
    wide = integrate_semi_infinite(
        lambda x: np.exp(-x / 30.0) / 30.0,
        QuadratureSpec(tail_cut=30.0),
    )
    default = integrate_semi_infinite(lambda x: np.exp(-x / 30.0) / 30.0)
    assert wide.converged and default.converged
    assert wide.value == pytest.approx(1.0, rel=1e-9)
    assert default.value == pytest.approx(1.0, rel=1e-9)


def test_bound_validation():
    f = lambda x: np.ones_like(x)  # noqa: E731
    with pytest.raises(ValueError):
        integrate_finite(f, 1.0, 1.0)
    with pytest.raises(ValueError):
        integrate_finite(f, 0.0, math.inf)
    with pytest.raises(ValueError):
        integrate_finite(f, math.nan, 1.0)


def test_spec_validation():
    with pytest.raises(ValueError):
        QuadratureSpec(rel_tol=0.0)
    with pytest.raises(ValueError):
        QuadratureSpec(abs_tol=-1e-9)
    with pytest.raises(ValueError):
        QuadratureSpec(max_subdivisions=0)
    with pytest.raises(ValueError):
        QuadratureSpec(tail_cut=0.0)


def test_shape_mismatch_raises():
    with pytest.raises(ValueError, match="one value per abscissa"):
        integrate_finite(lambda x: np.array([1.0]), 0.0, 1.0)


@given(
    scale=st.floats(min_value=0.1, max_value=10.0),
    shift=st.floats(min_value=-5.0, max_value=5.0),
)
def test_affine_exactness(scale, shift):
    """Affine integrands are integrated essentially exactly."""
    lo, hi = shift, shift + scale
    result = integrate_finite(lambda x: 2.0 * x + 1.0, lo, hi)
    exact = (hi**2 + hi) - (lo**2 + lo)
    assert result.converged
    assert result.value == pytest.approx(exact, rel=1e-13, abs=1e-13)


@given(decay=st.floats(min_value=0.05, max_value=20.0))
def test_exponential_tail_families(decay):
    """integral_0^inf e^(-d x) dx = 1/d across decay scales."""
    result = integrate_semi_infinite(
        lambda x: np.exp(-decay * x),
        QuadratureSpec(tail_cut=1.0 / decay),
    )
    assert result.converged
    assert result.value == pytest.approx(1.0 / decay, rel=1e-9)
