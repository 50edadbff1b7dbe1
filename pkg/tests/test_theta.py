from __future__ import annotations

from hypothesis import given
from hypothesis import strategies as st
from pydantic import ValidationError
import pytest
from strategies import signs, theta_specs

from qdissect.models import ThetaSpec
from qdissect.series.core import Series
from qdissect.theta.functions import (
    ThetaError,
    phi,
    psi,
    quadratic_window,
    theta_min_exponent,
    theta_product,
    theta_series,
)

ORDER = 300


def test_signed_theta_series_small_example() -> None:
    series = theta_series(ThetaSpec.of(1, 4, -1, -1), 7)
    assert dict(series.terms()) == {0: 1, 1: -1, 4: -1, 7: 1}


def test_phi_and_psi() -> None:
    assert dict(theta_series(phi(1), 16).terms()) == {0: 1, 1: 2, 4: 2, 9: 2, 16: 2}
    assert dict(theta_series(psi(1), 15).terms()) == {0: 1, 1: 1, 3: 1, 6: 1, 10: 1, 15: 1}
    assert phi(15).label() == "phi(q^15)"
    assert psi(30).label() == "psi(q^30)"


def test_laurent_theta_has_negative_exponents() -> None:
    spec = ThetaSpec.of(-1, 3)
    assert theta_min_exponent(spec) == -1
    series = theta_series(spec, 10)
    assert series.lo == -1
    assert series.coefficient(-1) == 1


def test_divergent_spec_is_rejected() -> None:
    with pytest.raises(ValidationError, match="divergent theta spec"):
        ThetaSpec.of(2, -2)


def test_product_form_needs_nonnegative_exponents() -> None:
    with pytest.raises(ThetaError, match="use series form"):
        theta_product(ThetaSpec.of(-1, 3), 20)


def test_quadratic_window_is_exact() -> None:
    window = quadratic_window(3, -1, 40)
    inside = [x for x in range(-50, 51) if 3 * x * x - x <= 40]
    assert list(window) == inside


@given(k=st.integers(1, 25), sign=signs)
def test_unit_arguments(k: int, sign: int) -> None:
    # x^3 keeps the sign of x
    doubled = theta_series(ThetaSpec.of(k, 3 * k, sign, sign), ORDER) * 2
    assert theta_series(ThetaSpec.of(0, k, 1, sign), ORDER) == doubled
    assert theta_series(ThetaSpec.of(k, 0, sign, 1), ORDER) == doubled
    assert theta_series(ThetaSpec.of(0, k, -1, sign), ORDER).is_zero()


@given(spec=theta_specs())
def test_triple_product_matches_series(spec: ThetaSpec) -> None:
    assert theta_series(spec, ORDER) == theta_product(spec, ORDER)


@given(spec=theta_specs(low=-6))
def test_theta_is_symmetric(spec: ThetaSpec) -> None:
    assert theta_series(spec, ORDER) == theta_series(spec.swapped(), ORDER)


@given(spec=theta_specs(low=-6))
def test_series_starts_at_min_exponent(spec: ThetaSpec) -> None:
    series = theta_series(spec, ORDER)
    low = theta_min_exponent(spec)
    assert series.lo == low
    assert all(exp >= low for exp, _ in series.terms())
    assert isinstance(series, Series)
