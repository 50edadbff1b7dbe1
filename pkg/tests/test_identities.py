from __future__ import annotations

from hypothesis import given
from hypothesis import strategies as st
import pytest
from strategies import monomials, theta_specs

from qdissect.models import ONE, Monomial, ThetaSpec, ThetaTerm
from qdissect.series.core import Series
from qdissect.theta.functions import ThetaError, theta_series
from qdissect.theta.identities import (
    make_term,
    multiply_terms,
    product_split,
    split3,
    square_split,
    theta_term_series,
    unit_argument_rewrite,
)

ORDER = 300


def _total(terms: tuple[ThetaTerm, ...]) -> Series:
    total = Series.zero(ORDER)
    for term in terms:
        total = total + theta_term_series(term, ORDER)
    return total


def test_unit_argument_rewrite() -> None:
    assert unit_argument_rewrite(ThetaSpec.of(0, 4)) == (2, ThetaSpec.of(4, 12))
    assert unit_argument_rewrite(ThetaSpec.of(4, 0)) == (2, ThetaSpec.of(4, 12))
    assert unit_argument_rewrite(ThetaSpec.of(0, 4, -1, 1)) == (0, None)
    spec = ThetaSpec.of(1, 4)
    assert unit_argument_rewrite(spec) == (1, spec)


def test_make_term_folds_shift_sign() -> None:
    term = make_term(3, Monomial(sign=-1, exp=2), [ThetaSpec.of(1, 2)])
    assert term.coeff == -3
    assert term.shift == Monomial(exp=2)


def test_make_term_drops_vanishing_factor() -> None:
    term = make_term(1, ONE, [ThetaSpec.of(1, 2), ThetaSpec.of(0, 3, -1, 1)])
    assert term.coeff == 0
    assert term.factors == ()
    assert theta_term_series(term, 10).is_zero()


def test_split3_of_small_theta() -> None:
    first, second = split3(ThetaSpec.of(1, 4, -1, -1))
    assert first == ThetaTerm(coeff=1, factors=(ThetaSpec.of(7, 13),))
    assert second == ThetaTerm(coeff=-1, shift=Monomial(exp=1), factors=(ThetaSpec.of(3, 17),))


def test_square_split_pulls_out_multipliers() -> None:
    first, second = square_split(ThetaSpec.of(6, 9, -1, -1))
    assert [spec.label() for spec in first.factors] == ["f(q^12,q^18)", "phi(q^15)"]
    assert second.coeff == -2
    assert second.shift == Monomial(exp=6)
    assert [spec.label() for spec in second.factors] == ["f(q^3,q^27)", "psi(q^30)"]


def test_product_split_requires_equal_products() -> None:
    with pytest.raises(ThetaError, match="product identity precondition violated"):
        product_split(ThetaSpec.of(1, 4), ThetaSpec.of(2, 4))


def test_multiply_terms_concatenates() -> None:
    x = make_term(2, Monomial(exp=1), [ThetaSpec.of(1, 2)])
    y = make_term(-1, Monomial(exp=3), [ThetaSpec.of(2, 5)])
    product = multiply_terms(x, y)
    assert product.coeff == -2
    assert product.shift == Monomial(exp=4)
    assert product.factors == (ThetaSpec.of(1, 2), ThetaSpec.of(2, 5))


@given(spec=theta_specs(low=1))
def test_split3_identity(spec: ThetaSpec) -> None:
    assert theta_series(spec, ORDER) == _total(split3(spec))


@given(spec=theta_specs(low=1))
def test_square_split_identity(spec: ThetaSpec) -> None:
    value = theta_series(spec, ORDER)
    assert value * value == _total(square_split(spec))


@given(
    a=monomials(-3, 8),
    b_exp=st.integers(1, 8),
    b_sign=st.sampled_from([1, -1]),
    c=monomials(-4, 10),
)
def test_product_split_identity(a: Monomial, b_exp: int, b_sign: int, c: Monomial) -> None:
    b = Monomial(sign=b_sign, exp=max(b_exp, 1 - a.exp))
    d = (a * b) / c
    left, right = ThetaSpec(a=a, b=b), ThetaSpec(a=c, b=d)
    expected = theta_series(left, ORDER) * theta_series(right, ORDER)
    assert expected == _total(product_split(left, right))
