from __future__ import annotations

from collections.abc import Sequence

from qdissect.models import ONE, Monomial, ThetaSpec, ThetaTerm
from qdissect.series.core import Series
from qdissect.theta.functions import ThetaError, theta_min_exponent, theta_series


def unit_argument_rewrite(spec: ThetaSpec) -> tuple[int, ThetaSpec | None]:
    """Rewrite f(1, x) = 2 f(x, x^3) and f(-1, x) = 0.

    Returns (multiplier, replacement); a multiplier of 0 means the factor vanishes.
    """
    a, b = spec.a, spec.b
    if b.exp == 0:
        a, b = b, a
    if a.exp != 0:
        return 1, spec
    if a.sign < 0:
        return 0, None
    return 2, ThetaSpec(a=b, b=b**3)


def make_term(coeff: int, shift: Monomial, factors: Sequence[ThetaSpec]) -> ThetaTerm:
    """Normalize a term: the shift sign moves into coeff and unit arguments are eliminated."""
    coeff *= shift.sign
    kept: list[ThetaSpec] = []
    for spec in factors:
        multiplier, replacement = unit_argument_rewrite(spec)
        coeff *= multiplier
        if replacement is None:
            kept = []
            break
        kept.append(replacement)
    if coeff == 0:
        return ThetaTerm(coeff=0, shift=Monomial(exp=shift.exp), factors=())
    return ThetaTerm(coeff=coeff, shift=Monomial(exp=shift.exp), factors=tuple(kept))


def multiply_terms(x: ThetaTerm, y: ThetaTerm) -> ThetaTerm:
    return make_term(x.coeff * y.coeff, x.shift * y.shift, x.factors + y.factors)


def split3(spec: ThetaSpec) -> tuple[ThetaTerm, ThetaTerm]:
    """f(a,b) = f(a^3 b, a b^3) + a f(b/a, a^5 b^3)."""
    a, b = spec.a, spec.b
    first = make_term(1, ONE, [ThetaSpec(a=a**3 * b, b=a * b**3)])
    second = make_term(1, a, [ThetaSpec(a=b / a, b=a**5 * b**3)])
    return first, second


def square_split(spec: ThetaSpec) -> tuple[ThetaTerm, ThetaTerm]:
    """f(a,b)^2 = f(a^2,b^2) f(ab,ab) + a f(b/a, a^3 b) f(1, a^2 b^2)."""
    a, b = spec.a, spec.b
    ab = a * b
    first = make_term(1, ONE, [ThetaSpec(a=a**2, b=b**2), ThetaSpec(a=ab, b=ab)])
    second = make_term(1, a, [ThetaSpec(a=b / a, b=a**3 * b), ThetaSpec(a=ONE, b=ab**2)])
    return first, second


def product_split(left: ThetaSpec, right: ThetaSpec) -> tuple[ThetaTerm, ThetaTerm]:
    """f(a,b) f(c,d) = f(ac,bd) f(ad,bc) + a f(b/c, (c/b)abcd) f(b/d, (d/b)abcd) when ab = cd."""
    a, b = left.a, left.b
    c, d = right.a, right.b
    if a * b != c * d:
        raise ThetaError("product identity precondition violated")
    abcd = a * b * c * d
    first = make_term(1, ONE, [ThetaSpec(a=a * c, b=b * d), ThetaSpec(a=a * d, b=b * c)])
    second = make_term(
        1,
        a,
        [ThetaSpec(a=b / c, b=(c / b) * abcd), ThetaSpec(a=b / d, b=(d / b) * abcd)],
    )
    return first, second


def theta_term_series(term: ThetaTerm, order: int) -> Series:
    shift = term.shift.exp
    coeff = term.coeff * term.shift.sign
    if coeff == 0:
        return Series.zero(order)
    if not term.factors:
        return Series.monomial(shift, order, coeff)
    lows = [theta_min_exponent(spec) for spec in term.factors]
    total_low = sum(lows)
    if shift + total_low > order:
        return Series.zero(order)
    budget = order - shift
    result = Series.constant(coeff, budget - total_low)
    for spec, low in zip(term.factors, lows, strict=True):
        # the other factors start at total_low - low
        result = result * theta_series(spec, budget - (total_low - low))
    return result.shift(shift).truncate(order)
