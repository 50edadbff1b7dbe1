from __future__ import annotations

from hypothesis import strategies as st

from qdissect.models import Monomial, PochFactor, ProductSpec, QuadLatticeSum, ThetaSpec
from qdissect.series.core import Series

signs = st.sampled_from([1, -1])


@st.composite
def monomials(draw: st.DrawFn, low: int = 0, high: int = 10) -> Monomial:
    return Monomial(sign=draw(signs), exp=draw(st.integers(low, high)))


@st.composite
def theta_specs(draw: st.DrawFn, low: int = 0, high: int = 10) -> ThetaSpec:
    """Convergent theta arguments; ``low`` < 0 admits Laurent cases."""
    a = draw(monomials(low, high))
    b_exp = draw(st.integers(max(1 - a.exp, 0), high))
    return ThetaSpec(a=a, b=Monomial(sign=draw(signs), exp=b_exp))


@st.composite
def positive_theta_specs(draw: st.DrawFn, high: int = 12) -> ThetaSpec:
    return ThetaSpec.of(draw(st.integers(1, high)), draw(st.integers(1, high)))


def _linear(quadratic: int, draw: st.DrawFn) -> int:
    linear = draw(st.integers(-quadratic - 4, quadratic + 4))
    return linear if (quadratic - linear) % 2 == 0 else linear + 1


@st.composite
def lattice_sums(draw: st.DrawFn) -> QuadLatticeSum:
    a2 = draw(st.integers(2, 16))
    c2 = draw(st.integers(2, 16))
    return QuadLatticeSum(
        shift=draw(st.integers(0, 4)),
        sign=draw(signs),
        a2=a2,
        b2=_linear(a2, draw),
        c2=c2,
        d2=_linear(c2, draw),
    )


@st.composite
def pair_factors(draw: st.DrawFn) -> PochFactor:
    m = draw(st.integers(2, 21))
    sign = draw(signs)
    return PochFactor(
        sign1=sign,
        sign2=draw(signs),
        a=draw(st.integers(1, m - 1)),
        m=m,
        power=draw(st.integers(1, 3)),
    )


product_specs = st.lists(pair_factors(), min_size=1, max_size=3).map(
    lambda factors: ProductSpec(factors=tuple(factors))
)


@st.composite
def laurent_series(draw: st.DrawFn, max_width: int = 25) -> Series:
    lo = draw(st.integers(-3, 5))
    coeffs = draw(st.lists(st.integers(-6, 6), min_size=1, max_size=max_width))
    return Series(lo, lo + len(coeffs) - 1, coeffs)
