from __future__ import annotations

from math import isqrt

from qdissect.models import ThetaSpec
from qdissect.series.core import Series
from qdissect.series.products import multiply_pochhammer


class ThetaError(ValueError):
    """Raised when a theta function cannot be evaluated in the requested form."""


def quadratic_window(s2: int, d2: int, limit2: int) -> range:
    """All integers x with s2*x^2 + d2*x <= limit2 (s2 > 0), as a contiguous range."""
    if s2 <= 0:
        raise ThetaError("quadratic window needs a positive leading coefficient")
    disc = d2 * d2 + 4 * s2 * limit2
    if disc < 0:
        return range(0)
    root = isqrt(disc)
    lo = (-d2 - root - 1) // (2 * s2) - 1
    hi = -((d2 - root - 1) // (2 * s2)) + 1

    def value(x: int) -> int:
        return s2 * x * x + d2 * x

    if value(lo) <= limit2 or value(hi) <= limit2:
        raise ThetaError("summation window does not enclose the admissible range")
    while lo + 1 < hi and value(lo + 1) > limit2:
        lo += 1
    while hi - 1 > lo + 1 and value(hi - 1) > limit2:
        hi -= 1
    return range(lo + 1, hi)


def quadratic_minimum(s2: int, d2: int) -> int:
    x = -d2 // (2 * s2)
    return min(s2 * k * k + d2 * k for k in (x - 1, x, x + 1, x + 2))


def theta_min_exponent(spec: ThetaSpec) -> int:
    return quadratic_minimum(spec.a.exp + spec.b.exp, spec.a.exp - spec.b.exp) // 2


def theta_series(spec: ThetaSpec, order: int) -> Series:
    """sum_k a^(k(k+1)/2) b^(k(k-1)/2) over every k whose exponent is at most ``order``."""
    a, b = spec.a, spec.b
    s2 = a.exp + b.exp
    d2 = a.exp - b.exp
    terms: dict[int, int] = {}
    for k in quadratic_window(s2, d2, 2 * order):
        upper = k * (k + 1) // 2
        lower = k * (k - 1) // 2
        exp = a.exp * upper + b.exp * lower
        sign = (a.sign if upper % 2 else 1) * (b.sign if lower % 2 else 1)
        terms[exp] = terms.get(exp, 0) + sign
    return Series.from_terms(terms, order, lo=min(theta_min_exponent(spec), order))


def theta_product(spec: ThetaSpec, order: int) -> Series:
    """Jacobi triple product (-a, -b, ab; ab)_inf for non-negative argument exponents."""
    a, b = spec.a, spec.b
    if a.exp < 0 or b.exp < 0:
        raise ThetaError("use series form")
    if order < 0:
        raise ThetaError("truncation order must be >= 0")
    modulus = a.exp + b.exp
    base_sign = a.sign * b.sign
    coeffs = [0] * (order + 1)
    coeffs[0] = 1
    multiply_pochhammer(coeffs, -a.sign, a.exp, modulus, base_sign)
    multiply_pochhammer(coeffs, -b.sign, b.exp, modulus, base_sign)
    multiply_pochhammer(coeffs, base_sign, modulus, modulus, base_sign)
    return Series(0, order, coeffs)


def phi(k: int) -> ThetaSpec:
    return ThetaSpec.of(k, k)


def psi(k: int) -> ThetaSpec:
    return ThetaSpec.of(k, 3 * k)
