from __future__ import annotations

from qdissect.models import PochFactor, ProductSpec
from qdissect.series.core import Series, SeriesError


def multiply_pochhammer(
    coeffs: list[int],
    sign: int,
    start: int,
    step: int,
    base_sign: int = 1,
) -> None:
    """Multiply ``coeffs`` in place by prod_k (1 - sign*base_sign^k q^(start+k*step)).

    ``coeffs[i]`` is the coefficient of q^i. A factor with exponent 0 contributes the
    scalar (1 - its sign).
    """
    size = len(coeffs)
    factor_sign = sign
    exp = start
    while exp < size:
        if exp == 0:
            scalar = 1 - factor_sign
            coeffs[:] = [scalar * c for c in coeffs]
        else:
            head = coeffs[:exp]
            if factor_sign > 0:
                tail = [u - v for u, v in zip(coeffs[exp:], coeffs, strict=False)]
            else:
                tail = [u + v for u, v in zip(coeffs[exp:], coeffs, strict=False)]
            coeffs[:] = head + tail
        if step == 0:
            break
        factor_sign *= base_sign
        exp += step


def _unit(order: int) -> list[int]:
    if order < 0:
        raise SeriesError("truncation order must be >= 0")
    coeffs = [0] * (order + 1)
    coeffs[0] = 1
    return coeffs


def _apply_factor(coeffs: list[int], factor: PochFactor) -> None:
    for _ in range(factor.power):
        multiply_pochhammer(coeffs, factor.sign1, factor.a, factor.m)
        if not factor.single:
            multiply_pochhammer(coeffs, factor.sign2, factor.b, factor.m)


def poch_expand(sign: int, a: int, m: int, order: int) -> Series:
    """(sign*q^a; q^m)_inf = prod_{k>=0} (1 - sign*q^(a+km)) to the given order."""
    if a <= 0 or m <= 0:
        raise SeriesError("invalid Pochhammer parameters")
    if sign not in (1, -1):
        raise SeriesError("Pochhammer sign must be +1 or -1")
    coeffs = _unit(order)
    multiply_pochhammer(coeffs, sign, a, m)
    return Series(0, order, coeffs)


def factor_expand(factor: PochFactor, order: int) -> Series:
    coeffs = _unit(order)
    _apply_factor(coeffs, factor)
    return Series(0, order, coeffs)


def product_expand(spec: ProductSpec, order: int) -> Series:
    coeffs = _unit(order)
    for factor in spec.factors:
        _apply_factor(coeffs, factor)
    return Series(0, order, coeffs)
