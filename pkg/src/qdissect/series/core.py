from __future__ import annotations

from collections.abc import Iterable, Iterator, Mapping
from typing import Any


class SeriesError(ValueError):
    """Raised for invalid series operations (non-unit inverse, bad residue, bad order)."""


class Series:
    """Laurent series sum c_e q^e, exact for lo <= e <= order.

    Coefficients below ``lo`` are exact zeros; coefficients above ``order`` are unknown.
    """

    __slots__ = ("lo", "order", "coeffs")

    def __init__(self, lo: int, order: int, coeffs: Iterable[int] = ()) -> None:
        if order < lo:
            raise SeriesError(f"order {order} is below the least exponent {lo}")
        width = order - lo + 1
        values = list(coeffs)[:width]
        values.extend([0] * (width - len(values)))
        self.lo = lo
        self.order = order
        self.coeffs: tuple[int, ...] = tuple(values)

    @classmethod
    def zero(cls, order: int, lo: int = 0) -> Series:
        return cls(min(lo, order), order)

    @classmethod
    def constant(cls, value: int, order: int) -> Series:
        if order < 0:
            return cls(order, order)
        return cls(0, order, [value])

    @classmethod
    def monomial(cls, exp: int, order: int, coeff: int = 1) -> Series:
        if exp > order:
            return cls(order, order)
        return cls(exp, order, [coeff])

    @classmethod
    def from_terms(cls, terms: Mapping[int, int], order: int, lo: int | None = None) -> Series:
        kept = {e: c for e, c in terms.items() if e <= order and c}
        start = min(kept, default=order)
        if lo is not None:
            start = min(start, lo)
        values = [0] * (order - start + 1)
        for exp, coeff in kept.items():
            values[exp - start] += coeff
        return cls(start, order, values)

    def coefficient(self, exp: int) -> int:
        if exp > self.order:
            raise SeriesError(f"coefficient of q^{exp} is beyond the truncation order {self.order}")
        if exp < self.lo:
            return 0
        return self.coeffs[exp - self.lo]

    def terms(self) -> Iterator[tuple[int, int]]:
        for offset, coeff in enumerate(self.coeffs):
            if coeff:
                yield self.lo + offset, coeff

    def valuation(self) -> int | None:
        return next((exp for exp, _ in self.terms()), None)

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def truncate(self, order: int) -> Series:
        if order >= self.order:
            return self
        if order < self.lo:
            return Series(order, order)
        return Series(self.lo, order, self.coeffs[: order - self.lo + 1])

    def shift(self, k: int) -> Series:
        return Series(self.lo + k, self.order + k, self.coeffs)

    def scale(self, factor: int) -> Series:
        return Series(self.lo, self.order, [factor * c for c in self.coeffs])

    def to_json(self) -> dict[str, Any]:
        return {
            "lo": self.lo,
            "order": self.order,
            "coeffs": [[exp, str(coeff)] for exp, coeff in self.terms()],
        }

    @classmethod
    def from_json(cls, payload: Mapping[str, Any]) -> Series:
        terms = {int(exp): int(coeff) for exp, coeff in payload["coeffs"]}
        return cls.from_terms(terms, int(payload["order"]), lo=int(payload["lo"]))

    def __add__(self, other: Series) -> Series:
        return series_add(self, other)

    def __sub__(self, other: Series) -> Series:
        return series_add(self, -other)

    def __neg__(self) -> Series:
        return self.scale(-1)

    def __mul__(self, other: Series | int) -> Series:
        if isinstance(other, int):
            return self.scale(other)
        return series_mul(self, other)

    def __rmul__(self, other: int) -> Series:
        return self.scale(other)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Series):
            return NotImplemented
        upper = min(self.order, other.order)
        start = min(self.lo, other.lo)
        return all(
            self.coefficient(exp) == other.coefficient(exp) for exp in range(start, upper + 1)
        )

    __hash__ = None  # type: ignore[assignment]

    def __repr__(self) -> str:
        shown = " + ".join(f"{c}*q^{e}" for e, c in list(self.terms())[:8]) or "0"
        return f"Series({shown} + O(q^{self.order + 1}), lo={self.lo})"


def series_add(x: Series, y: Series) -> Series:
    lo = min(x.lo, y.lo)
    order = min(x.order, y.order)
    values = [0] * (order - lo + 1)
    for source in (x, y):
        for offset, coeff in enumerate(source.coeffs):
            index = source.lo + offset - lo
            if index >= len(values):
                break
            values[index] += coeff
    return Series(lo, order, values)


def series_mul(x: Series, y: Series) -> Series:
    lo = x.lo + y.lo
    order = min(x.order + y.lo, y.order + x.lo)
    width = order - lo + 1
    values = [0] * width
    ycoeffs = y.coeffs
    for i, a in enumerate(x.coeffs):
        if i >= width:
            break
        if not a:
            continue
        for j in range(min(len(ycoeffs), width - i)):
            b = ycoeffs[j]
            if b:
                values[i + j] += a * b
    return Series(lo, order, values)


def series_inverse(x: Series, order: int) -> Series:
    """1/x to the requested order; the leading coefficient must be +1 or -1."""
    v = x.valuation()
    if v is None or x.coefficient(v) not in (1, -1):
        raise SeriesError("non-invertible series")
    lead = x.coefficient(v)
    # x = q^v * u with u exact up to x.order - v, so 1/x is exact up to x.order - 2v.
    target = min(order, x.order - 2 * v)
    if target < -v:
        return Series(target, target)
    width = target + v + 1
    unit = [(k, x.coefficient(v + k)) for k in range(1, min(width, x.order - v + 1))]
    unit = [(k, c) for k, c in unit if c]
    inverse = [0] * width
    inverse[0] = lead
    for n in range(1, width):
        acc = 0
        for k, c in unit:
            if k > n:
                break
            acc += c * inverse[n - k]
        inverse[n] = -lead * acc
    return Series(-v, target, inverse)


def dissect(h: Series, t: int, r: int) -> Series:
    if t < 1:
        raise SeriesError("modulus must be >= 1")
    if not 0 <= r < t:
        raise SeriesError(f"residue {r} out of range for modulus {t}")
    values = [c if (h.lo + i - r) % t == 0 else 0 for i, c in enumerate(h.coeffs)]
    return Series(h.lo, h.order, values)


def support_modulus_check(h: Series, t: int) -> bool:
    if t < 1:
        raise SeriesError("modulus must be >= 1")
    return all(exp % t == 0 for exp, _ in h.terms())
