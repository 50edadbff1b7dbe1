from __future__ import annotations

import logging

from qdissect.models import QuadLatticeSum, ResidueClassDecomp, ThetaSpec
from qdissect.series.core import Series
from qdissect.theta.functions import quadratic_minimum, quadratic_window

logger = logging.getLogger(__name__)


class DissectionError(ValueError):
    """Raised when a lattice sum or residue component cannot be formed."""


def theta_pair_to_lattice(
    shift: int, sign: int, first: ThetaSpec, second: ThetaSpec
) -> QuadLatticeSum:
    """sign * q^shift * f(q^x, q^y) f(q^u, q^v) as a sum over the lattice Z^2."""
    for spec in (first, second):
        if spec.a.sign < 0 or spec.b.sign < 0:
            raise DissectionError("signed lattice sums unsupported")
    return QuadLatticeSum(
        shift=shift,
        sign=sign,
        a2=first.a.exp + first.b.exp,
        b2=first.a.exp - first.b.exp,
        c2=second.a.exp + second.b.exp,
        d2=second.a.exp - second.b.exp,
    )


def doubled_exponent(lattice: QuadLatticeSum, m: int, n: int) -> int:
    return (
        lattice.a2 * m * m
        + lattice.b2 * m
        + lattice.c2 * n * n
        + lattice.d2 * n
        + 2 * lattice.shift
    )


def lattice_series(lattice: QuadLatticeSum, order: int) -> Series:
    limit2 = 2 * (order - lattice.shift)
    n_floor = quadratic_minimum(lattice.c2, lattice.d2)
    terms: dict[int, int] = {}
    for m in quadratic_window(lattice.a2, lattice.b2, limit2 - n_floor):
        m_part = lattice.a2 * m * m + lattice.b2 * m
        for n in quadratic_window(lattice.c2, lattice.d2, limit2 - m_part):
            exp = (m_part + lattice.c2 * n * n + lattice.d2 * n) // 2 + lattice.shift
            terms[exp] = terms.get(exp, 0) + lattice.sign
    low = (
        quadratic_minimum(lattice.a2, lattice.b2) + n_floor
    ) // 2 + lattice.shift
    return Series.from_terms(terms, order, lo=min(low, order))


def residue_periods(lattice: QuadLatticeSum, t: int) -> tuple[int, int]:
    """Periods of the exponent residue mod t in each variable (t, or 2t for odd a2*t + b2)."""
    first = t if (lattice.a2 * t + lattice.b2) % 2 == 0 else 2 * t
    second = t if (lattice.c2 * t + lattice.d2) % 2 == 0 else 2 * t
    return first, second


def _check_residue(t: int, r: int) -> None:
    if t < 1:
        raise DissectionError("modulus must be >= 1")
    if not 0 <= r < t:
        raise DissectionError(f"residue {r} out of range for modulus {t}")


def residue_solutions(lattice: QuadLatticeSum, t: int, r: int) -> list[tuple[int, int]]:
    """Classes (m0, n0) modulo the residue periods whose exponents are congruent to r mod t."""
    _check_residue(t, r)
    p1, p2 = residue_periods(lattice, t)
    target = (2 * r) % (2 * t)
    return [
        (m, n)
        for m in range(p1)
        for n in range(p2)
        if doubled_exponent(lattice, m, n) % (2 * t) == target
    ]


def residue_component(lattice: QuadLatticeSum, t: int, r: int) -> ResidueClassDecomp:
    """Substitute m = m0 + p1*u, n = n0 + p2*v for every solution class."""
    classes = residue_solutions(lattice, t, r)
    p1, p2 = residue_periods(lattice, t)
    parts = tuple(
        QuadLatticeSum(
            shift=doubled_exponent(lattice, m0, n0) // 2,
            sign=lattice.sign,
            a2=lattice.a2 * p1 * p1,
            b2=p1 * (2 * lattice.a2 * m0 + lattice.b2),
            c2=lattice.c2 * p2 * p2,
            d2=p2 * (2 * lattice.c2 * n0 + lattice.d2),
        )
        for m0, n0 in classes
    )
    logger.debug("residue %s mod %s of %s: %s classes", r, t, lattice, len(classes))
    return ResidueClassDecomp(
        t=t,
        r=r,
        parent=lattice,
        periods=(p1, p2),
        classes=tuple(classes),
        parts=parts,
    )


def _reduce_linear(a2: int, b2: int) -> tuple[int, int]:
    """Smallest linear coefficient reachable by m -> -m and m -> m + k, with the constant change.

    The real minimum -b2^2 / (8 a2) of (a2 m^2 + b2 m) / 2 is invariant, which fixes the change.
    """
    reduced = b2 % (2 * a2)
    reduced = min(reduced, (-reduced) % (2 * a2))
    delta, remainder = divmod(reduced * reduced - b2 * b2, 8 * a2)
    if remainder:
        raise DissectionError("non-integral translation constant")
    return reduced, delta


def canonicalize(lattice: QuadLatticeSum) -> QuadLatticeSum:
    """Canonical representative under sign flips, integer translations and the swap when a2 = c2."""
    b2, delta_m = _reduce_linear(lattice.a2, lattice.b2)
    d2, delta_n = _reduce_linear(lattice.c2, lattice.d2)
    a2, c2 = lattice.a2, lattice.c2
    if a2 == c2 and d2 < b2:
        b2, d2 = d2, b2
    return QuadLatticeSum(
        shift=lattice.shift + delta_m + delta_n,
        sign=lattice.sign,
        a2=a2,
        b2=b2,
        c2=c2,
        d2=d2,
    )
