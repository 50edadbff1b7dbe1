from __future__ import annotations

from collections.abc import Iterable, Iterator
from itertools import product
from math import gcd
from typing import NamedTuple

from qdissect.dissection.lattice import (
    DissectionError,
    doubled_exponent,
    residue_periods,
    residue_solutions,
)
from qdissect.models import BinaryFormSum, QuadLatticeSum
from qdissect.series.core import Series
from qdissect.theta.functions import quadratic_window


Vector = tuple[int, int]


class Basis(NamedTuple):
    """Upper-triangular lattice basis: columns (first[0], first[1]) and (0, second)."""

    first: Vector
    second: int


class Coset(NamedTuple):
    origin: Vector
    basis: Basis


def _extended_gcd(a: int, b: int) -> tuple[int, int, int]:
    """(g, x, y) with a*x + b*y = g >= 0."""
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        quotient = old_r // r
        old_r, r = r, old_r - quotient * r
        old_s, s = s, old_s - quotient * s
        old_t, t = t, old_t - quotient * t
    if old_r < 0:
        return -old_r, -old_s, -old_t
    return old_r, old_s, old_t


def lattice_basis(generators: Iterable[Vector]) -> Basis:
    """Hermite basis of the sublattice of Z^2 spanned by ``generators`` (assumed full rank)."""
    gens = list(generators)
    lead, first = 0, (0, 0)
    for x, y in gens:
        if x == 0:
            continue
        if lead == 0:
            lead, first = abs(x), (abs(x), y if x > 0 else -y)
            continue
        g, u, v = _extended_gcd(lead, x)
        first = (g, u * first[1] + v * y)
        lead = g
    if lead == 0:
        raise DissectionError("lattice generators are not full rank")
    second = 0
    for x, y in gens:
        second = gcd(second, y - (x // lead) * first[1])
    if second == 0:
        raise DissectionError("lattice generators are not full rank")
    return Basis(first=(lead, first[1] % second), second=second)


def _reduce_vector(vector: Vector, basis: Basis) -> Vector:
    x, y = vector
    k = x // basis.first[0]
    x -= k * basis.first[0]
    y -= k * basis.first[1]
    return x, y % basis.second


def residue_cosets(lattice: QuadLatticeSum, t: int, r: int) -> list[Coset]:
    """The solution classes as cosets of sublattices, merged into one coset when possible.

    Classes mod the residue periods form a single coset when their differences from the
    first class are closed under addition (always true for a linear residue condition).
    """
    classes = residue_solutions(lattice, t, r)
    if not classes:
        return []
    p1, p2 = residue_periods(lattice, t)
    period = Basis(first=(p1, 0), second=p2)
    origin = classes[0]
    offsets = {((m - origin[0]) % p1, (n - origin[1]) % p2) for m, n in classes}
    closed = all(
        ((h[0] + g[0]) % p1, (h[1] + g[1]) % p2) in offsets for h in offsets for g in offsets
    )
    if closed:
        basis = lattice_basis([(p1, 0), (0, p2), *sorted(offsets)])
        return [Coset(origin=origin, basis=basis)]
    return [Coset(origin=cls, basis=period) for cls in classes]


def coset_form(lattice: QuadLatticeSum, coset: Coset) -> BinaryFormSum:
    """Substitute x = origin + y1*first + y2*(0, second) into the doubled exponent."""
    (p0, q0), basis = coset
    v1, v2 = basis.first
    w2 = basis.second
    a2, b2, c2, d2 = lattice.a2, lattice.b2, lattice.c2, lattice.d2
    return BinaryFormSum(
        sign=lattice.sign,
        a=a2 * v1 * v1 + c2 * v2 * v2,
        b=2 * c2 * v2 * w2,
        c=c2 * w2 * w2,
        d=(2 * a2 * p0 + b2) * v1 + (2 * c2 * q0 + d2) * v2,
        e=(2 * c2 * q0 + d2) * w2,
        f=doubled_exponent(lattice, p0, q0),
    )


def form_series(form: BinaryFormSum, order: int) -> Series:
    a, b, c, d, e, f = form.key()
    delta = form.discriminant
    terms: dict[int, int] = {}
    # y2 admits a solution only if the minimum over real y1 is within the budget
    for y2 in quadratic_window(delta, 4 * a * e - 2 * b * d, 8 * a * order - 4 * a * f + d * d):
        rest = c * y2 * y2 + e * y2 + f
        for y1 in quadratic_window(a, b * y2 + d, 2 * order - rest):
            exp = (a * y1 * y1 + (b * y2 + d) * y1 + rest) // 2
            terms[exp] = terms.get(exp, 0) + form.sign
    return Series.from_terms(terms, order)


def _automorphisms(a: int, b: int, c: int) -> Iterator[tuple[int, int, int, int]]:
    """Matrices [[p, q], [r, s]] with small entries and det +-1 fixing the quadratic part."""
    for p, q, r, s in product((-1, 0, 1), repeat=4):
        if p * s - q * r not in (1, -1):
            continue
        if (
            a * p * p + b * p * r + c * r * r == a
            and 2 * a * p * q + b * (p * s + q * r) + 2 * c * r * s == b
            and a * q * q + b * q * s + c * s * s == c
        ):
            yield p, q, r, s


def canonical_form(form: BinaryFormSum) -> BinaryFormSum:
    """Representative of the orbit of ``form`` under GL2(Z) and integer translations.

    The quadratic part is Gauss reduced to 0 <= b <= a <= c. The linear part is then taken
    minimal over the reduced form's automorphisms, modulo the gradient lattice
    [[2a, b], [b, 2c]] Z^2 that translations move it by. The constant follows from the
    invariant minimum value.
    """
    a, b, c, d, e, f = form.key()
    while True:
        k = (a - b) // (2 * a)
        if k:
            b, c, e = b + 2 * a * k, a * k * k + b * k + c, e + d * k
        if a > c:
            a, c, d, e = c, a, e, d
            continue
        break
    if b < 0:
        b, d = -b, -d
    delta = 4 * a * c - b * b
    invariant = delta * f - (c * d * d - b * d * e + a * e * e)
    gradient = lattice_basis([(2 * a, b), (b, 2 * c)])
    linear = min(
        _reduce_vector((p * d + r * e, q * d + s * e), gradient)
        for p, q, r, s in _automorphisms(a, b, c)
    )
    d, e = linear
    constant, remainder = divmod(invariant + c * d * d - b * d * e + a * e * e, delta)
    if remainder:
        raise DissectionError("canonical constant is not integral")
    return BinaryFormSum(sign=form.sign, a=a, b=b, c=c, d=d, e=e, f=constant)
