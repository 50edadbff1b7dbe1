"""Built-in vanishing-coefficient claims and the product families they come from."""

from __future__ import annotations

from collections.abc import Iterator
from functools import cache
from pathlib import Path

from qdissect.models import Claim, FactorTemplate, FamilyTemplate, PochFactor, ProductSpec
from qdissect.verifier.verify import VerifierError

SIGN_NAMES = {1: "plus", -1: "minus"}

CatalogKey = tuple[tuple[tuple[int, int, int, int, int, bool], ...], int, int]


def pair(a: int, m: int, sign: int = 1, power: int = 1) -> PochFactor:
    """(s q^a, s q^(m-a); q^m)^power with one sign for both entries."""
    return PochFactor(sign1=sign, sign2=sign, a=a, m=m, power=power)


def _claim(
    claim_id: str,
    factors: list[PochFactor],
    t: int,
    r: int,
    source: str,
    related: tuple[str, ...] = (),
) -> Claim:
    return Claim(
        id=claim_id,
        spec=ProductSpec(factors=tuple(factors)),
        t=t,
        r=r,
        source=source,
        related=related,
    )


_MOD5_SQUARE_SMALL = {
    # symbol: (small offset, ((large offset, residue), ...))
    "b": (1, ((2, 2), (3, 4), (7, 3))),
    "c": (2, ((1, 3), (4, 4), (6, 1))),
}

_MOD7_SIGNED_SMALL = {
    "e": (1, ((2, 5), (5, 6), (9, 2))),
    "f": (2, ((3, 5), (4, 3), (10, 4))),
    "g": (3, ((1, 4), (6, 1), (8, 6))),
}

_MOD7_SQUARE_LARGE = {
    "h": (1, ((3, 6), (4, 2), (10, 4))),
    "i": (2, ((1, 2), (6, 3), (8, 6))),
    "j": (3, ((2, 4), (5, 6), (9, 5))),
}

# (small offset, large offset, residue)
_MOD7_NEGATIVE_LARGE = {"k": (1, 9, 4), "l": (2, 3, 6), "t": (3, 6, 5)}
_MOD7_SQUARE_SMALL = {"o": (1, 6, 4), "p": (2, 9, 1), "z": (3, 3, 5)}

# specializations of the three-parameter families at l = 1
RELATED = {
    "b2": ("X(l=1,t=1)",),
    "b7": ("X(l=1,t=4)",),
    "c4": ("X(l=1,t=2)",),
    "c6": ("X(l=1,t=3)",),
    "h3": ("Y(l=1,t=1)",),
    "i1": ("Y(l=1,t=3)",),
    "o": ("Z(l=1,t=1)",),
    "p": ("Z(l=1,t=2)",),
    "z": ("Z(l=1,t=3)",),
}


def _mod5_claims() -> Iterator[Claim]:
    for sign, name in SIGN_NAMES.items():
        yield _claim(f"mod5-a-{name}", [pair(1, 5), pair(6, 15, sign, 2)], 5, 3, "a(5n+3) = 0")
    for symbol, (small, rows) in _MOD5_SQUARE_SMALL.items():
        for large, r in rows:
            for sign, name in SIGN_NAMES.items():
                yield _claim(
                    f"mod5-{symbol}{large}-{name}",
                    [pair(small, 5, sign, 2), pair(large, 15)],
                    5,
                    r,
                    f"{symbol}_{large}(5n+{r}) = 0",
                    RELATED.get(f"{symbol}{large}", ()),
                )


def _mod7_claims() -> Iterator[Claim]:
    for symbol, (small, rows) in _MOD7_SIGNED_SMALL.items():
        for large, r in rows:
            for sign, name in SIGN_NAMES.items():
                yield _claim(
                    f"mod7-{symbol}{large}-{name}",
                    [pair(small, 7, sign), pair(large, 21)],
                    7,
                    r,
                    f"{symbol}_{large}(7n+{r}) = 0",
                )
    for symbol, (small, rows) in _MOD7_SQUARE_LARGE.items():
        for large, r in rows:
            for sign, name in SIGN_NAMES.items():
                yield _claim(
                    f"mod7-{symbol}{large}-{name}",
                    [pair(small, 7), pair(large, 21, sign, 2)],
                    7,
                    r,
                    f"{symbol}_{large}(7n+{r}) = 0",
                    RELATED.get(f"{symbol}{large}", ()),
                )
    for symbol, (small, large, r) in _MOD7_NEGATIVE_LARGE.items():
        yield _claim(
            f"mod7-{symbol}", [pair(small, 7), pair(large, 21, -1)], 7, r, f"{symbol}(7n+{r}) = 0"
        )
    for symbol, (small, large, r) in _MOD7_SQUARE_SMALL.items():
        for sign, name in SIGN_NAMES.items():
            yield _claim(
                f"mod7-{symbol}-{name}",
                [pair(small, 7, sign, 2), pair(large, 21)],
                7,
                r,
                f"{symbol}(7n+{r}) = 0",
                RELATED[symbol],
            )


def _mod10_claims() -> Iterator[Claim]:
    for r in (2, 4):
        yield _claim(
            f"mod10-hirschhorn-a-5n+{r}",
            [pair(1, 5, -1), pair(1, 10, power=3)],
            5,
            r,
            f"a(5n+{r}) = 0",
        )
    for r in (1, 4):
        yield _claim(
            f"mod10-hirschhorn-b-5n+{r}",
            [pair(2, 5, -1), pair(3, 10, power=3)],
            5,
            r,
            f"b(5n+{r}) = 0",
        )
    yield _claim(
        "mod10-tang-a1-5n+3", [pair(1, 5, -1, 3), pair(3, 10)], 5, 3, "a_1(5n+3) = 0"
    )
    yield _claim(
        "mod10-tang-b1-5n+4", [pair(2, 5, -1, 3), pair(1, 10)], 5, 4, "b_1(5n+4) = 0"
    )


@cache
def builtin_catalog() -> tuple[Claim, ...]:
    """Every built-in claim, with each sign choice as its own claim, in catalog order."""
    return (*_mod5_claims(), *_mod7_claims(), *_mod10_claims())


@cache
def catalog_index() -> dict[CatalogKey, str]:
    return {(claim.spec.key(), claim.t, claim.r): claim.id for claim in builtin_catalog()}


def claim_family(claim_id: str) -> str:
    return claim_id.split("-", 1)[0]


def _template(
    modulus: int, offsets: list[int], power: int = 1, signs: list[int] | None = None
) -> FactorTemplate:
    return FactorTemplate(modulus=modulus, offsets=offsets, power=power, signs=signs or [1])


BOTH = [1, -1]


def _mod5_families() -> Iterator[FamilyTemplate]:
    large = list(range(1, 15))
    yield FamilyTemplate(
        name="a",
        small=_template(5, [1]),
        large=_template(15, large, 2, BOTH),
        t=5,
        description="(q,q^4;q^5) (+-q^b,+-q^(15-b);q^15)^2",
    )
    for symbol, (small, _) in _MOD5_SQUARE_SMALL.items():
        yield FamilyTemplate(
            name=symbol,
            small=_template(5, [small], 2, BOTH),
            large=_template(15, large),
            t=5,
            description=f"(+-q^{small},+-q^{5 - small};q^5)^2 (q^b,q^(15-b);q^15)",
        )
    yield FamilyTemplate(
        name="plain15",
        small=_template(5, [1]),
        large=_template(15, large),
        t=5,
        description="(q,q^4;q^5) (q^b,q^(15-b);q^15); no vanishing progression",
    )


def _mod7_families() -> Iterator[FamilyTemplate]:
    large = list(range(1, 21))
    for symbol, (small, _) in _MOD7_SIGNED_SMALL.items():
        yield FamilyTemplate(
            name=symbol,
            small=_template(7, [small], 1, BOTH),
            large=_template(21, large),
            t=7,
            description=f"(+-q^{small},+-q^{7 - small};q^7) (q^b,q^(21-b);q^21)",
        )
    for symbol, (small, _) in _MOD7_SQUARE_LARGE.items():
        yield FamilyTemplate(
            name=symbol,
            small=_template(7, [small]),
            large=_template(21, large, 2, BOTH),
            t=7,
            description=f"(q^{small},q^{7 - small};q^7) (+-q^b,+-q^(21-b);q^21)^2",
        )
    for symbol, (small, _, _) in _MOD7_NEGATIVE_LARGE.items():
        yield FamilyTemplate(
            name=symbol,
            small=_template(7, [small]),
            large=_template(21, large, 1, [-1]),
            t=7,
            description=f"(q^{small},q^{7 - small};q^7) (-q^b,-q^(21-b);q^21)",
        )
    for symbol, (small, _, _) in _MOD7_SQUARE_SMALL.items():
        yield FamilyTemplate(
            name=symbol,
            small=_template(7, [small], 2, BOTH),
            large=_template(21, large),
            t=7,
            description=f"(+-q^{small},+-q^{7 - small};q^7)^2 (q^b,q^(21-b);q^21)",
        )


def _mod10_families() -> Iterator[FamilyTemplate]:
    large = list(range(1, 10))
    for name, small in (("hirschhorn-a", 1), ("hirschhorn-b", 2)):
        yield FamilyTemplate(
            name=name,
            small=_template(5, [small], 1, [-1]),
            large=_template(10, large, 3),
            t=5,
            description=f"(-q^{small},-q^{5 - small};q^5) (q^b,q^(10-b);q^10)^3",
        )
    for name, small in (("tang-a1", 1), ("tang-b1", 2)):
        yield FamilyTemplate(
            name=name,
            small=_template(5, [small], 3, [-1]),
            large=_template(10, large),
            t=5,
            description=f"(-q^{small},-q^{5 - small};q^5)^3 (q^b,q^(10-b);q^10)",
        )


@cache
def builtin_families() -> dict[str, FamilyTemplate]:
    families = (*_mod5_families(), *_mod7_families(), *_mod10_families())
    return {family.name: family for family in families}


def load_template(name_or_path: str) -> FamilyTemplate:
    families = builtin_families()
    if name_or_path in families:
        return families[name_or_path]
    path = Path(name_or_path).expanduser()
    if not path.is_file():
        raise VerifierError(f"unknown family {name_or_path!r}")
    return FamilyTemplate.model_validate_json(path.read_text(encoding="utf-8"))
