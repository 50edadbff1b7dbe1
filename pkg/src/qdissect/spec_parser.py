from __future__ import annotations

import re

from qdissect.models import PochFactor, ProductSpec

_WS = re.compile(r"\s*")
_UINT = re.compile(r"[0-9]+")


class SpecSyntaxError(ValueError):
    """Raised for product specs that do not parse; ``offset`` is the byte offset of the problem."""

    def __init__(self, message: str, offset: int | None = None) -> None:
        self.offset = offset
        where = f" at offset {offset}" if offset is not None else ""
        super().__init__(f"{message}{where}")


class _Cursor:
    def __init__(self, text: str) -> None:
        self.text = text
        self.pos = 0

    def skip_ws(self) -> None:
        self.pos = _WS.match(self.text, self.pos).end()  # type: ignore[union-attr]

    def peek(self) -> str:
        return self.text[self.pos : self.pos + 1]

    def at_end(self) -> bool:
        return self.pos >= len(self.text)

    def expect(self, token: str) -> None:
        self.skip_ws()
        if not self.text.startswith(token, self.pos):
            found = self.peek() or "end of input"
            raise SpecSyntaxError(f"expected {token!r}, found {found!r}", self.byte_offset())
        self.pos += len(token)

    def accept(self, token: str) -> bool:
        self.skip_ws()
        if self.text.startswith(token, self.pos):
            self.pos += len(token)
            return True
        return False

    def uint(self) -> int:
        self.skip_ws()
        match = _UINT.match(self.text, self.pos)
        if match is None:
            raise SpecSyntaxError("expected an unsigned integer", self.byte_offset())
        self.pos = match.end()
        return int(match.group())

    def byte_offset(self, pos: int | None = None) -> int:
        end = self.pos if pos is None else pos
        return len(self.text[:end].encode("utf-8"))


def _term(cursor: _Cursor) -> tuple[int, int]:
    sign = -1 if cursor.accept("-") else 1
    cursor.expect("q")
    exp = cursor.uint() if cursor.accept("^") else 1
    return sign, exp


def _factor(cursor: _Cursor) -> PochFactor:
    start = cursor.pos
    cursor.expect("(")
    sign1, first = _term(cursor)
    cursor.expect(",")
    sign2, second = _term(cursor)
    cursor.expect(";")
    cursor.expect("q")
    cursor.expect("^")
    modulus = cursor.uint()
    cursor.expect(")")
    power = cursor.uint() if cursor.accept("^") else 1
    if first + second != modulus:
        raise SpecSyntaxError("exponents do not sum to modulus", cursor.byte_offset(start))
    if first == 0 or second == 0:
        raise SpecSyntaxError("term exponents must be positive", cursor.byte_offset(start))
    if power == 0:
        raise SpecSyntaxError("power must be positive", cursor.byte_offset(start))
    return PochFactor(sign1=sign1, sign2=sign2, a=first, m=modulus, power=power)


def parse_spec(text: str) -> ProductSpec:
    """Parse "(q,q^4;q^5) (q^6,q^9;q^15)^2" style products of Pochhammer pairs."""
    cursor = _Cursor(text)
    factors: list[PochFactor] = []
    cursor.skip_ws()
    while not cursor.at_end():
        factors.append(_factor(cursor))
        cursor.skip_ws()
    if not factors:
        raise SpecSyntaxError("empty product spec", 0)
    return ProductSpec(factors=tuple(factors))


def format_spec(spec: ProductSpec) -> str:
    return str(spec)
