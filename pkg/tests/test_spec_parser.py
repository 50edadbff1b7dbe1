from __future__ import annotations

from hypothesis import given
import pytest
from strategies import product_specs

from qdissect.models import PochFactor, ProductSpec
from qdissect.spec_parser import SpecSyntaxError, format_spec, parse_spec


def test_parse_flagship_product() -> None:
    spec = parse_spec("(q,q^4;q^5) (q^6,q^9;q^15)^2")
    assert spec == ProductSpec(
        factors=(PochFactor(a=1, m=5), PochFactor(a=6, m=15, power=2))
    )


def test_parse_signed_terms_and_loose_whitespace() -> None:
    spec = parse_spec("  ( q , q^6 ; q^7 )(-q^9, -q^12;q^21) ")
    second = spec.factors[1]
    assert (second.sign1, second.sign2, second.a, second.m) == (-1, -1, 9, 21)
    assert format_spec(spec) == "(q,q^6;q^7) (-q^9,-q^12;q^21)"


@pytest.mark.parametrize(
    ("text", "message", "offset"),
    [
        ("(q,q^3;q^5)", "exponents do not sum to modulus", 0),
        ("(q,q^4;q^5) (q^6,q^9)", "expected ';'", 20),
        ("(q;q^1)", "expected ','", 2),
        ("(q,q^4;q^5)^0", "power must be positive", 0),
        ("", "empty product spec", 0),
        ("   ", "empty product spec", 0),
    ],
)
def test_syntax_errors_carry_offsets(text: str, message: str, offset: int) -> None:
    with pytest.raises(SpecSyntaxError, match=message) as excinfo:
        parse_spec(text)
    assert excinfo.value.offset == offset


def test_offsets_are_counted_in_bytes() -> None:
    with pytest.raises(SpecSyntaxError) as excinfo:
        parse_spec("(q,q^4;q^5) é")
    assert excinfo.value.offset == 12
    with pytest.raises(SpecSyntaxError) as excinfo:
        parse_spec("(q,q^4;q^5)é")
    assert excinfo.value.offset == 11


@given(spec=product_specs)
def test_format_then_parse_is_identity(spec: ProductSpec) -> None:
    assert parse_spec(format_spec(spec)) == spec
