from __future__ import annotations

import json
from collections import Counter

from pydantic import ValidationError
import pytest

from qdissect.models import Claim, ClaimStatus
from qdissect.spec_parser import format_spec, parse_spec
from qdissect.verifier.catalog import (
    builtin_catalog,
    builtin_families,
    catalog_index,
    claim_family,
    load_template,
)
from qdissect.verifier.prover import prove_claim, scope_reason
from qdissect.verifier.verify import VerifierError, verify_claim

CATALOG = builtin_catalog()
IN_SCOPE = [claim for claim in CATALOG if scope_reason(claim) is None]


def _by_id(claim_id: str) -> Claim:
    return next(claim for claim in CATALOG if claim.id == claim_id)


def test_catalog_size_and_breakdown() -> None:
    assert len(CATALOG) == 65
    assert Counter(claim_family(claim.id) for claim in CATALOG) == {
        "mod5": 14,
        "mod7": 45,
        "mod10": 6,
    }
    assert len({claim.id for claim in CATALOG}) == 65
    assert len(IN_SCOPE) == 59


def test_flagship_entry() -> None:
    claim = _by_id("mod5-c1-plus")
    assert format_spec(claim.spec) == "(q^2,q^3;q^5)^2 (q,q^14;q^15)"
    assert (claim.t, claim.r) == (5, 3)
    assert claim.source == "c_1(5n+3) = 0"
    minus = _by_id("mod5-c1-minus")
    assert format_spec(minus.spec) == "(-q^2,-q^3;q^5)^2 (q,q^14;q^15)"


def test_related_families() -> None:
    assert _by_id("mod7-o-plus").related == ("Z(l=1,t=1)",)
    assert _by_id("mod5-b7-minus").related == ("X(l=1,t=4)",)
    assert _by_id("mod7-k").related == ()


def test_every_entry_round_trips_through_the_surface_language() -> None:
    for claim in CATALOG:
        assert parse_spec(format_spec(claim.spec)) == claim.spec


def test_index_resolves_mirrored_factors() -> None:
    mirrored = parse_spec("(q^3,q^2;q^5)^2 (q^14,q;q^15)")
    assert catalog_index()[(mirrored.key(), 5, 3)] == "mod5-c1-plus"


@pytest.mark.parametrize("claim", CATALOG, ids=lambda claim: claim.id)
def test_catalog_claim_verifies(claim: Claim) -> None:
    assert verify_claim(claim, 1000).status == ClaimStatus.VERIFIED


@pytest.mark.parametrize("claim", IN_SCOPE, ids=lambda claim: claim.id)
def test_catalog_claim_certifies(claim: Claim) -> None:
    assert prove_claim(claim, 1000).status == ClaimStatus.CERTIFIED


def test_builtin_families() -> None:
    families = builtin_families()
    expected = {"a", "b", "c", "plain15"} | set("efghijkltopz")
    expected |= {"hirschhorn-a", "hirschhorn-b", "tang-a1", "tang-b1"}
    assert set(families) == expected
    assert families["e"].t == 7
    assert families["tang-b1"].small.power == 3


def test_load_template_by_name_and_file(fixtures_dir) -> None:
    assert load_template("c") is builtin_families()["c"]
    template = load_template(str(fixtures_dir / "family_small.json"))
    assert template.name == "small-c"
    assert template.large.offsets == [1, 4, 6]


def test_load_template_errors(fixtures_dir, tmp_path) -> None:
    with pytest.raises(VerifierError, match="unknown family"):
        load_template("no-such-family")
    with pytest.raises(ValidationError):
        load_template(str(fixtures_dir / "family_invalid.json"))
    broken = tmp_path / "order.json"
    payload = json.loads((fixtures_dir / "family_small.json").read_text(encoding="utf-8"))
    payload["order"] = 100
    broken.write_text(json.dumps(payload), encoding="utf-8")
    with pytest.raises(ValidationError, match="scan order"):
        load_template(str(broken))
