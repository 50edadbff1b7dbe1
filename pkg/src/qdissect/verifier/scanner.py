from __future__ import annotations

import logging
from collections.abc import Iterable
from itertools import product
from typing import NamedTuple

from qdissect.models import (
    Claim,
    ClaimStatus,
    FactorTemplate,
    FamilyTemplate,
    Finding,
    PochFactor,
    ProductSpec,
    ScanReport,
)
from qdissect.series.core import Series
from qdissect.series.products import product_expand
from qdissect.spec_parser import format_spec
from qdissect.verifier.catalog import catalog_index
from qdissect.verifier.prover import prove_claim
from qdissect.verifier.verify import vanishing_residues

logger = logging.getLogger(__name__)


def _factor(template: FactorTemplate, offset: int, sign: int) -> PochFactor:
    return PochFactor(
        sign1=sign, sign2=sign, a=offset, m=template.modulus, power=template.power
    )


def instantiate(template: FamilyTemplate) -> list[ProductSpec]:
    """Distinct products of the family, in offset-then-sign order of both factors."""
    small, large = template.small, template.large
    seen: set[tuple] = set()
    specs: list[ProductSpec] = []
    for a, s, b, u in product(small.offsets, small.signs, large.offsets, large.signs):
        spec = ProductSpec(factors=(_factor(small, a, s), _factor(large, b, u)))
        key = spec.key()
        if key in seen:
            continue
        seen.add(key)
        specs.append(spec)
    return specs


def scan_instance(
    spec: ProductSpec,
    t: int,
    order: int,
    certify: bool = True,
    expansion: Series | None = None,
) -> list[Finding]:
    """Findings for every residue mod t on which the product vanishes up to ``order``."""
    series = expansion if expansion is not None else product_expand(spec, order)
    index = catalog_index()
    text = format_spec(spec)
    findings: list[Finding] = []
    for r in vanishing_residues(series.truncate(order), t):
        catalog_id = index.get((spec.key(), t, r))
        evidence = "empirical"
        if certify:
            claim = Claim(
                id=catalog_id or f"scan {text} {t}n+{r}", spec=spec, t=t, r=r, source="scan"
            )
            if prove_claim(claim, order).status == ClaimStatus.CERTIFIED:
                evidence = "certified"
        findings.append(
            Finding(
                spec=text,
                t=t,
                r=r,
                order=order,
                evidence=evidence,
                catalog_id=catalog_id,
                novelty="catalog" if catalog_id else "new-empirical",
            )
        )
    return findings


class ScanPlan(NamedTuple):
    t: int
    order: int
    specs: list[ProductSpec]


def plan_scan(
    template: FamilyTemplate, t: int | None = None, order: int | None = None
) -> ScanPlan:
    plan = ScanPlan(t or template.t, order or template.order, instantiate(template))
    logger.info(
        "scanning %s instantiations of %s mod %s", len(plan.specs), template.name, plan.t
    )
    return plan


def scan_report(
    template: FamilyTemplate, plan: ScanPlan, results: Iterable[list[Finding]]
) -> ScanReport:
    findings = [finding for unit in results for finding in unit]
    return ScanReport(family=template.name, t=plan.t, order=plan.order, findings=findings)


def scan(
    template: FamilyTemplate,
    certify: bool = True,
    t: int | None = None,
    order: int | None = None,
) -> ScanReport:
    plan = plan_scan(template, t, order)
    results = (scan_instance(spec, plan.t, plan.order, certify) for spec in plan.specs)
    return scan_report(template, plan, results)
