from __future__ import annotations

import json
import sys
from collections.abc import Sequence

from pydantic import BaseModel

from qdissect.models import ClaimRecord, ClaimStatus, ProofReport, RunReport, RunSummary, ScanReport
from qdissect.series.core import Series


def build_report(records: Sequence[ClaimRecord]) -> RunReport:
    counts = {status: 0 for status in ClaimStatus}
    for record in records:
        counts[record.status] += 1
    return RunReport(
        claims=list(records),
        summary=RunSummary(
            certified=counts[ClaimStatus.CERTIFIED],
            verified=counts[ClaimStatus.VERIFIED],
            refuted=counts[ClaimStatus.REFUTED],
            inapplicable=counts[ClaimStatus.INAPPLICABLE],
        ),
    )


def emit_report(report: BaseModel) -> None:
    payload = report.model_dump(mode="json")
    json.dump(payload, sys.stdout, indent=2)
    sys.stdout.write("\n")


def emit_series(series: Series) -> None:
    json.dump(series.to_json(), sys.stdout, indent=2)
    sys.stdout.write("\n")


def render_series(series: Series) -> str:
    lines = [f"{exp} {coeff}" for exp, coeff in series.terms()]
    lines.append(f"+ O(q^{series.order + 1})")
    return "\n".join(lines)


def _counterexample(report: ProofReport | ClaimRecord) -> str:
    witness = report.first_counterexample
    if witness is None:
        return ""
    return f" (coefficient of q^{witness.n} is {witness.coeff})"


def render_proof(report: ProofReport) -> str:
    lines = [f"{report.claim_id}: {report.status.value} to order {report.order}"]
    lines[0] += _counterexample(report)
    if report.reason:
        lines.append(f"  reason: {report.reason}")
    for step in report.rewrite:
        lines.append(f"  {step}")
    for group in report.groups or []:
        multipliers = " ".join(group.multipliers) or "1"
        lines.append(f"  group {group.coefficient} * {multipliers}:")
        for lattice in group.lattice_sums:
            lines.append(f"    {lattice}")
        cancellation = group.cancellation
        lines.append(
            f"    {cancellation.status.value} at {cancellation.r} mod {cancellation.t}, "
            f"pairs {cancellation.pairing}"
        )
    return "\n".join(lines)


def render_run(report: RunReport) -> str:
    width = max((len(record.id) for record in report.claims), default=0)
    lines = [
        f"{record.id:<{width}}  {record.status.value}{_counterexample(record)}"
        for record in report.claims
    ]
    summary = report.summary
    lines.append(
        f"certified {summary.certified}, verified {summary.verified}, "
        f"refuted {summary.refuted}, inapplicable {summary.inapplicable}"
    )
    return "\n".join(lines)


def render_scan(report: ScanReport) -> str:
    lines = [f"{report.family} mod {report.t} to order {report.order}"]
    for finding in report.findings:
        label = finding.catalog_id or finding.novelty
        lines.append(f"  {finding.spec}  {finding.t}n+{finding.r}  {finding.evidence}  {label}")
    if not report.findings:
        lines.append("  no vanishing progressions")
    return "\n".join(lines)
