from __future__ import annotations

from collections.abc import Sequence
from pathlib import Path

from qdissect.models import Claim, RunReport
from qdissect.spec_parser import format_spec
from qdissect.verifier.catalog import claim_family

FAMILY_TITLES = {
    "mod5": "Products over q^5 and q^15",
    "mod7": "Products over q^7 and q^21",
    "mod10": "Products over q^5 and q^10",
}


def _cell(text: str) -> str:
    return text.replace("|", "\\|")


def render_report(report: RunReport, claims: Sequence[Claim]) -> str:
    by_id = {claim.id: claim for claim in claims}
    sections: dict[str, list[str]] = {}
    for record in report.claims:
        claim = by_id.get(record.id)
        if claim is None:
            continue
        rows = sections.setdefault(claim_family(record.id), [])
        status = record.status.value
        if record.first_counterexample is not None:
            witness = record.first_counterexample
            status += f" (q^{witness.n}: {witness.coeff})"
        rows.append(
            f"| {record.id} | `{_cell(format_spec(claim.spec))}` | "
            f"{claim.t}n+{claim.r} | {status} |"
        )

    lines = ["# Vanishing coefficient claims", ""]
    for family, rows in sections.items():
        lines.append(f"## {FAMILY_TITLES.get(family, family)}")
        lines.append("")
        lines.append("| Claim | Product | Progression | Status |")
        lines.append("| --- | --- | --- | --- |")
        lines.extend(rows)
        lines.append("")

    summary = report.summary
    lines.append("## Summary")
    lines.append("")
    lines.append("| Certified | Verified | Refuted | Inapplicable |")
    lines.append("| --- | --- | --- | --- |")
    lines.append(
        f"| {summary.certified} | {summary.verified} | {summary.refuted} | {summary.inapplicable} |"
    )
    lines.append("")
    return "\n".join(lines)


def write_report(content: str, out: Path) -> Path:
    out.parent.mkdir(parents=True, exist_ok=True)
    out.write_text(content, encoding="utf-8")
    return out
