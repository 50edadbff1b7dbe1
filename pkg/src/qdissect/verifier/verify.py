from __future__ import annotations

from qdissect.models import Claim, ClaimStatus, Counterexample, ProofReport
from qdissect.series.core import Series
from qdissect.series.products import product_expand


class VerifierError(ValueError):
    """Raised when a claim cannot be checked at the requested order."""


def first_counterexample(series: Series, t: int, r: int) -> Counterexample | None:
    start = r
    while start < series.lo:
        start += t
    for exp in range(start, series.order + 1, t):
        coeff = series.coefficient(exp)
        if coeff:
            return Counterexample(n=exp, coeff=str(coeff))
    return None


def vanishing_residues(series: Series, t: int) -> list[int]:
    return [r for r in range(t) if first_counterexample(series, t, r) is None]


def verify_claim(claim: Claim, order: int, expansion: Series | None = None) -> ProofReport:
    """Brute-force check that every coefficient of the claimed progression vanishes up to order."""
    if order < claim.t:
        raise VerifierError(f"order {order} is below the claim modulus {claim.t}")
    series = expansion if expansion is not None else product_expand(claim.spec, order)
    if series.order < order:
        raise VerifierError(f"expansion is only exact to order {series.order}")
    witness = first_counterexample(series.truncate(order), claim.t, claim.r)
    return ProofReport(
        claim_id=claim.id,
        status=ClaimStatus.VERIFIED if witness is None else ClaimStatus.REFUTED,
        order=order,
        first_counterexample=witness,
    )
