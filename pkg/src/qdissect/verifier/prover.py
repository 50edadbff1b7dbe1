"""Certifying prover for vanishing progressions of theta-quotient products.

Each pair factor (x, y; q^m) with xy = q^m is rewritten as f(-x, -y) / (q^m; q^m). The
denominators are supported on multiples of t, so the progression vanishes as soon as it
vanishes for the numerator. Power-1 thetas are split in three, squares by the square split;
every product term is then a scalar multiplier supported on tZ times two theta functions,
i.e. a lattice sum, and the residue-r components of each multiplier group must cancel.
"""

from __future__ import annotations

import logging
from itertools import product

from qdissect.dissection.cancel import components_cancel
from qdissect.dissection.lattice import (
    DissectionError,
    residue_component,
    theta_pair_to_lattice,
)
from qdissect.models import (
    CancelMode,
    CancelStatus,
    Claim,
    ClaimStatus,
    PochFactor,
    ProductSpec,
    ProofGroup,
    ProofReport,
    QuadLatticeSum,
    ThetaSpec,
    ThetaTerm,
)
from qdissect.series.core import series_inverse, support_modulus_check
from qdissect.series.products import product_expand
from qdissect.theta.identities import multiply_terms, split3, square_split
from qdissect.verifier.verify import VerifierError, verify_claim

logger = logging.getLogger(__name__)


class ProverScopeError(VerifierError):
    """Raised when a claim falls outside what the theta dissection can certify."""


def scope_reason(claim: Claim) -> str | None:
    for factor in claim.spec.factors:
        if factor.single:
            return f"single Euler factor {factor} has no theta rewrite"
        if factor.power not in (1, 2):
            return f"factor {factor} has power {factor.power}; only powers 1 and 2 split"
        if factor.sign1 != factor.sign2:
            return f"factor {factor} has mismatched signs"
        if factor.m % claim.t:
            return f"modulus {claim.t} does not divide the factor modulus {factor.m}"
    return None


def theta_quotient(factor: PochFactor) -> ThetaSpec:
    """(x, y; q^m)_inf = f(-x, -y) / (q^m; q^m)_inf for matched signs."""
    return ThetaSpec.of(factor.a, factor.b, -factor.sign1, -factor.sign2)


def denominator(spec: ProductSpec) -> ProductSpec:
    return ProductSpec(
        factors=tuple(PochFactor.euler(factor.m, factor.power) for factor in spec.factors)
    )


def check_denominator(spec: ProductSpec, t: int, order: int) -> None:
    expansion = product_expand(denominator(spec), order)
    if not support_modulus_check(expansion, t):
        raise ProverScopeError(f"denominator is not supported on multiples of {t}")
    if not support_modulus_check(series_inverse(expansion, order), t):
        raise ProverScopeError(f"inverse denominator is not supported on multiples of {t}")


def expand_terms(spec: ProductSpec) -> tuple[list[ThetaTerm], list[str]]:
    """Distribute the split of every numerator theta; returns the nonzero terms and a trace."""
    terms = [ThetaTerm(coeff=1)]
    trace: list[str] = []
    for factor in spec.factors:
        theta = theta_quotient(factor)
        pieces = split3(theta) if factor.power == 1 else square_split(theta)
        lhs = str(theta) if factor.power == 1 else f"{theta}^2"
        trace.append(f"{factor} = {lhs} / ({_base(factor.m)};{_base(factor.m)}){_power(factor)}")
        trace.append(f"{lhs} = {' + '.join(str(piece) for piece in pieces)}")
        terms = [multiply_terms(x, y) for x, y in product(terms, pieces)]
    return [term for term in terms if term.coeff], trace


def _base(m: int) -> str:
    return "q" if m == 1 else f"q^{m}"


def _power(factor: PochFactor) -> str:
    return f"^{factor.power}" if factor.power != 1 else ""


def supported_on(spec: ThetaSpec, t: int) -> bool:
    return spec.a.exp % t == 0 and spec.b.exp % t == 0


GroupKey = tuple[int, tuple[str, ...]]


def group_terms(terms: list[ThetaTerm], t: int) -> dict[GroupKey, list[QuadLatticeSum]]:
    groups: dict[GroupKey, list[QuadLatticeSum]] = {}
    for term in terms:
        multipliers = [spec for spec in term.factors if supported_on(spec, t)]
        paired = [spec for spec in term.factors if not supported_on(spec, t)]
        if len(paired) != 2:
            raise ProverScopeError(
                f"term {term} leaves {len(paired)} theta factors outside the multipliers"
            )
        try:
            lattice = theta_pair_to_lattice(
                term.shift.exp, 1 if term.coeff > 0 else -1, paired[0], paired[1]
            )
        except DissectionError as exc:
            raise ProverScopeError(str(exc)) from exc
        if lattice.a2 % (2 * t) or lattice.c2 % (2 * t):
            raise ProverScopeError(
                f"lattice term {lattice} has quadratic part not divisible by {t}"
            )
        key = (abs(term.coeff), tuple(sorted(spec.label() for spec in multipliers)))
        groups.setdefault(key, []).append(lattice)
    return groups


def _inapplicable(claim: Claim, order: int, reason: str) -> ProofReport:
    logger.info("prover inapplicable for %s: %s", claim.id, reason)
    return ProofReport(
        claim_id=claim.id, status=ClaimStatus.INAPPLICABLE, order=order, reason=reason
    )


def prove_claim(claim: Claim, order: int) -> ProofReport:
    """Certify T_{t,r} of the claim's product vanishes identically, or fall back to expansion."""
    if order < claim.t:
        raise VerifierError(f"order {order} is below the claim modulus {claim.t}")
    reason = scope_reason(claim)
    if reason is not None:
        return _inapplicable(claim, order, reason)
    try:
        check_denominator(claim.spec, claim.t, order)
        terms, trace = expand_terms(claim.spec)
        grouped = group_terms(terms, claim.t)
    except ProverScopeError as exc:
        return _from_expansion(claim, order, f"no lattice dissection: {exc}")

    groups: list[ProofGroup] = []
    for (coefficient, multipliers), lattices in grouped.items():
        decomps = [(1, residue_component(lattice, claim.t, claim.r)) for lattice in lattices]
        certified = components_cancel(decomps, order, CancelMode.CERTIFIED)
        truncated = None
        if certified.status != CancelStatus.CANCELLED:
            truncated = components_cancel(decomps, order, CancelMode.TRUNCATED)
        groups.append(
            ProofGroup(
                coefficient=coefficient,
                multipliers=list(multipliers),
                lattice_sums=lattices,
                cancellation=certified,
                truncated=truncated,
            )
        )

    if all(group.cancellation.status == CancelStatus.CANCELLED for group in groups):
        return ProofReport(
            claim_id=claim.id,
            status=ClaimStatus.CERTIFIED,
            order=order,
            groups=groups,
            rewrite=trace,
        )

    # a group that does not cancel on its own says nothing about the claim
    return _from_expansion(
        claim, order, "group-wise cancellation not certified", groups=groups, rewrite=trace
    )


def _from_expansion(
    claim: Claim,
    order: int,
    reason: str,
    groups: list[ProofGroup] | None = None,
    rewrite: list[str] | None = None,
) -> ProofReport:
    brute = verify_claim(claim, order)
    logger.info("%s: %s; expansion says %s", claim.id, reason, brute.status.value)
    return ProofReport(
        claim_id=claim.id,
        status=brute.status,
        order=order,
        first_counterexample=brute.first_counterexample,
        groups=groups,
        rewrite=rewrite or [],
        reason=f"{reason}; status from the truncated expansion",
    )
