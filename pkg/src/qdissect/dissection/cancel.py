from __future__ import annotations

import logging
from collections.abc import Sequence

from qdissect.dissection.forms import canonical_form, coset_form, form_series, residue_cosets
from qdissect.dissection.lattice import DissectionError, lattice_series
from qdissect.models import (
    BinaryFormSum,
    CancellationReport,
    CancelMode,
    CancelStatus,
    ResidueClassDecomp,
)
from qdissect.series.core import Series

logger = logging.getLogger(__name__)

SignedDecomp = tuple[int, ResidueClassDecomp]


def _shared_progression(xs: Sequence[SignedDecomp]) -> tuple[int, int]:
    progressions = {(decomp.t, decomp.r) for _, decomp in xs}
    if len(progressions) > 1:
        raise DissectionError("decompositions do not share (t, r)")
    if not progressions:
        raise DissectionError("nothing to cancel")
    return progressions.pop()


def _truncated(xs: Sequence[SignedDecomp], order: int) -> int | None:
    total = Series.zero(order)
    for sign, decomp in xs:
        for part in decomp.parts:
            total = total + lattice_series(part, order).scale(sign)
    return total.valuation()


def signed_forms(xs: Sequence[SignedDecomp]) -> list[tuple[int, BinaryFormSum]]:
    """Canonical coset forms of every decomposition, with their effective signs."""
    forms: list[tuple[int, BinaryFormSum]] = []
    for sign, decomp in xs:
        for coset in residue_cosets(decomp.parent, decomp.t, decomp.r):
            form = canonical_form(coset_form(decomp.parent, coset))
            forms.append((sign * form.sign, form))
    return forms


def pair_forms(
    forms: Sequence[tuple[int, BinaryFormSum]],
) -> tuple[list[tuple[int, int]], list[int]]:
    """Greedily pair equal forms of opposite sign; returns (pairs, unpaired indices)."""
    pairs: list[tuple[int, int]] = []
    used = [False] * len(forms)
    for i, (sign, form) in enumerate(forms):
        if used[i]:
            continue
        for j in range(i + 1, len(forms)):
            other_sign, other = forms[j]
            if not used[j] and other_sign == -sign and other.key() == form.key():
                used[i] = used[j] = True
                pairs.append((i, j))
                break
    return pairs, [i for i, flag in enumerate(used) if not flag]


def components_cancel(
    xs: Sequence[SignedDecomp],
    order: int,
    mode: CancelMode = CancelMode.CERTIFIED,
) -> CancellationReport:
    t, r = _shared_progression(xs)
    if mode == CancelMode.TRUNCATED:
        first = _truncated(xs, order)
        return CancellationReport(
            t=t,
            r=r,
            mode=mode,
            status=CancelStatus.CANCELLED if first is None else CancelStatus.RESIDUAL,
            residual_first_exponent=first,
        )

    forms = signed_forms(xs)
    pairs, unpaired = pair_forms(forms)
    if not unpaired:
        return CancellationReport(
            t=t, r=r, mode=mode, status=CancelStatus.CANCELLED, pairing=pairs
        )
    residual = Series.zero(order)
    for index in unpaired:
        sign, form = forms[index]
        # form_series already carries form.sign
        residual = residual + form_series(form, order).scale(sign * form.sign)
    logger.debug(
        "%s of %s canonical forms unpaired at residue %s mod %s", len(unpaired), len(forms), r, t
    )
    return CancellationReport(
        t=t,
        r=r,
        mode=mode,
        status=CancelStatus.RESIDUAL,
        pairing=pairs,
        residual_first_exponent=residual.valuation(),
    )
