from __future__ import annotations

import asyncio
import logging
from collections.abc import Callable, Sequence
from concurrent.futures import ProcessPoolExecutor
from functools import partial
from typing import TypeVar

from qdissect.cache import FileCache
from qdissect.config import Config
from qdissect.models import (
    Claim,
    ClaimRecord,
    ClaimStatus,
    FamilyTemplate,
    Finding,
    ProductSpec,
    RunReport,
    ScanReport,
)
from qdissect.output.report import build_report
from qdissect.series.core import Series
from qdissect.series.products import product_expand
from qdissect.verifier.catalog import builtin_catalog
from qdissect.verifier.prover import prove_claim
from qdissect.verifier.scanner import plan_scan, scan_instance, scan_report
from qdissect.verifier.verify import VerifierError, verify_claim

logger = logging.getLogger(__name__)

T = TypeVar("T")


def expand_cached(spec: ProductSpec, order: int, cache: FileCache | None = None) -> Series:
    if cache is not None:
        cached = cache.get_series(spec, order)
        if cached is not None and cached.order >= order:
            return cached
    series = product_expand(spec, order)
    if cache is not None:
        cache.put_series(spec, order, series)
    return series


def evaluate_claim(
    claim: Claim,
    order: int,
    prove: bool = True,
    cache: FileCache | None = None,
) -> ClaimRecord:
    """Brute-force check plus optional certification, keeping the strongest evidence."""
    logger.debug("checking %s (%sn+%s) to order %s", claim.id, claim.t, claim.r, order)
    brute = verify_claim(claim, order, expand_cached(claim.spec, order, cache))
    record = ClaimRecord(
        id=claim.id,
        status=brute.status,
        order=order,
        first_counterexample=brute.first_counterexample,
    )
    if prove:
        try:
            proof = prove_claim(claim, order)
        except VerifierError as exc:
            logger.warning("prover failed on %s: %s", claim.id, exc)
            return record
        if proof.status == ClaimStatus.CERTIFIED:
            groups = [group.cancellation for group in proof.groups or []]
            if brute.status == ClaimStatus.REFUTED:
                logger.error(
                    "soundness violation: %s certified but coefficient of q^%s is %s",
                    claim.id,
                    brute.first_counterexample.n,
                    brute.first_counterexample.coeff,
                )
                record = record.model_copy(update={"groups": groups})
            else:
                record = record.model_copy(
                    update={"status": ClaimStatus.CERTIFIED, "groups": groups}
                )
    logger.debug("%s: %s", claim.id, record.status.value)
    return record


def scan_unit(
    spec: ProductSpec,
    t: int,
    order: int,
    certify: bool = True,
    cache: FileCache | None = None,
) -> list[Finding]:
    return scan_instance(spec, t, order, certify, expand_cached(spec, order, cache))


async def _gather(config: Config, units: Sequence[Callable[[], T]]) -> list[T]:
    semaphore = asyncio.Semaphore(config.concurrency)
    loop = asyncio.get_running_loop()
    pool = (
        ProcessPoolExecutor(max_workers=config.concurrency)
        if config.executor == "process"
        else None
    )

    async def run_one(unit: Callable[[], T]) -> T:
        async with semaphore:
            if pool is None:
                return await asyncio.to_thread(unit)
            return await loop.run_in_executor(pool, unit)

    try:
        return list(await asyncio.gather(*(run_one(unit) for unit in units)))
    finally:
        if pool is not None:
            pool.shutdown()


def _cache(config: Config) -> FileCache | None:
    return FileCache(config.cache_dir) if config.cache_dir is not None else None


async def run_catalog(config: Config, claims: Sequence[Claim] | None = None) -> RunReport:
    selected = list(builtin_catalog() if claims is None else claims)
    cache = _cache(config)
    logger.info("evaluating %s claims to order %s", len(selected), config.order)
    units = [
        partial(evaluate_claim, claim, config.order, config.prove, cache) for claim in selected
    ]
    return build_report(await _gather(config, units))


async def run_scan(
    config: Config,
    template: FamilyTemplate,
    t: int | None = None,
) -> ScanReport:
    plan = plan_scan(template, t, config.scan_order)
    cache = _cache(config)
    units = [
        partial(scan_unit, spec, plan.t, plan.order, config.prove, cache) for spec in plan.specs
    ]
    return scan_report(template, plan, await _gather(config, units))
