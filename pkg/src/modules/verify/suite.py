from concurrent.futures import ThreadPoolExecutor
from datetime import datetime
from typing import Iterable, List, Optional, Sequence
import time
import zlib

import numpy as np

from ..core.errors import CtmError
from .checks import CHECKS, Check
from .context import SuiteContext
from .results import CheckResult, SuiteReport


def _select(checks: Optional[Iterable[str]]) -> List[Check]:
    if checks is None:
        return list(CHECKS.values())
    selected = []
    for check_id in checks:
        if check_id not in CHECKS:
            raise ValueError(f"unknown check '{check_id}'; known checks: {', '.join(CHECKS)}")
        selected.append(CHECKS[check_id])
    return selected


def run_check(ctx: SuiteContext, check: Check, seed: int) -> CheckResult:
    """Run one check; pipeline errors become a failing result instead of aborting the suite."""
    started = time.perf_counter()
    rng = ctx.rng(seed, zlib.crc32(check.check_id.encode()))
    try:
        outcome = check.run(ctx, rng)
        result = CheckResult(
            check_id=check.check_id,
            anchor=check.anchor,
            measured=float(outcome.measured),
            threshold=float(outcome.threshold),
            passed=bool(outcome.passed),
            seed=seed,
            detail=outcome.detail,
            skipped=outcome.skipped,
        )
    except (CtmError, ValueError, np.linalg.LinAlgError) as e:
        stage = getattr(e, "check_id", type(e).__name__)
        result = CheckResult(
            check_id=check.check_id,
            anchor=check.anchor,
            measured=float("nan"),
            threshold=float("nan"),
            passed=False,
            seed=seed,
            detail={"stage": stage},
            error=f"{type(e).__name__}: {e}",
        )
    result.duration_ms = (time.perf_counter() - started) * 1000.0
    if ctx.logger:
        if result.error:
            ctx.logger.log_error(f"{check.check_id} failed in {result.detail['stage']}: {result.error}")
        elif result.skipped:
            ctx.logger.log_info(f"{check.check_id} skipped")
        else:
            ctx.logger.log_check(check.check_id, result.measured, result.threshold, result.passed)
    return result


def estimate_suite(ctx: SuiteContext, seeds: Sequence[int] = (0,), checks: Optional[Iterable[str]] = None,
                   threads: Optional[int] = None) -> SuiteReport:
    """Run the acceptance battery, every check once per seed.

    Checks run concurrently; results come back in registration order so the
    report does not depend on scheduling.
    """
    selected = _select(checks)
    seeds = tuple(int(seed) for seed in seeds) or (0,)
    jobs = [(check, seed) for check in selected for seed in seeds]
    if ctx.logger:
        ctx.logger.log_stage("verify", f"{len(selected)} checks x {len(seeds)} seeds")
    start_time = datetime.now()
    started = time.perf_counter()
    with ThreadPoolExecutor(max_workers=threads or ctx.threads) as pool:
        results = list(pool.map(lambda job: run_check(ctx, *job), jobs))
    report = SuiteReport(
        results=results,
        seeds=seeds,
        start_time=start_time,
        end_time=datetime.now(),
        duration_ms=(time.perf_counter() - started) * 1000.0,
        model={
            "tracks": ctx.config.m,
            "n_x": ctx.grid.n_x,
            "x_min": ctx.grid.x_min,
            "x_max": ctx.grid.x_max,
            "n_k": ctx.lattice.n,
            "generic_thresholds": ctx.generic,
        },
    )
    if ctx.logger:
        ctx.logger.log_table("verify summary", report.counts())
    return report
