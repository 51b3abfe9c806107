"""Suite execution helpers: guards, worker pool, report assembly.

A suite is a list of (indices, thunk) pairs; thunks return True/False.
Reports follow one JSON-friendly schema across all verifier modules:
{suite, n, mode, instances: [{indices, status, millis}], pass}.  Instances
are independent and may run on a thread pool (QNOETHER_WORKERS), but the
report always lists them in instance order.
"""

from __future__ import annotations

import os
import time
from concurrent.futures import ThreadPoolExecutor


class GuardExceeded(ValueError):
    """A suite was asked to run beyond its size guard without force=True."""


def check_guard(value: int, bound: int, what: str, force: bool):
    if value > bound and not force:
        raise GuardExceeded(
            f"{what} guard is {bound}, got {value}; pass force=True (--force) to override"
        )


def worker_count() -> int:
    try:
        return max(1, int(os.environ.get("QNOETHER_WORKERS", "1")))
    except ValueError:
        return 1


def run_instances(instances, workers: int | None = None) -> list[dict]:
    """Run (indices, thunk) pairs, preserving order in the result list."""
    if workers is None:
        workers = worker_count()

    def run_one(pair):
        indices, thunk = pair
        start = time.perf_counter()
        ok = bool(thunk())
        millis = int((time.perf_counter() - start) * 1000)
        return {"indices": list(indices), "status": "pass" if ok else "fail",
                "millis": millis}

    if workers <= 1 or len(instances) <= 1:
        return [run_one(p) for p in instances]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(run_one, instances))


def make_report(suite: str, n: int, mode: str, results: list[dict], **extra) -> dict:
    report = {
        "suite": suite,
        "n": n,
        "mode": mode,
        "instances": results,
        "pass": all(r["status"] == "pass" for r in results),
    }
    report.update(extra)
    return report
