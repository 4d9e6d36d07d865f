"""Deterministic parallel map for sweep workloads."""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor


def default_jobs() -> int:
    return os.cpu_count() or 1


def map_ordered(fn, items, jobs: int):
    """Apply fn to items with at most `jobs` workers, results in input order."""
    items = list(items)
    if jobs <= 1 or len(items) <= 1:
        return [fn(x) for x in items]
    with ThreadPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(fn, items))
