"""Order-preserving fan-out over independent cases."""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from typing import Callable, Sequence, TypeVar

T = TypeVar("T")
R = TypeVar("R")

JOBS_ENV = "ACTORKIT_JOBS"


def resolve_jobs(jobs: int | None = None) -> int:
    if jobs is None:
        jobs = int(os.environ.get(JOBS_ENV, "1") or 1)
    if jobs <= 0:
        jobs = os.cpu_count() or 1
    return jobs


def pmap(fn: Callable[[T], R], items: Sequence[T], jobs: int | None = None) -> list[R]:
    """``[fn(x) for x in items]``, possibly in worker processes.

    Results always come back in input order, so the merge never depends on
    completion time. ``fn`` must be picklable when ``jobs > 1``.
    """
    items = list(items)
    jobs = resolve_jobs(jobs)
    if jobs <= 1 or len(items) <= 1:
        return [fn(x) for x in items]
    chunk = max(1, len(items) // (4 * jobs))
    with ProcessPoolExecutor(max_workers=jobs) as ex:
        return list(ex.map(fn, items, chunksize=chunk))
