"""Partitioned work over a process pool.

Results always come back in job order, so the worker count never changes
what a caller sees.
"""

from multiprocessing import Pool, cpu_count
from typing import Callable, List, Optional, Sequence, TypeVar

from tqdm import tqdm

Job = TypeVar("Job")
Result = TypeVar("Result")


def resolve_workers(workers: Optional[int]) -> int:
    if workers is None or workers <= 0:
        return cpu_count()
    return workers


def run_partitioned(
    func: Callable[[Job], Result],
    jobs: Sequence[Job],
    workers: Optional[int] = 1,
    progress: bool = False,
    desc: str = "jobs",
) -> List[Result]:
    """Map func over jobs, in-process for one worker, pooled otherwise"""
    workers = resolve_workers(workers)
    if workers == 1 or len(jobs) <= 1:
        return [func(job) for job in tqdm(jobs, desc=desc, disable=not progress)]
    with Pool(processes=min(workers, len(jobs))) as pool:
        return list(
            tqdm(
                pool.imap(func, jobs), total=len(jobs), desc=desc, disable=not progress
            )
        )
