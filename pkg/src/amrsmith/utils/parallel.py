"""Order-preserving parallel map for per-record corpus work."""

import logging
from concurrent.futures import ProcessPoolExecutor
from typing import Callable, Iterable, Iterator, List, Optional, TypeVar

from tqdm import tqdm

logger = logging.getLogger(__name__)

T = TypeVar("T")
R = TypeVar("R")


def ordered_map(
    func: Callable[[T], R],
    items: Iterable[T],
    jobs: int = 1,
    progress: bool = False,
    desc: Optional[str] = None,
) -> List[R]:
    """Apply func to every item, returning results in input order.

    With jobs > 1 the work runs in a process pool, so func and items must be
    picklable (module-level functions or functools.partial over them).
    """
    items = list(items)
    results: Iterator[R]
    if jobs <= 1 or len(items) < 2:
        results = map(func, items)
        return list(tqdm(results, total=len(items), desc=desc, disable=not progress, leave=False))

    chunksize = max(1, len(items) // (jobs * 8))
    logger.debug(
        f"Running {len(items)} items on {jobs} workers",
        extra={"jobs": jobs, "chunksize": chunksize},
    )
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        results = pool.map(func, items, chunksize=chunksize)
        return list(tqdm(results, total=len(items), desc=desc, disable=not progress, leave=False))
