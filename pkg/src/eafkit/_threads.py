"""Optional thread-pool fan-out for embarrassingly parallel per-run work.

The ``EAFKIT_THREADS`` environment variable caps the number of worker
threads. The default of 1 keeps everything on the calling thread. Results
are always assembled in input order, so outputs do not depend on the cap.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from typing import Callable, Sequence, TypeVar

from .errors import ValidationError

_ENV_VAR = "EAFKIT_THREADS"

T = TypeVar("T")
R = TypeVar("R")


def thread_cap() -> int:
    """Maximum worker threads allowed by ``EAFKIT_THREADS`` (default 1)."""
    raw = os.environ.get(_ENV_VAR)
    if raw is None or raw.strip() == "":
        return 1
    try:
        cap = int(raw)
    except ValueError:
        raise ValidationError(f"{_ENV_VAR} must be a positive integer, got {raw!r}") from None
    if cap < 1:
        raise ValidationError(f"{_ENV_VAR} must be a positive integer, got {raw!r}")
    return cap


def map_ordered(fn: Callable[[T], R], items: Sequence[T]) -> list[R]:
    """Apply ``fn`` to every item, preserving order, honoring the thread cap."""
    cap = thread_cap()
    if cap == 1 or len(items) <= 1:
        return [fn(item) for item in items]
    with ThreadPoolExecutor(max_workers=min(cap, len(items))) as pool:
        return list(pool.map(fn, items))
