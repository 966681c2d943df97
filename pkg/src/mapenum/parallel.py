"""Shard planning and threaded execution of the compiled kernels."""

from __future__ import annotations

import logging
import os
from concurrent.futures import ThreadPoolExecutor
from typing import Callable, Sequence

import numpy as np

from mapenum.histograms import checked
from mapenum.perm import double_factorial, matching_prefixes

log = logging.getLogger(__name__)

# largest number of leaves one shard may hold before it is split one level deeper
SHARD_LEAVES = 1 << 22
PROGRESS_EVERY = 1 << 24

ProgressFn = Callable[[int, int], None]


def default_threads() -> int:
    raw = os.environ.get("MAPENUM_THREADS")
    if raw:
        try:
            return max(1, int(raw))
        except ValueError:
            log.warning("ignoring non-integer MAPENUM_THREADS=%r", raw)
    return 1


def shard_depth(n_letters: int) -> int:
    depth = 1
    while depth < n_letters // 2 and double_factorial(n_letters - 1 - 2 * depth) > SHARD_LEAVES:
        depth += 1
    return min(depth, n_letters // 2)


def plan_shards(n_letters: int) -> list[tuple[np.ndarray, np.ndarray]]:
    """0-based prefix arrays, in canonical stream order."""
    shards = []
    for prefix in matching_prefixes(n_letters, shard_depth(n_letters)):
        a = np.array([p[0] - 1 for p in prefix], dtype=np.int64)
        b = np.array([p[1] - 1 for p in prefix], dtype=np.int64)
        shards.append((a, b))
    return shards


def run_shards(
    work: Callable[[np.ndarray, np.ndarray], tuple[int, np.ndarray, np.ndarray]],
    shards: Sequence[tuple[np.ndarray, np.ndarray]],
    threads: int,
    progress: ProgressFn | None = None,
) -> tuple[int, dict[int, int], dict[int, int]]:
    """Run ``work`` on every shard and merge the per-shard histograms.

    ``work`` returns ``(visited, hist_connected, hist_all)``.  The merge is a
    plain sum taken in shard order, so the result does not depend on
    ``threads`` or on scheduling.
    """
    if threads < 1:
        raise ValueError(f"threads must be >= 1, got {threads}")
    visited = 0
    conn: dict[int, int] = {}
    every: dict[int, int] = {}
    next_report = PROGRESS_EVERY

    def absorb(result):
        nonlocal visited, next_report
        v, hc, ha = result
        visited = checked(visited + int(v))
        for target, hist in ((conn, hc), (every, ha)):
            for k in np.flatnonzero(hist):
                target[int(k)] = checked(target.get(int(k), 0) + int(hist[k]))
        if progress is not None and visited >= next_report:
            progress(visited, len(shards))
            next_report = (visited // PROGRESS_EVERY + 1) * PROGRESS_EVERY

    if threads == 1 or len(shards) == 1:
        for a, b in shards:
            absorb(work(a, b))
    else:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            for result in pool.map(lambda s: work(*s), shards):
                absorb(result)
    return visited, dict(sorted(conn.items())), dict(sorted(every.items()))
