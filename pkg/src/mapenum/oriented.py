"""Labeled connected maps on oriented surfaces, counted by genus.

A map with a fixed vertex rotation ``sigma`` corresponds to a perfect matching
``tau`` of its darts.  The map is connected iff ``<sigma, tau>`` is transitive,
its faces are the cycles of ``sigma o tau``, and ``V - E + F = 2 - 2g``.
"""

from __future__ import annotations

from typing import Optional

import numpy as np

from mapenum import _kernels
from mapenum.errors import CountOverflowError, InvariantError
from mapenum.histograms import INT64_MAX, FaceHistogram, GenusHistogram
from mapenum.parallel import ProgressFn, plan_shards, run_shards
from mapenum.perm import Matching, Permutation, compose, double_factorial, orbit_is_full
from mapenum.profile import DegreeProfile, as_profile


def build_sigma(profile) -> Permutation:
    """Canonical rotation: vertices by ascending degree, each a block of consecutive darts.

    >>> str(build_sigma({3: 2, 4: 1}))
    '(1 2 3)(4 5 6)(7 8 9 10)'
    """
    profile = as_profile(profile)
    profile.require_enumerable()
    cycles = []
    start = 1
    for d in profile.degrees:
        cycles.append(tuple(range(start, start + d)))
        start += d
    return Permutation.from_cycles(cycles, profile.total_darts)


def genus_from_counts(v: int, e: int, f: int) -> int:
    chi = v - e + f
    if chi % 2 or chi > 2:
        raise InvariantError(f"oriented Euler characteristic {chi} = {v} - {e} + {f} is impossible")
    return (2 - chi) // 2


def classify(sigma: Permutation, tau: Matching | Permutation) -> Optional[int]:
    """Genus of the map ``(sigma, tau)``, or ``None`` if it is disconnected."""
    tau_p = tau.to_permutation() if isinstance(tau, Matching) else tau
    n = sigma.size
    if tau_p.size != n:
        raise ValueError(f"sigma acts on {n} letters, tau on {tau_p.size}")
    if not orbit_is_full([sigma, tau_p], n):
        return None
    v = sigma.cycle_count()
    f = compose(sigma, tau_p).cycle_count()
    return genus_from_counts(v, n // 2, f)


def _vertex_of(sigma: Permutation) -> tuple[np.ndarray, int]:
    vertex_of = np.empty(sigma.size, dtype=np.int64)
    cycles = sigma.cycles()
    for i, c in enumerate(cycles):
        for x in c:
            vertex_of[x - 1] = i
    return vertex_of, len(cycles)


def _guard_size(space: int) -> None:
    if space > INT64_MAX:
        raise CountOverflowError(f"matching space {space} cannot be counted in 64 bits")


def _run(sigma: Permutation, threads: int, want_all: bool, progress: ProgressFn | None):
    n = sigma.size
    if n % 2:
        raise ValueError(f"sigma acts on an odd number of letters ({n})")
    _guard_size(double_factorial(n - 1))
    sig = sigma.to_array()
    vertex_of, nv = _vertex_of(sigma)

    def work(pre_a, pre_b):
        hc = np.zeros(n + 1, dtype=np.int64)
        ha = np.zeros(n + 1, dtype=np.int64)
        visited = _kernels.oriented_shard(sig, vertex_of, nv, pre_a, pre_b, want_all, hc, ha)
        return visited, hc, ha

    return run_shards(work, plan_shards(n), threads, progress)


def enumerate_oriented_sigma(
    sigma: Permutation, threads: int = 1, progress: ProgressFn | None = None
) -> GenusHistogram:
    """Genus histogram over every matching of the letters of ``sigma``."""
    n = sigma.size
    visited, by_faces, _ = _run(sigma, threads, False, progress)
    total = double_factorial(n - 1)
    if visited != total:
        raise InvariantError(f"visited {visited} matchings, expected {total}")
    v = sigma.cycle_count()
    bins: dict[int, int] = {}
    for f, count in by_faces.items():
        g = genus_from_counts(v, n // 2, f)
        bins[g] = bins.get(g, 0) + count
    return GenusHistogram(dict(sorted(bins.items())), sum(bins.values()), total)


def enumerate_oriented(
    profile, threads: int = 1, progress: ProgressFn | None = None
) -> GenusHistogram:
    """Count labeled connected oriented maps with the given degree profile, by genus.

    >>> enumerate_oriented("3,3,4").bins
    {0: 432, 1: 468}
    """
    return enumerate_oriented_sigma(build_sigma(profile), threads, progress)


def enumerate_oriented_moments(
    profile, threads: int = 1, progress: ProgressFn | None = None
) -> FaceHistogram:
    """Every matching, connected or not, binned by number of faces."""
    sigma = build_sigma(profile)
    visited, _, by_faces = _run(sigma, threads, True, progress)
    total = double_factorial(sigma.size - 1)
    if visited != total or sum(by_faces.values()) != total:
        raise InvariantError(f"face histogram covers {sum(by_faces.values())} of {total} matchings")
    return FaceHistogram(by_faces, total)


__all__ = [
    "DegreeProfile",
    "build_sigma",
    "classify",
    "enumerate_oriented",
    "enumerate_oriented_moments",
    "enumerate_oriented_sigma",
    "genus_from_counts",
]
