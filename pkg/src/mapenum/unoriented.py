"""Labeled connected maps on unoriented surfaces (Mobius graphs), counted by Euler characteristic.

Every quotient dart ``q`` (1-based) is doubled into two letters, one per local
orientation: ``2(q-1) + 1`` for ``+`` and ``2(q-1) + 2`` for ``-``.  The
reflection ``phi = (1 2)(3 4)...`` swaps the copies, ``sigma`` turns the ``+``
copies one way and the ``-`` copies the other, and an edge lifts to two
2-cycles of ``tau`` that either keep or swap the orientation copies.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Optional

import numpy as np

from mapenum import _kernels
from mapenum.errors import CountOverflowError, InvariantError
from mapenum.histograms import INT64_MAX, ChiHistogram, FaceHistogram
from mapenum.oriented import build_sigma
from mapenum.parallel import ProgressFn, plan_shards, run_shards
from mapenum.perm import (
    Matching,
    Permutation,
    compose,
    conjugate,
    double_factorial,
    matchings,
    orbit_is_full,
)
from mapenum.profile import as_profile


def letter(q: int, minus: bool) -> int:
    """Doubled letter for quotient dart ``q`` with the given orientation copy."""
    return 2 * (q - 1) + int(minus) + 1


@dataclass(frozen=True)
class DoubledDartSpace:
    edges: int

    @property
    def quotient_darts(self) -> int:
        return 2 * self.edges

    @property
    def letters(self) -> int:
        return 4 * self.edges

    @property
    def phi(self) -> Permutation:
        return Permutation.from_cycles(
            [(2 * i + 1, 2 * i + 2) for i in range(self.quotient_darts)], self.letters
        )


@dataclass(frozen=True)
class SignedMatching:
    """A quotient matching plus one twist bit per pair (True = orientation reversing)."""

    pairing: Matching
    twists: tuple[bool, ...]

    def __post_init__(self):
        if len(self.twists) != len(self.pairing.pairs):
            raise ValueError(
                f"{len(self.twists)} twist bits for {len(self.pairing.pairs)} edges"
            )

    def __str__(self) -> str:
        return "".join(
            f"({a} {b}{'~' if t else ''})" for (a, b), t in zip(self.pairing.pairs, self.twists)
        )


def double_sigma(sigma0: Permutation) -> Permutation:
    """Lift a quotient rotation: ``+`` copies follow ``sigma0``, ``-`` copies its inverse."""
    inv = sigma0.inverse()
    images = [0] * (2 * sigma0.size)
    for q in range(1, sigma0.size + 1):
        images[letter(q, False) - 1] = letter(sigma0(q), False)
        images[letter(q, True) - 1] = letter(inv(q), True)
    return Permutation(images)


def build_doubled(profile) -> tuple[DoubledDartSpace, Permutation]:
    """Doubled dart space and the lifted rotation for a degree profile.

    >>> space, sigma = build_doubled({2: 1})
    >>> str(sigma), str(space.phi)
    ('(1 3)(2 4)', '(1 2)(3 4)')
    """
    sigma0 = build_sigma(profile)
    sigma = double_sigma(sigma0)
    space = DoubledDartSpace(sigma0.size // 2)
    phi = space.phi
    if conjugate(sigma, phi) != sigma.inverse():
        raise InvariantError("phi sigma phi != sigma^-1 for the lifted rotation")
    return space, sigma


def lift(space: DoubledDartSpace, sm: SignedMatching) -> Permutation:
    """Edge-gluing permutation on the doubled letters.

    >>> space = DoubledDartSpace(1)
    >>> str(lift(space, SignedMatching(Matching(((1, 2),)), (True,))))
    '(1 4)(2 3)'
    """
    if sm.pairing.size != space.quotient_darts:
        raise ValueError(f"matching on {sm.pairing.size} darts, space has {space.quotient_darts}")
    cycles = []
    for (a, b), twisted in zip(sm.pairing.pairs, sm.twists):
        cycles.append((letter(a, False), letter(b, twisted)))
        cycles.append((letter(a, True), letter(b, not twisted)))
    return Permutation.from_cycles(cycles, space.letters)


def _two_cycles(p: Permutation) -> set[tuple[int, int]]:
    return {c for c in p.cycles() if len(c) == 2}


def validate_triple(phi: Permutation, sigma: Permutation, tau: Permutation) -> bool:
    """Structural conditions on ``(phi, sigma, tau)``.

    Checks that phi and tau are fixed-point-free involutions, that
    ``phi sigma phi = sigma^-1`` and ``phi tau phi = tau``, that tau shares no
    2-cycle with phi, and that the cycles of sigma come in phi-mirrored pairs
    of equal length.  Transitivity is left to :func:`classify_unoriented`.
    """
    n = phi.size
    if sigma.size != n or tau.size != n or n % 4:
        return False
    for inv in (phi, tau):
        if any(inv(x) == x or inv(inv(x)) != x for x in range(1, n + 1)):
            return False
    if conjugate(sigma, phi) != sigma.inverse() or conjugate(tau, phi) != tau:
        return False
    if _two_cycles(phi) & _two_cycles(tau):
        return False
    # each sigma cycle c is mirrored by phi onto a distinct cycle of the same length
    cycles = sigma.cycles()
    owner = {x: i for i, c in enumerate(cycles) for x in c}
    for i, c in enumerate(cycles):
        j = owner[phi(c[0])]
        if j == i or len(cycles[j]) != len(c):
            return False
    return True


def face_cycles_paired(phi: Permutation, sigma: Permutation, tau: Permutation) -> bool:
    """True iff the cycles of ``sigma o tau`` split into distinct equal-length pairs."""
    rho = compose(sigma, tau)
    cycles = rho.cycles()
    if len(cycles) % 2:
        return False
    owner = {x: i for i, c in enumerate(cycles) for x in c}
    for i, c in enumerate(cycles):
        j = owner[phi(tau(c[0]))]
        if j == i or len(cycles[j]) != len(c):
            return False
    return True


def classify_unoriented(
    space: DoubledDartSpace, sigma: Permutation, tau: Permutation
) -> Optional[int]:
    """Euler characteristic of the map ``(phi, sigma, tau)``, or ``None`` if disconnected."""
    phi = space.phi
    n = space.letters
    if not orbit_is_full([phi, sigma, tau], n):
        return None
    v2 = sigma.cycle_count()
    e2 = sum(1 for c in tau.cycles() if len(c) == 2)
    f2 = compose(sigma, tau).cycle_count()
    if v2 % 2 or e2 % 2 or f2 % 2:
        raise InvariantError(f"unpaired cycles: sigma {v2}, tau {e2}, sigma o tau {f2}")
    if not face_cycles_paired(phi, sigma, tau):
        raise InvariantError("faces of sigma o tau are not paired by phi o tau")
    return v2 // 2 - e2 // 2 + f2 // 2


def signed_matchings(edges: int) -> Iterator[SignedMatching]:
    """All ``(2E-1)!! * 2**E`` signed matchings; twist bits count up in binary, bit 0 = first pair."""
    for m in matchings(2 * edges):
        for t in range(1 << edges):
            yield SignedMatching(m, tuple(bool((t >> i) & 1) for i in range(edges)))


def _run(profile, threads: int, want_all: bool, progress: ProgressFn | None):
    profile = as_profile(profile)
    sigma0 = build_sigma(profile)
    _, sigma = build_doubled(profile)
    n = sigma0.size
    edges = n // 2
    space = double_factorial(n - 1) << edges
    if space > INT64_MAX:
        raise CountOverflowError(f"signed matching space {space} cannot be counted in 64 bits")
    s0 = sigma0.to_array()
    s4 = sigma.to_array()
    vertex_of = np.empty(n, dtype=np.int64)
    for i, c in enumerate(sigma0.cycles()):
        for x in c:
            vertex_of[x - 1] = i
    nv = profile.vertices
    violations = []

    def work(pre_a, pre_b):
        hc = np.zeros(n + 1, dtype=np.int64)
        ha = np.zeros(n + 1, dtype=np.int64)
        status = np.zeros(1, dtype=np.int64)
        visited = _kernels.unoriented_shard(s0, s4, vertex_of, nv, pre_a, pre_b, want_all, hc, ha, status)
        violations.append(int(status[0]))
        return visited, hc, ha

    visited, conn, every = run_shards(work, plan_shards(n), threads, progress)
    if sum(violations):
        raise InvariantError(f"{sum(violations)} signed matchings broke the face pairing of sigma o tau")
    if visited != space:
        raise InvariantError(f"visited {visited} signed matchings, expected {space}")
    return profile, space, conn, every


def enumerate_unoriented(
    profile, threads: int = 1, progress: ProgressFn | None = None
) -> ChiHistogram:
    """Count labeled connected unoriented maps with the given degree profile, by Euler characteristic.

    >>> enumerate_unoriented("4").bins
    {0: 5, 1: 5, 2: 2}
    """
    profile, space, conn, _ = _run(profile, threads, False, progress)
    v, e = profile.vertices, profile.edges
    bins: dict[int, int] = {}
    for f, count in conn.items():
        chi = v - e + f
        if chi > 2:
            raise InvariantError(f"Euler characteristic {chi} > 2")
        bins[chi] = bins.get(chi, 0) + count
    return ChiHistogram(dict(sorted(bins.items())), sum(bins.values()), space)


def enumerate_unoriented_moments(
    profile, threads: int = 1, progress: ProgressFn | None = None
) -> FaceHistogram:
    """Every signed matching, connected or not, binned by number of faces."""
    _, space, _, every = _run(profile, threads, True, progress)
    if sum(every.values()) != space:
        raise InvariantError(f"face histogram covers {sum(every.values())} of {space}")
    return FaceHistogram(every, space)
