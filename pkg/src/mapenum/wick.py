"""Gaussian trace moments by brute-force Wick contraction.

``<prod_d (Tr M^d)^{j_d}>`` is expanded over every pairing of the matrix
factors and every assignment of matrix indices; each pair contributes its
quadratic expectation as Kronecker deltas.  Nothing here goes through the
permutation machinery of the enumerators, so the two routes check each other.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator

import numpy as np

from mapenum.profile import DegreeProfile, as_profile

MAX_FACTORS = 8
MAX_N = 4


@dataclass(frozen=True)
class MomentSpec:
    profile: DegreeProfile
    n: int

    def __post_init__(self):
        object.__setattr__(self, "profile", as_profile(self.profile))
        if self.n < 1:
            raise ValueError(f"matrix size must be >= 1, got {self.n}")
        if self.profile.total_darts > MAX_FACTORS or self.n > MAX_N:
            raise ValueError(
                f"moment too large for brute force: {self.profile.total_darts} factors, N={self.n} "
                f"(limits {MAX_FACTORS} factors, N <= {MAX_N})"
            )


def _pairings(items: list[int]) -> Iterator[list[tuple[int, int]]]:
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for i, other in enumerate(rest):
        for tail in _pairings(rest[:i] + rest[i + 1 :]):
            yield [(first, other)] + tail


def _factor_indices(profile: DegreeProfile, n: int):
    """Row and column index arrays of every matrix factor over all index tuples.

    Factor ``p`` is ``M[i_p, i_next(p)]`` where ``next`` steps around its trace.
    """
    nxt = []
    pos = 0
    for d in profile.degrees:
        nxt.extend(pos + (k + 1) % d for k in range(d))
        pos += d
    m = len(nxt)
    grid = np.indices((n,) * m, dtype=np.int8).reshape(m, -1)
    return grid, grid[nxt]


def _moment(spec: MomentSpec, orthogonal: bool) -> Fraction:
    profile, n = spec.profile, spec.n
    m = profile.total_darts
    if m % 2:
        return Fraction(0)
    row, col = _factor_indices(profile, n)
    total = 0
    for pairing in _pairings(list(range(m))):
        weight = np.ones(row.shape[1], dtype=np.int64)
        for p, q in pairing:
            # <M_ij M_kl> ~ d_il d_jk (+ d_ik d_jl for real symmetric M)
            term = ((row[p] == col[q]) & (col[p] == row[q])).astype(np.int64)
            if orthogonal:
                term += (row[p] == row[q]) & (col[p] == col[q])
            weight *= term
        total += int(weight.sum())
    return Fraction(total, n ** (m // 2))


def gue_moment(spec: MomentSpec) -> Fraction:
    """Hermitian ensemble with ``<M_ij M_kl> = d_il d_jk / N``.

    >>> gue_moment(MomentSpec({4: 1}, 2))
    Fraction(9, 2)
    """
    return _moment(spec, orthogonal=False)


def goe_moment(spec: MomentSpec) -> Fraction:
    """Real symmetric ensemble with ``<M_ij M_kl> = (d_il d_jk + d_ik d_jl) / N``.

    >>> goe_moment(MomentSpec({4: 1}, 2))
    Fraction(23, 2)
    """
    return _moment(spec, orthogonal=True)


def profiles_up_to(max_darts: int, even_only: bool = True) -> list[DegreeProfile]:
    """Every degree profile whose total degree is at most ``max_darts``."""
    out = []

    def parts(total, largest):
        if total == 0:
            yield []
            return
        for d in range(min(total, largest), 0, -1):
            for rest in parts(total - d, d):
                yield [d] + rest

    for total in range(1, max_darts + 1):
        if even_only and total % 2:
            continue
        for degrees in parts(total, total):
            out.append(DegreeProfile.from_degrees(degrees))
    return out
