"""Count histograms produced by the enumerators."""

from __future__ import annotations

from dataclasses import dataclass, field

from mapenum.errors import CountOverflowError

INT64_MAX = 2**63 - 1


def checked(value: int) -> int:
    if not 0 <= value <= INT64_MAX:
        raise CountOverflowError(f"count {value} leaves the signed 64-bit range")
    return value


def merge_bins(*bins_list: dict[int, int]) -> dict[int, int]:
    out: dict[int, int] = {}
    for bins in bins_list:
        for k, v in bins.items():
            out[k] = checked(out.get(k, 0) + v)
    return dict(sorted(out.items()))


@dataclass
class GenusHistogram:
    """Connected oriented maps binned by genus."""

    bins: dict[int, int]
    total_connected: int
    total_matchings: int
    key_name: str = field(default="g", init=False, repr=False)

    def as_list(self) -> list[int]:
        """Counts for genus 0, 1, ... up to the top non-empty genus."""
        if not self.bins:
            return []
        return [self.bins.get(g, 0) for g in range(max(self.bins) + 1)]

    @property
    def disconnected(self) -> int:
        return self.total_matchings - self.total_connected


@dataclass
class ChiHistogram:
    """Connected unoriented maps binned by Euler characteristic."""

    bins: dict[int, int]
    total_connected: int
    total_signed_matchings: int
    key_name: str = field(default="chi", init=False, repr=False)

    @property
    def disconnected(self) -> int:
        return self.total_signed_matchings - self.total_connected


@dataclass
class FaceHistogram:
    """All matchings, connected or not, binned by face count."""

    bins: dict[int, int]
    total: int
    key_name: str = field(default="F", init=False, repr=False)

    def power_sum(self, n, edges: int):
        """``sum_F bins[F] * n**(F - edges)`` as an exact rational."""
        from fractions import Fraction

        return sum((Fraction(n) ** (f - edges) * c for f, c in self.bins.items()), Fraction(0))
