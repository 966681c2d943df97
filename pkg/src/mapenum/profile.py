"""Vertex-degree profiles: which vertex degrees occur and how often."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Mapping

from mapenum.errors import OddDartCountError, ProfileError


@dataclass(frozen=True)
class DegreeProfile:
    """Multiset of vertex degrees, stored as sorted ``(degree, count)`` pairs.

    >>> p = DegreeProfile.parse("3,3,4")
    >>> str(p), p.vertices, p.edges
    ('3:2,4:1', 3, 5)
    """

    entries: tuple[tuple[int, int], ...]

    def __post_init__(self):
        merged: Counter[int] = Counter()
        for d, j in self.entries:
            if int(d) != d or int(j) != j:
                raise ProfileError(f"degrees and counts must be integers, got {d}:{j}")
            if d < 1:
                raise ProfileError(f"degree must be >= 1, got {d}")
            if j < 1:
                raise ProfileError(f"vertex count must be >= 1, got {j} for degree {d}")
            merged[int(d)] += int(j)
        if not merged:
            raise ProfileError("a profile needs at least one vertex")
        object.__setattr__(self, "entries", tuple(sorted(merged.items())))

    @classmethod
    def from_mapping(cls, counts: Mapping[int, int]) -> "DegreeProfile":
        return cls(tuple((int(d), int(j)) for d, j in counts.items()))

    @classmethod
    def from_degrees(cls, degrees) -> "DegreeProfile":
        return cls(tuple(Counter(int(d) for d in degrees).items()))

    @classmethod
    def parse(cls, text: str) -> "DegreeProfile":
        """Accept ``"3,3,4"`` (degree list) or ``"3:2,4:1"`` (degree:count)."""
        items = [t.strip() for t in str(text).split(",") if t.strip()]
        if not items:
            raise ProfileError(f"empty degree profile: {text!r}")
        counts: Counter[int] = Counter()
        try:
            for item in items:
                if ":" in item:
                    d, j = item.split(":", 1)
                    counts[int(d)] += int(j)
                    if int(j) < 1:
                        raise ProfileError(f"vertex count must be >= 1 in {item!r}")
                else:
                    counts[int(item)] += 1
        except ValueError as exc:
            if isinstance(exc, ProfileError):
                raise
            raise ProfileError(f"cannot parse degree profile {text!r}") from exc
        return cls(tuple(counts.items()))

    def as_dict(self) -> dict[int, int]:
        return dict(self.entries)

    @property
    def degrees(self) -> list[int]:
        """One degree per vertex, ascending."""
        return [d for d, j in self.entries for _ in range(j)]

    @property
    def vertices(self) -> int:
        return sum(j for _, j in self.entries)

    @property
    def total_darts(self) -> int:
        return sum(d * j for d, j in self.entries)

    @property
    def edges(self) -> int:
        return self.total_darts // 2

    @property
    def is_enumerable(self) -> bool:
        return self.total_darts % 2 == 0

    def require_enumerable(self) -> None:
        if not self.is_enumerable:
            raise OddDartCountError(
                f"profile {self} has odd total degree {self.total_darts}; darts cannot be paired"
            )

    def __str__(self) -> str:
        return ",".join(f"{d}:{j}" for d, j in self.entries)


def as_profile(value) -> DegreeProfile:
    """Coerce a profile, a ``{degree: count}`` mapping, or profile text."""
    if isinstance(value, DegreeProfile):
        return value
    if isinstance(value, Mapping):
        return DegreeProfile.from_mapping(value)
    if isinstance(value, str):
        return DegreeProfile.parse(value)
    return DegreeProfile.from_degrees(value)
