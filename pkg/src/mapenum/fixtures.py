"""Published oriented map counts, keyed by degree profile.

Values are listed by genus starting at 0.
"""

from __future__ import annotations

from dataclasses import dataclass

from mapenum.profile import DegreeProfile


@dataclass(frozen=True)
class Fixture:
    table: str
    profile: DegreeProfile
    counts: tuple[int, ...]

    @property
    def edges(self) -> int:
        return self.profile.edges

    @property
    def name(self) -> str:
        return f"{self.table} {self.profile}"

    def bins(self) -> dict[int, int]:
        return {g: c for g, c in enumerate(self.counts) if c}


# one vertex, degree 2n
TABLE_1 = {
    4: (2, 1),
    6: (5, 10),
    8: (14, 70, 21),
    10: (42, 420, 483),
    12: (132, 2310, 6468, 1485),
    14: (429, 12012, 66066, 56628),
    16: (1430, 60060, 570570, 1169740, 225225),
    18: (4862, 291720, 4390386, 17454580, 12317877),
    20: (16796, 1385670, 31039008, 211083730, 351683046, 59520825),
}

# two vertices of the same degree
TABLE_2 = {
    3: (12, 3),
    4: (36, 60),
    5: (180, 600, 165),
    6: (600, 4800, 4770),
    7: (2800, 34300, 81340, 16695),
    8: (9800, 215600, 1009400, 781200),
    9: (44100, 1323000, 10478160, 19158300, 3455865),
    10: (158760, 7408800, 94091760, 333774000, 218402730),
}

# j vertices of degree 4
TABLE_3 = {
    1: (2, 1),
    2: (36, 60),
    3: (1728, 6336, 1440),
    4: (145152, 964224, 770688),
    5: (17915904, 192098304, 348033024, 58060800),
}

MIXED = {
    "3:2,4:1": (432, 468),
    "3:1,4:1,5:1": (2160, 6480, 1440),
}


def all_fixtures() -> list[Fixture]:
    out = [Fixture("table1", DegreeProfile(((d, 1),)), c) for d, c in TABLE_1.items()]
    out += [Fixture("table2", DegreeProfile(((d, 2),)), c) for d, c in TABLE_2.items()]
    out += [Fixture("table3", DegreeProfile(((4, j),)), c) for j, c in TABLE_3.items()]
    out += [Fixture("mixed", DegreeProfile.parse(p), c) for p, c in MIXED.items()]
    return out
