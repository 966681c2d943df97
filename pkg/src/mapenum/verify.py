"""Self-checks against published tables and the independent oracles."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterator

from mapenum.fixtures import all_fixtures
from mapenum.oracles import chi_coefficients, genus_coefficients
from mapenum.oriented import enumerate_oriented, enumerate_oriented_moments
from mapenum.unoriented import enumerate_unoriented, enumerate_unoriented_moments
from mapenum.wick import MomentSpec, goe_moment, gue_moment, profiles_up_to

SUITES = ("paper-tables", "oracles", "wick")


@dataclass
class Check:
    name: str
    expected: object
    actual: object

    @property
    def passed(self) -> bool:
        return self.expected == self.actual

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"{status}  {self.name}: expected={self.expected} actual={self.actual}"


def paper_tables(max_edges: int, threads: int = 1) -> Iterator[Check]:
    for fx in all_fixtures():
        if fx.edges > max_edges:
            continue
        yield Check(fx.name, fx.bins(), enumerate_oriented(fx.profile, threads).bins)


def oracles(max_edges: int, threads: int = 1) -> Iterator[Check]:
    table1 = {fx.profile.degrees[0] // 2: fx for fx in all_fixtures() if fx.table == "table1"}
    for n in range(2, 11):
        yield Check(f"harer-zagier n={n} vs table1", table1[n].bins(), genus_coefficients(n))
    for n in range(1, min(8, max_edges) + 1):
        yield Check(
            f"harer-zagier n={n} vs oriented enumeration",
            genus_coefficients(n),
            enumerate_oriented({2 * n: 1}, threads).bins,
        )
    for n in range(1, min(6, max_edges) + 1):
        yield Check(
            f"goulden-jackson n={n} vs unoriented enumeration",
            chi_coefficients(n),
            enumerate_unoriented({2 * n: 1}, threads).bins,
        )


def wick(max_edges: int = 4, threads: int = 1, sizes=(1, 2, 3)) -> Iterator[Check]:
    for profile in profiles_up_to(min(8, 2 * max_edges)):
        oriented = enumerate_oriented_moments(profile, threads)
        unoriented = enumerate_unoriented_moments(profile, threads)
        for n in sizes:
            spec = MomentSpec(profile, n)
            yield Check(f"gue {profile} N={n}", gue_moment(spec), oriented.power_sum(n, profile.edges))
            yield Check(f"goe {profile} N={n}", goe_moment(spec), unoriented.power_sum(n, profile.edges))


RUNNERS: dict[str, Callable[..., Iterator[Check]]] = {
    "paper-tables": paper_tables,
    "oracles": oracles,
    "wick": wick,
}


def run_suite(suite: str, max_edges: int, threads: int = 1) -> Iterator[Check]:
    names = SUITES if suite == "all" else (suite,)
    for name in names:
        yield from RUNNERS[name](max_edges, threads)
