"""Cross-verification of the closed forms against the generic oracle.

A grid point (n, k) matches when the closed-form Frobenius number, full
Apery set and genus agree with the oracle computed from the minimal
generating set, and when that generating set is a fixed point of the
oracle's minimal-generator reduction.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from . import thabit
from .oracle import make_semigroup

DEFAULT_S0_MAX = 200_000


@dataclass(frozen=True)
class Mismatch:
    field: str
    closed_value: str
    oracle_value: str


@dataclass(frozen=True)
class PointReport:
    n: int
    k: int
    s0: int
    mismatches: tuple[Mismatch, ...] = ()

    @property
    def ok(self) -> bool:
        return not self.mismatches


@dataclass
class VerifyReport:
    points: list[PointReport] = field(default_factory=list)

    @property
    def total(self) -> int:
        return len(self.points)

    @property
    def mismatched(self) -> list[PointReport]:
        return [p for p in self.points if not p.ok]

    @property
    def ok(self) -> bool:
        return not self.mismatched


def grid_points(n_max: int | None = None, k_max: int | None = None,
                s0_max: int = DEFAULT_S0_MAX) -> list[tuple[int, int]]:
    """All (n, k), k >= 1, with s_0 <= s0_max, ordered n asc then k asc.

    At n = 0 the smallest generator is 2 for every k, so the s_0 cap alone
    would make that row infinite; it is bounded by s_1 <= s0_max instead.
    """
    def within(n: int, k: int) -> bool:
        i = 1 if n == 0 else 0
        return thabit.generator_at(n, k, i) <= s0_max

    points = []
    n = 0
    while within(n, 1):
        if n_max is None or n <= n_max:
            k = 1
            while within(n, k):
                if k_max is None or k <= k_max:
                    points.append((n, k))
                k += 1
        n += 1
    return points


def verify_point(n: int, k: int) -> PointReport:
    """Compare every closed form at one grid point against the oracle."""
    gens = thabit.minimal_generating_set(n, k)
    s0 = gens.gens[0]
    mismatches = []

    closed_fr = thabit.frobenius_closed(n, k)
    oracle_fr = gens.frobenius()
    if closed_fr != oracle_fr:
        mismatches.append(Mismatch("frobenius", str(closed_fr), str(oracle_fr)))

    closed_ap = thabit.apery_set_closed(n, k)
    oracle_ap = sorted(gens.apery_set(s0).w)
    if closed_ap != oracle_ap:
        mismatches.append(Mismatch(
            "apery_set",
            f"{len(closed_ap)} values, max {closed_ap[-1]}",
            f"{len(oracle_ap)} values, max {oracle_ap[-1]}",
        ))

    closed_g = thabit.genus_from_apery(s0, closed_ap)
    oracle_g = gens.genus()
    if closed_g != oracle_g:
        mismatches.append(Mismatch("genus", str(closed_g), str(oracle_g)))

    reduced = gens.minimal_generators()
    if reduced.gens != gens.gens:
        mismatches.append(Mismatch(
            "minimal_generators", str(gens.gens), str(reduced.gens)))

    return PointReport(n, k, s0, tuple(mismatches))


def _verify_point_star(nk: tuple[int, int]) -> PointReport:
    return verify_point(*nk)


def verify_grid(n_max: int | None = None, k_max: int | None = None,
                s0_max: int = DEFAULT_S0_MAX, jobs: int = 1) -> VerifyReport:
    """Run :func:`verify_point` over the whole grid.

    The report order is always n asc, k asc, independent of ``jobs``.
    """
    points = grid_points(n_max, k_max, s0_max)
    if jobs > 1 and len(points) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            reports = list(pool.map(_verify_point_star, points, chunksize=4))
    else:
        reports = [verify_point(n, k) for n, k in points]
    return VerifyReport(reports)
