"""Matroid bases oracles, internal/external activities, the activity
generating polynomial, and the order-change bijection on bases.

The oracle abstraction runs on any matroid; lattice path matroids (bases =
north-step index sets of region paths) and uniform matroids are the two
instantiations used here.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Callable

from .paths import (
    Path,
    Region,
    contains,
    north_edges,
    north_index_set,
    path_from_north_set,
)
from .polynomials import MultiPoly


@dataclass(frozen=True)
class BasesOracle:
    ground_size: int
    rank: int
    is_base: Callable[[frozenset[int]], bool]

    def bases(self) -> list[frozenset[int]]:
        return [
            frozenset(c)
            for c in combinations(range(1, self.ground_size + 1), self.rank)
            if self.is_base(frozenset(c))
        ]


@dataclass(frozen=True)
class LinearOrder:
    """ranking[p] is the (p+1)-st smallest ground element."""

    ranking: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "ranking", tuple(self.ranking))
        if sorted(self.ranking) != list(range(1, len(self.ranking) + 1)):
            raise ValueError("ranking must be a permutation of 1..m")
        object.__setattr__(
            self,
            "rank_of",
            {e: p for p, e in enumerate(self.ranking)},
        )

    def precedes(self, a: int, b: int) -> bool:
        return self.rank_of[a] < self.rank_of[b]

    def smaller_than(self, e: int) -> tuple[int, ...]:
        return self.ranking[: self.rank_of[e]]

    def transpose_adjacent(self, a: int, b: int) -> "LinearOrder":
        pa, pb = self.rank_of[a], self.rank_of[b]
        if abs(pa - pb) != 1:
            raise ValueError("elements are not adjacent in the order")
        ranking = list(self.ranking)
        ranking[pa], ranking[pb] = ranking[pb], ranking[pa]
        return LinearOrder(tuple(ranking))


def natural_order(m: int) -> LinearOrder:
    return LinearOrder(tuple(range(1, m + 1)))


def reversed_order(m: int) -> LinearOrder:
    return LinearOrder(tuple(range(m, 0, -1)))


def lpm_oracle(region: Region) -> BasesOracle:
    """Bases are the y-subsets of [x+y] that are the north-step positions of
    some path in the region."""
    x, y = region.x, region.y

    def is_base(subset: frozenset[int]) -> bool:
        if len(subset) != y:
            return False
        try:
            path = path_from_north_set(x, y, frozenset(subset))
        except Exception:
            return False
        return contains(region, path)

    return BasesOracle(x + y, y, is_base)


def uniform_oracle(rank: int, ground_size: int) -> BasesOracle:
    return BasesOracle(ground_size, rank, lambda s: len(s) == rank)


def is_active(oracle: BasesOracle, base: frozenset[int], order: LinearOrder, e: int) -> bool:
    """No smaller element can be exchanged with e to give another base.

    Covers both cases: e in the base (internal) and e outside (external).
    """
    inside = e in base
    for f in order.smaller_than(e):
        if (f in base) == inside:
            continue
        swapped = base - {e} | {f} if inside else base - {f} | {e}
        if oracle.is_base(frozenset(swapped)):
            return False
    return True


def active_elements(
    oracle: BasesOracle, base: frozenset[int], order: LinearOrder
) -> tuple[frozenset[int], frozenset[int]]:
    """(internally active, externally active) element sets."""
    if not oracle.is_base(base):
        raise ValueError("not a base")
    ground = range(1, oracle.ground_size + 1)
    internal = frozenset(e for e in base if is_active(oracle, base, order, e))
    external = frozenset(
        e for e in ground if e not in base and is_active(oracle, base, order, e)
    )
    return internal, external


def activities(
    oracle: BasesOracle, base: frozenset[int], order: LinearOrder
) -> tuple[int, int]:
    internal, external = active_elements(oracle, base, order)
    return len(internal), len(external)


def tutte_poly(oracle: BasesOracle, order: LinearOrder) -> MultiPoly:
    """Generating polynomial x^(internal activity) y^(external activity)
    over all bases."""
    poly = MultiPoly.zero(("x", "y"))
    for base in oracle.bases():
        i, e = activities(oracle, base, order)
        poly = poly.add_monomial((i, e))
    return poly


def strong_exchange(
    oracle: BasesOracle, c_base: frozenset[int], d_base: frozenset[int], d: int
) -> int:
    """First element c of C minus D with both C-c+d and D-d+c bases."""
    if d not in d_base or d in c_base:
        raise ValueError("d must lie in D and not in C")
    for c in sorted(c_base - d_base):
        if oracle.is_base(c_base - {c} | {d}) and oracle.is_base(d_base - {d} | {c}):
            return c
    raise ValueError("strong exchange failed: oracle is not a matroid")


def phi_xy(
    oracle: BasesOracle,
    order: LinearOrder,
    x: int,
    y: int,
    base: frozenset[int],
) -> frozenset[int]:
    """Activity-preserving base bijection for transposing the adjacent pair
    x before y in the order."""
    if not order.precedes(x, y) or abs(order.rank_of[x] - order.rank_of[y]) != 1:
        raise ValueError("x must immediately precede y in the order")
    if (x in base) == (y in base):
        return base
    swapped = frozenset(base ^ {x, y})
    if not oracle.is_base(swapped):
        return base
    order_prime = order.transpose_adjacent(x, y)
    if is_active(oracle, base, order, x) or is_active(oracle, base, order_prime, y):
        return swapped
    return base


def bubble_steps(from_order: LinearOrder, to_order: LinearOrder):
    """Adjacent transpositions taking one order to the other, always fixing
    the leftmost out-of-place pair (bubble sort on the target ranking)."""
    target = {e: p for p, e in enumerate(to_order.ranking)}
    cur = list(from_order.ranking)
    steps = []
    changed = True
    while changed:
        changed = False
        for p in range(len(cur) - 1):
            if target[cur[p]] > target[cur[p + 1]]:
                steps.append((cur[p], cur[p + 1]))
                cur[p], cur[p + 1] = cur[p + 1], cur[p]
                changed = True
                break
    return steps


def reorder_bijection(
    oracle: BasesOracle,
    from_order: LinearOrder,
    to_order: LinearOrder,
    base: frozenset[int],
) -> frozenset[int]:
    """Compose the adjacent-step bijection along the bubble path between the
    two orders; activities with respect to the target order match the
    original activities with respect to the source order."""
    cur_order = from_order
    cur_base = base
    for x, y in bubble_steps(from_order, to_order):
        cur_base = phi_xy(oracle, cur_order, x, y, cur_base)
        cur_order = cur_order.transpose_adjacent(x, y)
    assert cur_order == to_order
    return cur_base


def left_contact_positions(region: Region, path: Path) -> frozenset[int]:
    """String positions of the north steps shared with the top boundary."""
    shared = north_edges(path) & north_edges(region.top)
    positions = []
    pos = 0
    prev = 0
    cx = 0
    for h in path.heights:
        for v in range(prev, h):
            pos += 1
            if (cx, v) in shared:
                positions.append(pos)
        pos += 1
        cx += 1
        prev = h
    for v in range(prev, path.y):
        pos += 1
        if (cx, v) in shared:
            positions.append(pos)
    return frozenset(positions)


def bottom_contact_positions(region: Region, path: Path) -> frozenset[int]:
    """String positions of the east steps shared with the bottom boundary."""
    positions = []
    pos = 0
    prev = 0
    for col, h in enumerate(path.heights):
        pos += h - prev
        pos += 1
        if h == region.b_heights[col]:
            positions.append(pos)
        prev = h
    return frozenset(positions)


def bltr_single_path(region: Region, path: Path) -> Path:
    """Map a path with bottom/left contact counts (e, f) to one with
    top/right counts (e, f), by changing the activity order of the lattice
    path matroid from the natural order to its reversal."""
    if not path.is_monotone or not contains(region, path):
        raise ValueError("need a monotone path inside the region")
    m = region.x + region.y
    oracle = lpm_oracle(region)
    base = north_index_set(path)
    image = reorder_bijection(oracle, natural_order(m), reversed_order(m), base)
    return path_from_north_set(region.x, region.y, image)
