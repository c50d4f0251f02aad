"""Consequences of the contact symmetries: counting corollaries and closed
formulas, a bijection with permutations, watermelon configurations, and two
finite conjecture checkers."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from math import comb

from .enumeration import enumerate_paths, path_distribution
from .paths import Path, Region, contact_stats, vertices
from .swaps import contact_word
from .tuples import PathTuple


def binom(a: int, b: int) -> int:
    """Path-counting convention: choosing nothing is always one way, and a
    negative pool admits no positive choice."""
    if b < 0:
        return 0
    if b == 0:
        return 1
    if a < 0 or b > a:
        return 0
    return comb(a, b)


# ---------------------------------------------------------------------------
# contact-count corollaries


@dataclass(frozen=True)
class IJReport:
    cond_counts: bool
    cond_order: bool
    cond_boundary: bool

    @property
    def agree(self) -> bool:
        return self.cond_counts == self.cond_order == self.cond_boundary


def _counts_depend_on_sum(counts: dict[tuple[int, int], int], bound: int) -> bool:
    for total in range(0, 2 * bound + 1):
        values = {
            counts.get((i, total - i), 0)
            for i in range(0, bound + 1)
            if 0 <= total - i <= bound
        }
        if len(values) > 1:
            return False
    return True


def corollary_ij_check(region: Region) -> IJReport:
    """Three equivalent characterizations of regions whose (top, bottom)
    contact counts depend only on their sum.

    The ordering condition treats an east step shared by both boundaries as
    a bottom contact not preceding a top contact, which keeps the three
    conditions equivalent on degenerate regions.
    """
    counts: dict[tuple[int, int], int] = {}
    order_ok = True
    shared = any(t == b for t, b in zip(region.t_heights, region.b_heights))
    for p in enumerate_paths(region):
        st = contact_stats(region, p)
        counts[(st.t, st.b)] = counts.get((st.t, st.b), 0) + 1
        if "tb" in contact_word(region, p):
            order_ok = False
    cond_counts = _counts_depend_on_sum(counts, region.x + 1)
    cond_order = order_ok and not shared
    if region.x == 0:
        cond_boundary = True
    else:
        cond_boundary = region.b_heights[-1] < region.t_heights[0]
    report = IJReport(cond_counts, cond_order, cond_boundary)
    assert report.agree, f"conditions disagree on {region}"
    return report


def easy_bottom_count(region: Region, i: int, j: int) -> int:
    """Paths with i top and j bottom contacts, counted by the reduction to
    paths into a smaller rectangle above the truncated bottom boundary."""
    y = region.y
    if any(t != y for t in region.t_heights):
        raise ValueError("top boundary must be of the form N^y E^x")
    if region.b_heights and region.b_heights[-1] == y:
        raise ValueError("bottom boundary must end with a north step")
    c = i + j
    width = region.x - c
    if width < 0:
        return 0
    if y < 2:
        return 1 if width == 0 else 0
    bounds = region.b_heights[:width]
    if any(b > y - 2 for b in bounds):
        return 0

    def count(col: int, prev: int) -> int:
        if col == width:
            return 1
        return sum(
            count(col + 1, h) for h in range(max(prev, bounds[col]), y - 1)
        )

    return count(0, 0)


# ---------------------------------------------------------------------------
# closed formulas and their boundary families


def case1_region(n: int, r: int, s: int) -> Region:
    top = "N" * (n + r) + "E" * (n + s)
    bottom = "E" * s + "NE" * n + "N" * r
    return Region.from_steps(top, bottom)


def case2_region(n: int, r: int, k: int) -> Region:
    top = "N" * (k * n + r) + "E" * (n + 1)
    bottom = "E" + ("N" * k + "E") * n + "N" * r
    return Region.from_steps(top, bottom)


def andre_barbier_count(case: int, params: tuple[int, ...]) -> int:
    """Exact path counts for the two boundary families with closed formulas."""
    if case == 1:
        n, r, s = params
        return binom(2 * n + r + s, n + s) - binom(2 * n + r + s, n - 1)
    if case == 2:
        n, r, k = params
        num = (r + 1) * binom(r + (n + 1) * (k + 1), n)
        assert num % (n + 1) == 0
        return num // (n + 1)
    raise ValueError("case must be 1 or 2")


def contact_formula_count(case: int, params: tuple[int, ...], i: int, j: int) -> int:
    """Exact count of paths with i top and j bottom contacts in the closed
    formula families; requires a positive trailing north run."""
    c = i + j
    if case == 1:
        n, r, s = params
        if r <= 0:
            raise ValueError("requires r > 0")
        return binom(2 * n + r + s - c - 2, n + s - c) - binom(
            2 * n + r + s - c - 2, n - 1 - c
        )
    if case == 2:
        n, r, k = params
        if r <= 0:
            raise ValueError("requires r > 0")
        if c > n + 1:
            return 0
        if c == n + 1:
            return 1
        num = (k * c + r - 1) * binom(r - c - 2 + (n + 1) * (k + 1), n - c)
        assert num % (n - c + 1) == 0
        return num // (n - c + 1)
    raise ValueError("case must be 1 or 2")


def direct_contact_count(region: Region, i: int, j: int, south_allowed: bool = False) -> int:
    return sum(
        1
        for p in enumerate_paths(region, south_allowed)
        if contact_stats(region, p).t == i and contact_stats(region, p).b == j
    )


# ---------------------------------------------------------------------------
# permutations


def dyck_region(n: int) -> Region:
    return Region.from_steps("N" * n + "E" * n, "NE" * n)


def perm_of_path(path: Path) -> tuple[int, ...]:
    """Read a permutation off a path in the staircase region: the i-th value
    is chosen by the height of the i-th east step among the unused values."""
    n = path.x
    if path.y != n:
        raise ValueError("need a path in the n-by-n staircase region")
    remaining = list(range(1, n + 1))
    out = []
    for y_i in path.heights:
        p_i = n + 1 - y_i
        if not 1 <= p_i <= len(remaining):
            raise ValueError("path leaves the staircase region")
        out.append(remaining.pop(p_i - 1))
    return tuple(out)


def path_of_perm(perm: tuple[int, ...]) -> Path:
    """Inverse reading: heights record the rank of each value among the
    values not yet placed."""
    n = len(perm)
    if sorted(perm) != list(range(1, n + 1)):
        raise ValueError("not a permutation in one-line notation")
    remaining = list(range(1, n + 1))
    heights = []
    for v in perm:
        p_i = remaining.index(v) + 1
        heights.append(n + 1 - p_i)
        remaining.pop(p_i - 1)
    return Path(tuple(heights), n)


def perm_stats(perm: tuple[int, ...]) -> tuple[int, int, frozenset[int]]:
    """(right-to-left minima, right-to-left maxima, positions i where some
    later value falls strictly between the entries at i and i+1)."""
    n = len(perm)
    rl_min = sum(
        all(perm[i] < perm[j] for j in range(i + 1, n)) for i in range(n)
    )
    rl_max = sum(
        all(perm[i] > perm[j] for j in range(i + 1, n)) for i in range(n)
    )
    positions = frozenset(
        i + 1
        for i in range(n - 1)
        if any(perm[i] < perm[j] < perm[i + 1] for j in range(i + 2, n))
    )
    return rl_min, rl_max, positions


# ---------------------------------------------------------------------------
# watermelon configurations


@dataclass(frozen=True)
class Watermelon:
    """k vertex-disjoint up/down paths, the i-th starting at (0, 2i) and
    ending at (x, y + 2i), none dipping below the axis.  Steps are +-1,
    bottom path first."""

    steps: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        object.__setattr__(self, "steps", tuple(tuple(s) for s in self.steps))
        if not self.steps:
            raise ValueError("a watermelon needs at least one path")
        x = len(self.steps[0])
        if any(len(s) != x for s in self.steps):
            raise ValueError("paths must share their length")
        if any(abs(v) != 1 for s in self.steps for v in s):
            raise ValueError("steps must be +1 or -1")
        devs = {sum(s) for s in self.steps}
        if len(devs) != 1:
            raise ValueError("paths must share their deviation")
        prev = None
        for idx, s in enumerate(self.steps):
            height = 2 * idx
            trace = [height]
            for v in s:
                height += v
                trace.append(height)
            if idx == 0 and min(trace) < 0:
                raise ValueError("bottom path dips below the axis")
            if prev is not None and any(a <= b for a, b in zip(trace, prev)):
                raise ValueError("paths intersect")
            prev = trace

    @property
    def k(self) -> int:
        return len(self.steps)

    @property
    def x(self) -> int:
        return len(self.steps[0])

    @property
    def y(self) -> int:
        return sum(self.steps[0])

    def returns(self) -> int:
        """Down-steps of the bottom path that land on the axis."""
        height = 0
        hits = 0
        for v in self.steps[0]:
            height += v
            if v == -1 and height == 0:
                hits += 1
        return hits


def watermelon_region(x: int, y: int) -> Region:
    if (x + y) % 2:
        raise ValueError("length and deviation must have equal parity")
    m = (x - y) // 2
    top = "N" * ((x + y) // 2) + "E" * m
    bottom = "NE" * m + "N" * y
    return Region.from_steps(top, bottom)


def watermelon_to_tuple(w: Watermelon) -> PathTuple:
    """Up steps become norths, down steps easts; the top path of the
    configuration becomes the first path of the tuple."""
    region = watermelon_region(w.x, w.y)
    paths = []
    for s in reversed(w.steps):
        heights = []
        norths = 0
        for v in s:
            if v == 1:
                norths += 1
            else:
                heights.append(norths)
        paths.append(Path(tuple(heights), region.y))
    return PathTuple(region, tuple(paths))


def tuple_to_watermelon(pt: PathTuple) -> Watermelon:
    region = pt.region
    x = region.x + region.y
    y = region.y - region.x
    if y < 0 or region != watermelon_region(x, y):
        raise ValueError("region does not arise from a watermelon configuration")
    steps = []
    for p in reversed(pt.paths):
        walk = []
        prev = 0
        for h in p.heights:
            walk.extend([1] * (h - prev))
            walk.append(-1)
            prev = h
        walk.extend([1] * (p.y - prev))
        steps.append(tuple(walk))
    return Watermelon(tuple(steps))


def enumerate_watermelons(x: int, y: int, k: int):
    """Brute-force stream of configurations of given length and deviation."""
    if (x + y) % 2 or y < 0:
        return
    ups = (x + y) // 2

    def single_paths(base: int, floor: int):
        out = []
        for pattern in product((1, -1), repeat=x):
            if sum(1 for v in pattern if v == 1) != ups:
                continue
            height = base
            trace = [height]
            ok = True
            for v in pattern:
                height += v
                if height < floor:
                    ok = False
                    break
                trace.append(height)
            if ok:
                out.append((pattern, tuple(trace)))
        return out

    layers = [single_paths(2 * i, 0 if i == 0 else -(10 * x)) for i in range(k)]

    def rec(idx: int, acc, prev_trace):
        if idx == k:
            yield Watermelon(tuple(acc))
            return
        for pattern, trace in layers[idx]:
            if prev_trace is None or all(a > b for a, b in zip(trace, prev_trace)):
                yield from rec(idx + 1, acc + [pattern], trace)

    yield from rec(0, [], None)


def count_brak_essam_families(x: int, y: int, k: int, e: int) -> int:
    """Families whose lower k-1 paths form a configuration of the full
    length while the top path stops at (x-e-1, y+2k+e-3), all disjoint."""
    top_len = x - e - 1
    top_end = y + 2 * k + e - 3
    if top_len < 0 or (top_len + top_end - 2 * (k - 1)) % 2:
        return 0
    ups = (top_len + top_end - 2 * (k - 1)) // 2
    if ups < 0 or ups > top_len:
        return 0

    def top_paths(floor_trace):
        count = 0
        for pattern in product((1, -1), repeat=top_len):
            if sum(1 for v in pattern if v == 1) != ups:
                continue
            height = 2 * (k - 1)
            ok = True
            trace = [height]
            for v in pattern:
                height += v
                trace.append(height)
                if height < 0:
                    ok = False
                    break
            if not ok:
                continue
            if floor_trace is not None and any(
                a <= b for a, b in zip(trace, floor_trace[: top_len + 1])
            ):
                continue
            count += 1
        return count

    if k == 1:
        return top_paths(None)
    total = 0
    for melon in enumerate_watermelons(x, y, k - 1):
        trace = [2 * (k - 2)]
        height = trace[0]
        for v in melon.steps[-1]:
            height += v
            trace.append(height)
        total += top_paths(trace)
    return total


def brak_essam_counts(x: int, y: int, k: int) -> tuple[dict[int, int], dict[int, int]]:
    """(returns distribution, truncated-family counts) for every e."""
    lhs: dict[int, int] = {}
    for melon in enumerate_watermelons(x, y, k):
        lhs[melon.returns()] = lhs.get(melon.returns(), 0) + 1
    rhs = {e: count_brak_essam_families(x, y, k, e) for e in range(0, x + 1)}
    rhs = {e: v for e, v in rhs.items() if v}
    return lhs, rhs


def find_tbl_btr_counterexample(max_semi: int) -> Region | None:
    """First region where the triple distributions (t, b, l) and (b, t, r)
    differ; None if the sweep finds none.  The involution machinery only
    exchanges the pair, so small counterexamples to the triple exist."""
    from .verify import all_regions

    for region in all_regions(max_semi):
        lhs = path_distribution(region, ["t", "b", "l"])
        rhs = path_distribution(region, ["b", "t", "r"])
        if lhs != rhs:
            return region
    return None


# ---------------------------------------------------------------------------
# conjecture checkers


@dataclass(frozen=True)
class ConjectureReport:
    holds: bool
    regions_checked: int
    counterexample: str | None


def _monotone_paths(x: int, y: int) -> list[Path]:
    out = []

    def rec(col: int, prev: int, acc: tuple[int, ...]):
        if col == x:
            out.append(Path(acc, y))
            return
        for h in range(prev, y + 1):
            rec(col + 1, h, acc + (h,))

    rec(0, 0, ())
    return out


def regions_touching_only_at_ends(n: int) -> list[Region]:
    paths = _monotone_paths(n, n)
    ends = {(0, 0), (n, n)}
    regions = []
    for top in paths:
        for bottom in paths:
            if any(t < b for t, b in zip(top.heights, bottom.heights)):
                continue
            if vertices(top) & vertices(bottom) != ends:
                continue
            regions.append(Region(top, bottom))
    return regions


def _staircase_ne(n: int) -> tuple[int, ...]:
    return tuple(range(1, n + 1))


def _staircase_en(n: int) -> tuple[int, ...]:
    return tuple(range(0, n))


def conjecture_52_check(n: int) -> ConjectureReport:
    """Equivalence of four pairwise distribution identities with the two
    staircase boundary shapes, over regions meeting only at their ends."""
    regions = regions_touching_only_at_ends(n)
    for region in regions:
        p_bl = path_distribution(region, ["b", "l"])
        p_bt = path_distribution(region, ["b", "t"])
        p_lr = path_distribution(region, ["l", "r"])
        p_tr = path_distribution(region, ["t", "r"])
        conds = [p_bl == p_bt, p_bl == p_lr, p_tr == p_bt, p_tr == p_lr]
        special = (
            region.t_heights == _staircase_ne(n)
            or region.b_heights == _staircase_en(n)
        )
        if any(c != special for c in conds):
            return ConjectureReport(False, len(regions), str(region))
    return ConjectureReport(True, len(regions), None)


def conjecture_53_check(n: int) -> ConjectureReport:
    """The (bottom, left) contact counts depend only on their sum exactly
    for the two fully staircase-against-corner regions."""
    regions = regions_touching_only_at_ends(n)
    full_top = (n,) * n
    full_bottom = (0,) * n
    for region in regions:
        counts: dict[tuple[int, int], int] = {}
        for p in enumerate_paths(region):
            st = contact_stats(region, p)
            counts[(st.b, st.l)] = counts.get((st.b, st.l), 0) + 1
        depends = _counts_depend_on_sum(counts, n + 1)
        special = (
            region.t_heights == full_top and region.b_heights == _staircase_en(n)
        ) or (
            region.t_heights == _staircase_ne(n) and region.b_heights == full_bottom
        )
        if depends != special:
            return ConjectureReport(False, len(regions), str(region))
    return ConjectureReport(True, len(regions), None)
