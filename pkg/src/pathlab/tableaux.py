"""Young shapes, flagged tableaux, and the weight-preserving bijection
between nested path tuples and flagged semistandard tableaux.

The bijection starts from a direct cell-filling of a tuple and repairs its
ordering defects one local move at a time; the moves are invertible, so the
whole pipeline is too.  Entries at most k+1 are called small, larger ones
large; a large entry equal to k+r in row r is maximal.
"""

from __future__ import annotations

from dataclasses import dataclass

from .paths import Path, Region
from .polynomials import MultiPoly, h_complete, poly_determinant
from .tuples import PathTuple, h_stats, u_stats

Cell = tuple[int, int]


@dataclass(frozen=True)
class YoungShape:
    """Weakly decreasing row lengths; trailing zero rows are meaningful and
    record empty rows of the ambient region."""

    parts: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "parts", tuple(self.parts))
        if any(a < b for a, b in zip(self.parts, self.parts[1:])):
            raise ValueError("row lengths must weakly decrease")
        if any(p < 0 for p in self.parts):
            raise ValueError("row lengths must be nonnegative")

    @property
    def rows(self) -> int:
        return len(self.parts)

    @property
    def width(self) -> int:
        return self.parts[0] if self.parts else 0

    def cells(self):
        for r, length in enumerate(self.parts, start=1):
            for c in range(1, length + 1):
                yield (r, c)


def shape_from_region(region: Region) -> YoungShape:
    """Row lengths of the cell diagram between the boundaries, top row
    first.  Requires the top boundary to run all norths then all easts."""
    y = region.y
    if any(t != y for t in region.t_heights):
        raise ValueError("top boundary must be of the form N^y E^x")
    parts = tuple(
        sum(1 for b in region.b_heights if b <= y - r) for r in range(1, y + 1)
    )
    return YoungShape(parts)


def region_of_shape(shape: YoungShape) -> Region:
    """The region whose cell diagram is the shape: full-height top boundary,
    bottom boundary read off the column lengths."""
    y = shape.rows
    x = shape.width
    col_lengths = [sum(1 for p in shape.parts if p >= c) for c in range(1, x + 1)]
    bottom = Path(tuple(y - cl for cl in col_lengths), y)
    top = Path((y,) * x, y)
    return Region(top, bottom)


@dataclass(frozen=True)
class Tableau:
    rows: tuple[tuple[int, ...], ...]
    k: int

    def __post_init__(self):
        object.__setattr__(self, "rows", tuple(tuple(r) for r in self.rows))
        YoungShape(tuple(len(r) for r in self.rows))

    @property
    def shape(self) -> YoungShape:
        return YoungShape(tuple(len(r) for r in self.rows))

    def entry(self, r: int, c: int) -> int | None:
        """1-based lookup; None when the cell is outside the shape."""
        if 1 <= r <= len(self.rows) and 1 <= c <= len(self.rows[r - 1]):
            return self.rows[r - 1][c - 1]
        return None

    def with_entries(self, changes: dict[Cell, int]) -> "Tableau":
        rows = [list(r) for r in self.rows]
        for (r, c), v in changes.items():
            rows[r - 1][c - 1] = v
        return Tableau(tuple(tuple(r) for r in rows), self.k)

    def is_small(self, e: int) -> bool:
        return e <= self.k + 1

    def is_maximal(self, r: int, e: int) -> bool:
        return e == self.k + r

    def text(self) -> str:
        return "\n".join(" ".join(str(v) for v in row) for row in self.rows if row)

    @classmethod
    def parse(cls, text: str, k: int) -> "Tableau":
        rows = tuple(
            tuple(int(v) for v in line.split())
            for line in text.strip().splitlines()
            if line.strip()
        )
        return cls(rows, k)


def weight(t: Tableau) -> tuple[int, ...]:
    """Multiplicities of the entries 1 .. k + number of rows."""
    top = t.k + len(t.rows)
    counts = [0] * top
    for row in t.rows:
        for e in row:
            counts[e - 1] += 1
    return tuple(counts)


def potential(t: Tableau) -> int:
    return sum(
        (r + c) * e
        for r, row in enumerate(t.rows, start=1)
        for c, e in enumerate(row, start=1)
    )


def _chain_exists(t: Tableau, a: Cell, b: Cell) -> bool:
    """Reachability sweep for the equal-small-entries condition: from cell a
    one must be able to step down row by row, never moving west, through
    cells bounded by their northeast neighbour, ending strictly west of b."""
    (r1, c1), (r2, c2) = a, b
    reach = c1
    for r in range(r1 + 1, r2 + 1):
        best = None
        for c in range(reach, len(t.rows[r - 1]) + 1):
            ne = t.entry(r - 1, c + 1)
            if ne is not None and t.rows[r - 1][c - 1] <= ne:
                best = c
                break
        if best is None:
            return False
        reach = best
    return reach < c2


def perflagged_violations(t: Tableau) -> list[str]:
    """Reasons the tableau fails the relaxed flagged-tableau conditions;
    empty when it satisfies them."""
    problems = []
    k = t.k
    for r, row in enumerate(t.rows, start=1):
        for c, e in enumerate(row, start=1):
            if e < 1:
                problems.append(f"entry at ({r},{c}) is not positive")
            if e > k + r:
                problems.append(f"entry {e} at ({r},{c}) exceeds flag bound {k + r}")
    cells = list(t.shape.cells())
    for r, c in cells:
        e1 = t.rows[r - 1][c - 1]
        for c2 in range(c + 1, len(t.rows[r - 1]) + 1):
            e2 = t.rows[r - 1][c2 - 1]
            if t.is_small(e1) == t.is_small(e2) and e1 > e2:
                problems.append(f"row {r}: same-class entries decrease at columns {c},{c2}")
    for r1, c1 in cells:
        e1 = t.rows[r1 - 1][c1 - 1]
        for r2 in range(r1 + 1, len(t.rows) + 1):
            for c2 in range(c1, len(t.rows[r2 - 1]) + 1):
                e2 = t.rows[r2 - 1][c2 - 1]
                if t.is_small(e1) and t.is_small(e2):
                    if e1 > e2:
                        problems.append(
                            f"small entries decrease from ({r1},{c1}) to ({r2},{c2})"
                        )
                    elif e1 == e2 and not _chain_exists(t, (r1, c1), (r2, c2)):
                        problems.append(
                            f"equal small entries at ({r1},{c1}) and ({r2},{c2}) lack a chain"
                        )
                elif not t.is_small(e1) and not t.is_small(e2) and e1 >= e2:
                    problems.append(
                        f"large entries fail to increase from ({r1},{c1}) to ({r2},{c2})"
                    )
    return problems


def is_perflagged(t: Tableau) -> bool:
    return not perflagged_violations(t)


def is_flagged_ssyt(t: Tableau) -> bool:
    for r, row in enumerate(t.rows, start=1):
        for c, e in enumerate(row, start=1):
            if not 1 <= e <= t.k + r:
                return False
            if c > 1 and row[c - 2] > e:
                return False
            above = t.entry(r - 1, c)
            if above is not None and above >= e:
                return False
    return True


@dataclass(frozen=True)
class Violations:
    semistandard: tuple[Cell, ...]
    minimal: Cell | None
    path: tuple[Cell, ...]
    maximal: Cell | None


def find_violations(t: Tableau) -> Violations:
    """Cells breaking the semistandard order, and cells whose neighbourhood
    betrays a misplaced large entry.

    The minimal semistandard violation has the smallest entry, ties broken
    by the leftmost column; the maximal path violation has the largest
    entry, ties broken by the rightmost column.
    """
    ssv = []
    pv = []
    for r, row in enumerate(t.rows, start=1):
        for c, e in enumerate(row, start=1):
            above = t.entry(r - 1, c)
            left = t.entry(r, c - 1)
            if (above is not None and above >= e) or (left is not None and left > e):
                ssv.append((r, c))
            if t.is_small(e):
                below = t.entry(r + 1, c)
                if below is not None and not t.is_small(below) and not t.is_maximal(r + 1, below):
                    pv.append((r, c))
                    continue
                right = t.entry(r, c + 1)
                if right is not None and not t.is_small(right):
                    column_smalls = [
                        t.rows[rr - 1][c]
                        for rr in range(1, r + 1)
                        if t.is_small(t.rows[rr - 1][c])
                    ]
                    if all(v < e for v in column_smalls):
                        pv.append((r, c))

    def entry_at(cell: Cell) -> int:
        return t.rows[cell[0] - 1][cell[1] - 1]

    minimal = min(ssv, key=lambda cell: (entry_at(cell), cell[1]), default=None)
    maximal = max(pv, key=lambda cell: (entry_at(cell), cell[1]), default=None)
    if minimal is not None:
        ties = [c for c in ssv if entry_at(c) == entry_at(minimal) and c[1] == minimal[1]]
        assert len(ties) == 1, "minimal semistandard violation must be unique"
    if maximal is not None:
        ties = [c for c in pv if entry_at(c) == entry_at(maximal) and c[1] == maximal[1]]
        assert len(ties) == 1, "maximal path violation must be unique"
    return Violations(tuple(ssv), minimal, tuple(pv), maximal)


def j_move(t: Tableau) -> Tableau:
    """Swap the minimal semistandard violation with its upper or left
    neighbour, whichever restores local order."""
    v = find_violations(t)
    if v.minimal is None:
        raise ValueError("no semistandard violation to correct")
    r, c = v.minimal
    e = t.rows[r - 1][c - 1]
    e_a = t.entry(r - 1, c) or 0
    e_l = t.entry(r, c - 1) or 0
    if e_l > e_a:
        return t.with_entries({(r, c): e_l, (r, c - 1): e})
    return t.with_entries({(r, c): e_a, (r - 1, c): e})


def j_inv_move(t: Tableau) -> Tableau:
    """Inverse move: swap the maximal path violation with the smaller of the
    large entries below or to its right (below on ties)."""
    v = find_violations(t)
    if v.maximal is None:
        raise ValueError("no path violation to correct")
    r, c = v.maximal
    f = t.rows[r - 1][c - 1]
    f_b = t.entry(r + 1, c)
    f_r = t.entry(r, c + 1)
    b_large = f_b is not None and not t.is_small(f_b)
    r_large = f_r is not None and not t.is_small(f_r)
    if b_large and (not r_large or f_b <= f_r):
        return t.with_entries({(r, c): f_b, (r + 1, c): f})
    if r_large:
        return t.with_entries({(r, c): f_r, (r, c + 1): f})
    raise AssertionError("path violation without a large neighbour")


def tab_of_tuple(pt: PathTuple) -> Tableau:
    """Direct filling: each cell takes one more than the index of the lowest
    path whose east step bounds it above (the top boundary counts as index
     0); uncovered cells in row r take the maximal value k+r."""
    region = pt.region
    shape = shape_from_region(region)
    if shape.width != region.x:
        raise ValueError("bottom boundary touches the top edge; no cell column there")
    y, k = region.y, pt.k
    chain = (region.top,) + pt.paths
    rows = []
    for r in range(1, y + 1):
        row = []
        for c in range(1, shape.parts[r - 1] + 1):
            edge_height = y - r + 1
            best = None
            for i, p in enumerate(chain):
                if p.heights[c - 1] == edge_height:
                    best = i
            row.append(best + 1 if best is not None else k + r)
        rows.append(tuple(row))
    return Tableau(tuple(rows), k)


def tuple_of_tab(t: Tableau) -> PathTuple:
    """Inverse of the direct filling; defined on tableaux without path
    violations."""
    v = find_violations(t)
    if v.path:
        raise ValueError("tableau has path violations")
    shape = t.shape
    region = region_of_shape(shape)
    y, k = region.y, t.k
    x = region.x
    heights = [[0] * x for _ in range(k)]
    for c in range(1, x + 1):
        smalls = [
            (t.rows[r - 1][c - 1], r)
            for r in range(1, len(t.rows) + 1)
            if c <= len(t.rows[r - 1]) and t.is_small(t.rows[r - 1][c - 1])
        ]
        boundary = 1
        for e, r in smalls:
            for p in range(boundary, e):
                heights[p - 1][c - 1] = y - r + 1
            boundary = max(boundary, e)
        for p in range(boundary, k + 1):
            heights[p - 1][c - 1] = region.b_heights[c - 1]
    paths = tuple(Path(tuple(h), y) for h in heights)
    return PathTuple(region, paths)


def expected_weight(pt: PathTuple) -> tuple[int, ...]:
    """The weight the bijection must produce: column count minus each
    coincidence statistic, then the unused-edge counts."""
    lam1 = shape_from_region(pt.region).width
    return tuple(lam1 - h for h in h_stats(pt)) + u_stats(pt)


def psi(pt: PathTuple, check: bool = False) -> Tableau:
    """Repair the direct filling into a flagged semistandard tableau by
    repeated local moves; weight is preserved throughout."""
    t = tab_of_tuple(pt)
    w = weight(t)
    while True:
        v = find_violations(t)
        if v.minimal is None:
            break
        if check:
            t = _checked_j_move(t, v)
        else:
            t = j_move(t)
    assert weight(t) == w
    if check:
        assert is_flagged_ssyt(t)
    return t


def _checked_j_move(t: Tableau, v: Violations) -> Tableau:
    r, c = v.minimal
    e = t.rows[r - 1][c - 1]

    def pv_at_least(tab: Tableau, bound: int) -> set[Cell]:
        found = find_violations(tab)
        return {
            cell for cell in found.path if tab.rows[cell[0] - 1][cell[1] - 1] >= bound
        }

    before = pv_at_least(t, e)
    new = j_move(t)
    moved_to = next(
        cell
        for cell in ((r - 1, c), (r, c - 1))
        if new.entry(*cell) == e and t.entry(*cell) != e
    )
    assert potential(new) > potential(t)
    assert not perflagged_violations(new)
    after_v = find_violations(new)
    assert pv_at_least(new, e) - before == {moved_to}
    assert after_v.maximal == moved_to
    return new


def psi_inv(t: Tableau, check: bool = False) -> PathTuple:
    """Inverse repair: undo local moves until the direct filling reappears,
    then read the paths off its columns."""
    cells = sum(len(r) for r in t.rows)
    cap = (len(t.rows) + t.shape.width) * (t.k + len(t.rows)) * max(cells, 1)
    for _ in range(cap + 1):
        v = find_violations(t)
        if v.maximal is None:
            return tuple_of_tab(t)
        new = j_inv_move(t)
        assert potential(new) < potential(t)
        if check:
            assert not perflagged_violations(new)
        t = new
    raise AssertionError("inverse move iteration exceeded its bound")


def easy_bijection(pt: PathTuple) -> Tableau:
    """Cardinality witness: fill each cell with the number of tuple paths
    passing weakly above it, then add the row index everywhere."""
    region = pt.region
    shape = shape_from_region(region)
    y = region.y
    rows = []
    for r in range(1, y + 1):
        edge = y - r + 1
        rows.append(
            tuple(
                sum(1 for p in pt.paths if p.heights[c - 1] >= edge) + r
                for c in range(1, shape.parts[r - 1] + 1)
            )
        )
    return Tableau(tuple(rows), pt.k)


def enumerate_flagged_ssyt(shape: YoungShape, k: int):
    """All semistandard fillings with row r bounded by k+r (brute force)."""
    parts = [p for p in shape.parts if p > 0]
    rows: list[list[int]] = [[0] * p for p in parts]

    def rec(r: int, c: int):
        if r == len(parts):
            yield Tableau(tuple(tuple(row) for row in rows), k)
            return
        nr, nc = (r, c + 1) if c + 1 < parts[r] else (r + 1, 0)
        lo = 1
        if c > 0:
            lo = max(lo, rows[r][c - 1])
        if r > 0:
            lo = max(lo, rows[r - 1][c] + 1)
        for e in range(lo, k + r + 2):
            rows[r][c] = e
            yield from rec(nr, nc)
        rows[r][c] = 0

    if not parts:
        yield Tableau((), k)
        return
    yield from rec(0, 0)


def flagged_schur(shape: YoungShape, k: int, nvars: int) -> MultiPoly:
    """Weight generating polynomial of the flagged semistandard tableaux of
    the shape, expanded exactly from its determinantal form."""
    parts = [p for p in shape.parts if p > 0]
    ell = len(parts)
    if nvars < k + ell:
        raise ValueError("need at least k + number of parts variables")
    variables = tuple(f"x{i}" for i in range(1, nvars + 1))
    if ell == 0:
        return MultiPoly.one(variables)
    matrix = [
        [
            h_complete(parts[i - 1] - i + j, min(k + i, nvars), variables)
            for j in range(1, ell + 1)
        ]
        for i in range(1, ell + 1)
    ]
    return poly_determinant(matrix)
