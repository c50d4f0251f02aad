"""Lattice paths with unit north/east (and optional south) steps, and the
region between an upper and a lower boundary path.

A path from (0,0) to (x,y) is stored as the sequence of y-coordinates of its
east steps.  The step string is derived: each vertical run is placed
immediately before the east step it precedes, and the final ascent to height
y comes last.  For monotone paths the height sequence is weakly increasing;
when south steps are allowed any in-range height sequence is legal.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache


class PathError(ValueError):
    """Raised when a step string does not describe a legal walk."""


class RegionError(ValueError):
    """Raised when two boundary paths do not bound a region."""


@dataclass(frozen=True)
class Path:
    """A lattice path encoded by the heights of its east steps.

    heights[i] is the y-coordinate of the (i+1)-st east step; y is the height
    of the endpoint.  Columns are 1-based throughout.
    """

    heights: tuple[int, ...]
    y: int

    def __post_init__(self):
        object.__setattr__(self, "heights", tuple(self.heights))
        if self.y < 0:
            raise PathError("endpoint height must be a natural number")
        for h in self.heights:
            if not 0 <= h <= self.y:
                raise PathError(f"east step height {h} outside [0, {self.y}]")

    @property
    def x(self) -> int:
        return len(self.heights)

    @property
    def is_monotone(self) -> bool:
        return all(a <= b for a, b in zip(self.heights, self.heights[1:]))

    def steps(self) -> str:
        """Canonical step string over {N, E, S}."""
        out = []
        prev = 0
        for h in self.heights:
            out.append(("N" if h > prev else "S") * abs(h - prev))
            out.append("E")
            prev = h
        out.append("N" * (self.y - prev))
        return "".join(out)

    def __str__(self) -> str:
        return self.steps()


def parse_path(text: str) -> Path:
    """Parse a step string over {N, E, S} into its height encoding.

    The walk must stay in the first quadrant, never traverse a lattice edge
    twice, and end no lower than its last east step (so that the trailing
    vertical run is an ascent).
    """
    cx, cy = 0, 0
    heights = []
    seen_edges = set()
    for i, ch in enumerate(text):
        if ch == "E":
            edge = ((cx, cy), (cx + 1, cy))
            cx += 1
            heights.append(cy)
        elif ch == "N":
            edge = ((cx, cy), (cx, cy + 1))
            cy += 1
        elif ch == "S":
            if cy == 0:
                raise PathError(f"walk leaves the first quadrant at step {i + 1}")
            edge = ((cx, cy - 1), (cx, cy))
            cy -= 1
        else:
            raise PathError(f"unexpected step character {ch!r}")
        if edge in seen_edges:
            raise PathError(f"walk revisits an edge at step {i + 1}")
        seen_edges.add(edge)
    if heights and cy < max(heights):
        raise PathError("endpoint height inconsistent with east step heights")
    return Path(tuple(heights), cy)


@lru_cache(maxsize=None)
def vertices(path: Path) -> frozenset[tuple[int, int]]:
    """All lattice points visited by the canonical walk of the path."""
    pts = {(0, 0)}
    cx, cy = 0, 0
    for h in path.heights:
        step = 1 if h >= cy else -1
        while cy != h:
            cy += step
            pts.add((cx, cy))
        cx += 1
        pts.add((cx, cy))
    while cy < path.y:
        cy += 1
        pts.add((cx, cy))
    return frozenset(pts)


@lru_cache(maxsize=None)
def north_edges(path: Path) -> frozenset[tuple[int, int]]:
    """Unit edges traversed northward, as (x, lower y) pairs."""
    edges = set()
    cx, prev = 0, 0
    for h in path.heights:
        if h > prev:
            edges.update((cx, v) for v in range(prev, h))
        cx += 1
        prev = h
    edges.update((cx, v) for v in range(prev, path.y))
    return frozenset(edges)


def descent_set(path: Path) -> frozenset[int]:
    """x-coordinates where the height sequence strictly drops."""
    h = path.heights
    return frozenset(i + 1 for i in range(len(h) - 1) if h[i] > h[i + 1])


def north_index_set(path: Path) -> frozenset[int]:
    """1-based positions of the north steps in the canonical step string.

    Only defined for monotone paths.
    """
    if not path.is_monotone:
        raise PathError("north step index set requires a monotone path")
    positions = []
    pos = 0
    prev = 0
    for h in path.heights:
        for _ in range(h - prev):
            pos += 1
            positions.append(pos)
        pos += 1
        prev = h
    for _ in range(path.y - prev):
        pos += 1
        positions.append(pos)
    return frozenset(positions)


def path_from_north_set(x: int, y: int, norths: frozenset[int]) -> Path:
    """Inverse of north_index_set for a path with x east and y north steps."""
    if len(norths) != y or not all(1 <= p <= x + y for p in norths):
        raise PathError("north index set must pick y positions in [1, x+y]")
    heights = []
    h = 0
    for pos in range(1, x + y + 1):
        if pos in norths:
            h += 1
        else:
            heights.append(h)
    return Path(tuple(heights), y)


@dataclass(frozen=True)
class ContactStats:
    t: int
    b: int
    l: int
    r: int

    def as_tuple(self) -> tuple[int, int, int, int]:
        return (self.t, self.b, self.l, self.r)


@dataclass(frozen=True)
class Region:
    """The set of paths weakly below a top boundary and weakly above a
    bottom boundary, both monotone paths from (0,0) to (x,y)."""

    top: Path
    bottom: Path

    def __post_init__(self):
        t, b = self.top, self.bottom
        if not (t.is_monotone and b.is_monotone):
            raise RegionError("boundaries must be monotone")
        if t.x != b.x or t.y != b.y:
            raise RegionError("boundaries must share their endpoint")
        for i, (th, bh) in enumerate(zip(t.heights, b.heights)):
            if th < bh:
                raise RegionError(
                    f"dominance violated at column {i + 1}: top {th} < bottom {bh}"
                )

    @property
    def x(self) -> int:
        return self.top.x

    @property
    def y(self) -> int:
        return self.top.y

    @property
    def t_heights(self) -> tuple[int, ...]:
        return self.top.heights

    @property
    def b_heights(self) -> tuple[int, ...]:
        return self.bottom.heights

    @classmethod
    def from_steps(cls, top: str, bottom: str) -> "Region":
        return cls(parse_path(top), parse_path(bottom))

    @classmethod
    def parse(cls, text: str) -> "Region":
        """Parse the textual form ``T=<steps>;B=<steps>``."""
        try:
            t_part, b_part = text.split(";")
            t_steps = t_part.split("=", 1)[1]
            b_steps = b_part.split("=", 1)[1]
        except (ValueError, IndexError):
            raise RegionError(f"cannot parse region text {text!r}") from None
        return cls.from_steps(t_steps, b_steps)

    def __str__(self) -> str:
        return f"T={self.top};B={self.bottom}"


def region_new(top: Path, bottom: Path) -> Region:
    return Region(top, bottom)


def contains(region: Region, path: Path) -> bool:
    """Whether the path lies weakly between the two boundaries."""
    if path.x != region.x or path.y != region.y:
        raise RegionError("path and region dimensions differ")
    return all(
        b <= h <= t
        for b, h, t in zip(region.b_heights, path.heights, region.t_heights)
    )


def contact_stats(region: Region, path: Path) -> ContactStats:
    """Counts of east steps shared with each boundary and of north edges
    shared with each boundary.

    A column where the two boundaries coincide counts toward both t and b.
    """
    if not contains(region, path):
        raise RegionError("path does not lie in the region")
    t = sum(h == th for h, th in zip(path.heights, region.t_heights))
    b = sum(h == bh for h, bh in zip(path.heights, region.b_heights))
    own = north_edges(path)
    l = len(own & north_edges(region.top))
    r = len(own & north_edges(region.bottom))
    return ContactStats(t, b, l, r)


def noncontact_heights(region: Region, path: Path) -> tuple[int, ...]:
    """Heights of the east steps that are neither top nor bottom contacts,
    in column order."""
    if not contains(region, path):
        raise RegionError("path does not lie in the region")
    return tuple(
        h
        for h, th, bh in zip(path.heights, region.t_heights, region.b_heights)
        if h != th and h != bh
    )


def top_contact_columns(region: Region, path: Path) -> tuple[int, ...]:
    return tuple(
        i + 1 for i, (h, th) in enumerate(zip(path.heights, region.t_heights)) if h == th
    )


def bottom_contact_columns(region: Region, path: Path) -> tuple[int, ...]:
    return tuple(
        i + 1 for i, (h, bh) in enumerate(zip(path.heights, region.b_heights)) if h == bh
    )
