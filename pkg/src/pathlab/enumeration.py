"""Exhaustive generators for paths and nested tuples, exact distribution
polynomials, and a determinant shortcut for tuple counts."""

from __future__ import annotations

from itertools import product
from typing import Callable, Iterable, Iterator

from .paths import Path, Region, contact_stats, descent_set, noncontact_heights
from .polynomials import MultiPoly, int_determinant
from .tuples import PathTuple

VAR_NAMES = ("x", "y", "z", "w", "v", "u")


def enumerate_paths(
    region: Region,
    south_allowed: bool = False,
    descent_filter: frozenset[int] | None = None,
    h_filter: tuple[int, ...] | None = None,
) -> Iterator[Path]:
    """Yield the paths of the region in lexicographic height order.

    With ``south_allowed`` every in-range height sequence is legal;
    otherwise only weakly increasing ones.  The optional filters restrict to
    a fixed descent set or a fixed non-contact height sequence.
    """
    if descent_filter is not None:
        descent_filter = frozenset(descent_filter)
    if h_filter is not None:
        h_filter = tuple(h_filter)
    for heights in _height_sequences(region, south_allowed):
        path = Path(heights, region.y)
        if descent_filter is not None and descent_set(path) != descent_filter:
            continue
        if h_filter is not None and noncontact_heights(region, path) != h_filter:
            continue
        yield path


def _height_sequences(region: Region, south_allowed: bool) -> Iterator[tuple[int, ...]]:
    lo, hi = region.b_heights, region.t_heights
    if south_allowed:
        yield from product(*(range(a, b + 1) for a, b in zip(lo, hi)))
        return

    def rec(col: int, prev: int, prefix: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
        if col == len(lo):
            yield prefix
            return
        for h in range(max(prev, lo[col]), hi[col] + 1):
            yield from rec(col + 1, h, prefix + (h,))

    yield from rec(0, 0, ())


def enumerate_tuples(region: Region, k: int) -> Iterator[PathTuple]:
    """Yield the weakly nested k-tuples of monotone paths, ordered
    lexicographically by concatenated height vectors."""
    if k < 1:
        raise ValueError("k must be at least 1")
    lo = region.b_heights

    def paths_below(upper: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
        def rec(col: int, prev: int, prefix: tuple[int, ...]):
            if col == len(lo):
                yield prefix
                return
            for h in range(max(prev, lo[col]), upper[col] + 1):
                yield from rec(col + 1, h, prefix + (h,))

        yield from rec(0, 0, ())

    def rec_tuple(level: int, upper: tuple[int, ...], acc: tuple[Path, ...]):
        if level == k:
            yield PathTuple(region, acc)
            return
        for heights in paths_below(upper):
            yield from rec_tuple(level + 1, heights, acc + (Path(heights, region.y),))

    yield from rec_tuple(0, region.t_heights, ())


def distribution(
    objects: Iterable,
    stats: list[tuple[str, Callable]],
) -> MultiPoly:
    """Sum, over the stream, of the monomial whose exponents are the values
    of the named statistics."""
    names = tuple(name for name, _ in stats)
    funcs = [f for _, f in stats]
    terms: dict[tuple[int, ...], int] = {}
    for obj in objects:
        exp = tuple(f(obj) for f in funcs)
        terms[exp] = terms.get(exp, 0) + 1
    return MultiPoly(names, terms)


def poly_symmetric(p: MultiPoly, perm: dict[str, str]) -> bool:
    """Whether the polynomial is invariant under the variable permutation."""
    return p == p.permute_variables(perm)


def contact_stat_functions(region: Region) -> dict[str, Callable[[Path], int]]:
    """The four single-path contact statistics, keyed by their short names."""
    return {
        "t": lambda p: contact_stats(region, p).t,
        "b": lambda p: contact_stats(region, p).b,
        "l": lambda p: contact_stats(region, p).l,
        "r": lambda p: contact_stats(region, p).r,
    }


def path_distribution(
    region: Region, stat_names: list[str], south_allowed: bool = False
) -> MultiPoly:
    """Joint distribution of named contact statistics over the region,
    with variables x, y, ... in the order given."""
    funcs = contact_stat_functions(region)
    stats = [(VAR_NAMES[i], funcs[name]) for i, name in enumerate(stat_names)]
    return distribution(enumerate_paths(region, south_allowed), stats)


def _count_paths_avoiding(
    start: tuple[int, int], end: tuple[int, int], forbidden: frozenset[tuple[int, int]]
) -> int:
    (sx, sy), (ex, ey) = start, end
    if ex < sx or ey < sy:
        return 0
    counts = {start: 0 if start in forbidden else 1}
    for px in range(sx, ex + 1):
        for py in range(sy, ey + 1):
            if (px, py) == start:
                continue
            if (px, py) in forbidden:
                counts[(px, py)] = 0
                continue
            counts[(px, py)] = counts.get((px - 1, py), 0) + counts.get((px, py - 1), 0)
    return counts[end]


def lgv_count(region: Region, k: int) -> int:
    """Number of weakly nested k-tuples, as a k-by-k determinant.

    Convention: tuples correspond to families of pairwise disjoint free
    paths, the i-th one translated i steps along the diagonal (1, -1), that
    also avoid the top boundary and the bottom boundary translated k+1
    steps.  Entry (i, j) counts single paths from (j, -j) to
    (x + i, y - i) avoiding those two vertex sets.
    """
    if k < 1:
        raise ValueError("k must be at least 1")
    from .paths import vertices

    x, y = region.x, region.y
    shift = k + 1
    forbidden = frozenset(vertices(region.top)) | frozenset(
        (px + shift, py - shift) for px, py in vertices(region.bottom)
    )
    matrix = [
        [
            _count_paths_avoiding((j, -j), (x + i, y - i), forbidden)
            for j in range(1, k + 1)
        ]
        for i in range(1, k + 1)
    ]
    return int_determinant(matrix)
