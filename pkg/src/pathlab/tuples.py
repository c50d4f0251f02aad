"""Weakly nested k-tuples of monotone paths in a region, their coincidence
statistics, and the bijections that permute those statistics."""

from __future__ import annotations

from dataclasses import dataclass

from .paths import Path, Region, contains, north_edges
from .swaps import swapall


@dataclass(frozen=True)
class PathTuple:
    """k monotone paths in a region, each weakly above the next.

    For statistics the top boundary acts as the 0-th path and the bottom
    boundary as the (k+1)-st.
    """

    region: Region
    paths: tuple[Path, ...]

    def __post_init__(self):
        object.__setattr__(self, "paths", tuple(self.paths))
        for p in self.paths:
            if not p.is_monotone:
                raise ValueError("tuple paths must be monotone")
            if not contains(self.region, p):
                raise ValueError("tuple path leaves the region")
        for upper, lower in zip(self.paths, self.paths[1:]):
            if any(a < b for a, b in zip(upper.heights, lower.heights)):
                raise ValueError("paths are not weakly nested")

    @property
    def k(self) -> int:
        return len(self.paths)

    def with_boundaries(self) -> tuple[Path, ...]:
        return (self.region.top,) + self.paths + (self.region.bottom,)


def h_stats(t: PathTuple) -> tuple[int, ...]:
    """Numbers of east steps where consecutive paths coincide, boundaries
    included: entry 0 pairs the top boundary with the first path."""
    chain = t.with_boundaries()
    return tuple(
        sum(a == b for a, b in zip(p.heights, q.heights))
        for p, q in zip(chain, chain[1:])
    )


def v_stats(t: PathTuple) -> tuple[int, ...]:
    """Numbers of north edges where consecutive paths coincide."""
    chain = t.with_boundaries()
    return tuple(
        len(north_edges(p) & north_edges(q)) for p, q in zip(chain, chain[1:])
    )


def u_stats(t: PathTuple) -> tuple[int, ...]:
    """Entry s-1 counts east edges at height y-s strictly between the
    boundaries that no path of the tuple uses, for s = 1 .. y-1."""
    region = t.region
    y = region.y
    used = [set(p.heights[j] for p in t.paths) for j in range(region.x)]
    out = []
    for s in range(1, y):
        height = y - s
        count = 0
        for j in range(region.x):
            if region.b_heights[j] < height < region.t_heights[j] and height not in used[j]:
                count += 1
        out.append(count)
    return tuple(out)


def top_stats(t: PathTuple) -> tuple[int, int, int, int]:
    """(t, b, l, r) of the tuple: top/left contacts of the first path,
    bottom/right contacts of the last."""
    h = h_stats(t)
    v = v_stats(t)
    return (h[0], h[-1], v[0], v[-1])


def _replace(t: PathTuple, i: int, new_path: Path) -> PathTuple:
    paths = list(t.paths)
    paths[i - 1] = new_path
    return PathTuple(t.region, tuple(paths))


def _inner_region(t: PathTuple, i: int) -> Region:
    chain = t.with_boundaries()
    return Region(chain[i - 1], chain[i + 1])


def transpose_h(t: PathTuple, i: int) -> PathTuple:
    """Swap the i-1st and i-th coincidence counts by applying the
    contact-exchanging involution to the i-th path between its neighbours."""
    if not 1 <= i <= t.k:
        raise ValueError("transposition index out of range")
    local = _inner_region(t, i)
    image = _replace(t, i, swapall(local, t.paths[i - 1]))
    before, after = h_stats(t), h_stats(image)
    assert after[i - 1] == before[i] and after[i] == before[i - 1]
    assert u_stats(image) == u_stats(t)
    return image


def apply_perm_h(t: PathTuple, perm) -> PathTuple:
    """Compose adjacent transpositions so that the image's coincidence
    vector is the original one permuted by ``perm``.

    ``perm`` lists, for each slot j in 0..k, the index of the original entry
    that should end up there.  The factorization is bubble sort, always
    swapping the leftmost out-of-order adjacent pair.
    """
    perm = tuple(perm)
    k = t.k
    if sorted(perm) != list(range(k + 1)):
        raise ValueError("perm must be a permutation of 0..k")
    original = h_stats(t)
    target = {idx: pos for pos, idx in enumerate(perm)}
    cur = list(range(k + 1))
    image = t
    while True:
        for j in range(k):
            if target[cur[j]] > target[cur[j + 1]]:
                image = transpose_h(image, j + 1)
                cur[j], cur[j + 1] = cur[j + 1], cur[j]
                break
        else:
            break
    assert h_stats(image) == tuple(original[i] for i in perm)
    return image


def bltr_tuple_bijection(t: PathTuple) -> PathTuple:
    """Map tuples with bottom/left contacts (e, f) to tuples with top/right
    contacts (e, f), sweeping the single-path bijection up then down."""
    from .matroids import bltr_single_path

    b_in, l_in = h_stats(t)[-1], v_stats(t)[0]
    image = t
    for i in range(t.k, 0, -1):
        local = _inner_region(image, i)
        image = _replace(image, i, bltr_single_path(local, image.paths[i - 1]))
    for i in range(2, t.k + 1):
        local = _inner_region(image, i)
        image = _replace(image, i, bltr_single_path(local, image.paths[i - 1]))
    assert h_stats(image)[0] == b_in and v_stats(image)[-1] == l_in
    return image
