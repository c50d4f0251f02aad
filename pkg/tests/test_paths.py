import pytest
from hypothesis import given, strategies as st

from pathlab.paths import (
    ContactStats,
    Path,
    PathError,
    Region,
    RegionError,
    contact_stats,
    contains,
    descent_set,
    noncontact_heights,
    north_index_set,
    parse_path,
    path_from_north_set,
    region_new,
)

# a wide region reused by several pinned examples
BIG_T = "NNENEENENENENEEEE"
BIG_B = "EEENENEENENNEENEN"
BIG_PATH = "ENNNEEENNEEEEENNE"


def test_parse_alternating():
    p = parse_path("ENENEN")
    assert p.heights == (0, 1, 2)
    assert p.y == 3


def test_parse_norths_first():
    assert parse_path("NNEE").heights == (2, 2)


def test_parse_revisit_is_error():
    with pytest.raises(PathError):
        parse_path("ENSE")


def test_parse_below_axis_is_error():
    with pytest.raises(PathError):
        parse_path("SE")


def test_parse_trailing_descent_is_error():
    with pytest.raises(PathError):
        parse_path("ENNESS")


def test_canonical_string_roundtrip():
    p = Path((2, 1, 1, 3), 3)
    assert parse_path(p.steps()) == p


heights_strategy = st.integers(0, 4).flatmap(
    lambda y: st.tuples(
        st.lists(st.integers(0, y), max_size=5).map(tuple), st.just(y)
    )
)


@given(heights_strategy)
def test_roundtrip_any_heights(data):
    heights, y = data
    p = Path(heights, y)
    assert parse_path(p.steps()) == p


def test_region_example():
    r = Region.from_steps("NNENEE", "ENEENN")
    assert (r.x, r.y) == (3, 3)
    assert r.t_heights == (2, 3, 3)
    assert r.b_heights == (0, 1, 1)


def test_degenerate_region():
    r = Region.from_steps("EN", "EN")
    assert (r.x, r.y) == (1, 1)
    assert r.t_heights == r.b_heights


def test_region_dominance_error():
    with pytest.raises(RegionError):
        region_new(parse_path("ENNE"), parse_path("NNEE"))


def test_region_endpoint_error():
    with pytest.raises(RegionError):
        Region.from_steps("NE", "ENN")


def test_contains():
    r = Region.from_steps("NNENEE", "ENEENN")
    assert contains(r, Path((0, 1, 2), 3))
    assert not contains(r, Path((3, 3, 3), 3))
    assert contains(r, r.bottom)


def test_contact_stats_small_region():
    r = Region.from_steps("NNENEE", "ENEENN")
    assert contact_stats(r, Path((0, 1, 2), 3)) == ContactStats(0, 2, 0, 2)
    assert contact_stats(r, r.bottom) == ContactStats(0, 3, 0, 3)


def test_contact_stats_wide_region():
    r = Region.from_steps(BIG_T, BIG_B)
    p = parse_path(BIG_PATH)
    assert p.heights == (0, 3, 3, 3, 5, 5, 5, 5, 5, 7)
    assert contact_stats(r, p).as_tuple() == (4, 3, 2, 1)


def test_shared_column_counts_to_both():
    r = Region.from_steps("EN", "EN")
    st_ = contact_stats(r, r.bottom)
    assert (st_.t, st_.b) == (1, 1)


def test_descent_set():
    assert descent_set(Path((0, 3, 2, 1, 4, 2, 4, 5, 5, 7), 7)) == {2, 3, 5}
    assert descent_set(Path((0, 1, 2), 3)) == frozenset()
    assert descent_set(Path((3, 1), 3)) == {1}


@given(heights_strategy)
def test_descents_empty_iff_monotone(data):
    heights, y = data
    p = Path(heights, y)
    assert (descent_set(p) == frozenset()) == p.is_monotone


def test_noncontact_heights():
    r = Region.from_steps("NNNEEENEE", "EENEEENNN")
    assert noncontact_heights(r, Path((2, 3, 2, 3, 4), 4)) == (2, 2, 3)
    small = Region.from_steps("NNENEE", "ENEENN")
    assert noncontact_heights(small, Path((0, 1, 2), 3)) == (2,)
    assert noncontact_heights(small, small.bottom) == ()


def test_noncontact_length_identity():
    r = Region.from_steps("NNENEE", "ENEENN")
    both_free = Region.from_steps("ENNE", "ENNE")
    for region in (r, both_free):
        shared = sum(t == b for t, b in zip(region.t_heights, region.b_heights))
        from pathlab.enumeration import enumerate_paths

        for p in enumerate_paths(region):
            s = contact_stats(region, p)
            assert s.t + s.b >= 2 * shared
            both = sum(
                h == t == b
                for h, t, b in zip(p.heights, region.t_heights, region.b_heights)
            )
            assert len(noncontact_heights(region, p)) == region.x - s.t - s.b + both


def test_north_index_set():
    assert north_index_set(parse_path(BIG_PATH)) == {2, 3, 4, 8, 9, 15, 16}
    assert north_index_set(parse_path("NNEE")) == {1, 2}
    assert north_index_set(parse_path("ENENEN")) == {2, 4, 6}


def test_north_index_set_rejects_descents():
    with pytest.raises(PathError):
        north_index_set(Path((2, 1), 2))


def test_north_set_roundtrip():
    p = parse_path("ENENEN")
    assert path_from_north_set(3, 3, north_index_set(p)) == p
