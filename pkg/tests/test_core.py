import pytest
from hypothesis import given, strategies as st

from doorlab.core import (
    DomainError,
    Family,
    compress_mask,
    expand_mask,
    full_mask,
    mask_from_points,
    parse_family,
    points_of,
    powerset,
    restrict_family,
)


def test_parse_family_sierpinski():
    fam = parse_family(2, [[], [0], [0, 1]])
    assert sorted(fam.members()) == [0b00, 0b01, 0b11]


def test_parse_family_dedup():
    fam = parse_family(3, [[0, 1], [0, 1]])
    assert list(fam.members()) == [0b011]


def test_parse_family_out_of_range():
    with pytest.raises(DomainError, match="point 5 out of range"):
        parse_family(2, [[5]])


def test_powerset_sizes():
    assert len(powerset(1)) == 2
    assert len(powerset(2)) == 4
    assert len(powerset(3)) == 8


def test_restrict_supersets():
    # All supersets of {0} on three points, restricted to {0, 1}.
    fam = Family.from_members(3, [m for m in range(8) if m & 1])
    got = restrict_family(fam, 0b011)
    assert got.n == 2
    assert sorted(got.members()) == [0b01, 0b11]


def test_restrict_powerset_to_singleton():
    got = restrict_family(powerset(3), 0b100)
    assert got.n == 1
    assert sorted(got.members()) == [0, 1]


def test_restrict_empty_result():
    fam = Family.from_members(3, [0b111])
    got = restrict_family(fam, 0b011)
    assert len(got) == 0


def test_restrict_to_full_is_identity():
    fam = parse_family(3, [[0], [1, 2], []])
    assert restrict_family(fam, full_mask(3)).bits == fam.bits


def test_serialization_roundtrip_exhaustive_n2():
    for bits in range(1 << 4):
        fam = Family(2, bits)
        assert parse_family(2, fam.to_subsets()).bits == bits
        assert Family.from_hex(2, fam.to_hex()).bits == bits


@given(st.integers(min_value=0, max_value=255))
def test_serialization_roundtrip_n3(bits):
    fam = Family(3, bits)
    assert parse_family(3, fam.to_subsets()).bits == bits


def test_subsets_sorted_by_cardinality_then_lex():
    fam = parse_family(3, [[0, 1], [2], [0], [1, 2], []])
    assert fam.to_subsets() == [[], [0], [2], [0, 1], [1, 2]]


def test_compress_expand_inverse():
    within = 0b10110
    for local in range(1 << 3):
        assert compress_mask(expand_mask(local, within), within) == local


def test_mask_points_roundtrip():
    assert points_of(mask_from_points([0, 2, 3], 4)) == [0, 2, 3]


def test_ground_cap():
    with pytest.raises(DomainError):
        powerset(7)
    with pytest.raises(DomainError):
        powerset(0)
