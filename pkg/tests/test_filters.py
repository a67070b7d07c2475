import pytest

from doorlab.core import DomainError, Family, parse_family, powerset, restrict_family
from doorlab.filters import (
    algebra_from_partition,
    atoms_of_algebra,
    enumerate_ultrafilters,
    is_algebra,
    is_ultrafilter,
    partitions_of,
    principal_ultrafilter,
)


def test_powerset_is_algebra():
    assert is_algebra(powerset(3))


def test_block_algebra_is_algebra():
    fam = parse_family(3, [[], [0, 1], [2], [0, 1, 2]])
    assert is_algebra(fam)


def test_missing_complement_not_algebra():
    assert not is_algebra(parse_family(2, [[], [0], [0, 1]]))


def test_algebra_from_singleton_blocks_is_powerset():
    sigma = algebra_from_partition(3, [0b001, 0b010, 0b100])
    assert sigma.bits == powerset(3).bits


def test_algebra_from_two_blocks():
    sigma = algebra_from_partition(3, [0b011, 0b100])
    assert sorted(sigma.members()) == [0b000, 0b011, 0b100, 0b111]


def test_partition_overlap_error():
    with pytest.raises(DomainError, match="point 0 covered twice"):
        algebra_from_partition(3, [0b001, 0b011])


def test_partition_cover_error():
    with pytest.raises(DomainError, match="not covered"):
        algebra_from_partition(3, [0b001])


def test_principal_is_ultrafilter():
    sigma = powerset(3)
    fam = Family.from_members(3, [m for m in range(8) if m & 0b010])
    assert is_ultrafilter(fam, sigma)


def test_whole_space_alone_not_ultrafilter():
    sigma = powerset(3)
    assert not is_ultrafilter(Family.from_members(3, [0b111]), sigma)


def test_block_ultrafilter():
    sigma = algebra_from_partition(3, [0b011, 0b100])
    fam = Family.from_members(3, [0b011, 0b111])
    assert is_ultrafilter(fam, sigma)


def test_principal_ultrafilter_examples():
    uf = principal_ultrafilter(0, powerset(2))
    assert sorted(uf.members.members()) == [0b01, 0b11]
    uf = principal_ultrafilter(2, powerset(3))
    assert len(uf.members) == 4
    sigma = algebra_from_partition(3, [0b011, 0b100])
    uf = principal_ultrafilter(0, sigma)
    assert sorted(uf.members.members()) == [0b011, 0b111]


@pytest.mark.parametrize("n", [2, 3, 4])
def test_enumerate_ultrafilters_matches_brute_scan(n):
    sigma = powerset(n)
    brute = sorted(
        bits for bits in range(1 << (1 << n))
        if is_ultrafilter(Family(n, bits), sigma))
    fast = sorted(u.members.bits for u in enumerate_ultrafilters(sigma))
    assert brute == fast
    assert len(fast) == n
    # Every finite ultrafilter is principal at exactly one point.
    principal = {principal_ultrafilter(p, sigma).members.bits for p in range(n)}
    assert principal == set(fast)
    assert all(not u.is_free for u in enumerate_ultrafilters(sigma))


def test_enumerate_block_ultrafilters():
    sigma = algebra_from_partition(3, [0b011, 0b100])
    ufs = enumerate_ultrafilters(sigma)
    assert len(ufs) == 2
    assert {u.atom for u in ufs} == {0b011, 0b100}


def test_atoms_of_partition_algebra():
    for n in (2, 3, 4):
        for blocks in partitions_of(n):
            sigma = algebra_from_partition(n, blocks)
            assert sorted(atoms_of_algebra(sigma)) == sorted(blocks)
            assert len(sigma) == 1 << len(blocks)
            assert len(enumerate_ultrafilters(sigma)) == len(blocks)


def test_restrict_principal_ultrafilter():
    # Restriction to a set containing the point is the principal
    # ultrafilter on that set.
    uf = principal_ultrafilter(0, powerset(3))
    got = restrict_family(uf.members, 0b011)
    local = principal_ultrafilter(0, powerset(2))
    assert got.bits == local.members.bits


def test_exactly_one_of_u_or_complement():
    from doorlab.core import complement
    for n in (2, 3):
        sigma = powerset(n)
        for u in enumerate_ultrafilters(sigma):
            for m in sigma.members():
                assert (m in u.members) != (complement(m, n) in u.members)
