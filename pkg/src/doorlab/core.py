"""Ground-set arithmetic: subsets as bitmasks, families as power-set bitsets.

A subset of X = {0, ..., n-1} is an n-bit integer (bit i set iff point i is
in the subset).  A family of subsets is a 2^n-bit integer indexed by subset
mask.  With n capped at 6 a family always fits in a single 64-bit word.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

MAX_POINTS = 6
RAW_SCAN_MAX = 4


class DomainError(ValueError):
    """Input outside the declared domain (bad point index, bad mask, ...)."""


def check_ground(n: int) -> None:
    if not 1 <= n <= MAX_POINTS:
        raise DomainError(f"ground set size {n} outside [1, {MAX_POINTS}]")


def full_mask(n: int) -> int:
    return (1 << n) - 1


def complement(subset: int, n: int) -> int:
    return full_mask(n) & ~subset


def mask_from_points(points: Iterable[int], n: int) -> int:
    mask = 0
    for p in points:
        if not 0 <= p < n:
            raise DomainError(f"point {p} out of range for ground set of size {n}")
        mask |= 1 << p
    return mask


def points_of(mask: int) -> list[int]:
    out = []
    i = 0
    m = mask
    while m:
        if m & 1:
            out.append(i)
        m >>= 1
        i += 1
    return out


def popcount(mask: int) -> int:
    return mask.bit_count()


def subset_key(mask: int) -> tuple[int, list[int]]:
    """Canonical sort key: (cardinality, sorted point list)."""
    return (popcount(mask), points_of(mask))


@dataclass(frozen=True)
class Family:
    """A set of subsets of {0,...,n-1}, stored as a 2^n-bit membership bitset."""

    n: int
    bits: int

    def __post_init__(self) -> None:
        check_ground(self.n)
        if not 0 <= self.bits < (1 << (1 << self.n)):
            raise DomainError(f"family bits out of range for n={self.n}")

    @classmethod
    def from_members(cls, n: int, members: Iterable[int]) -> "Family":
        bits = 0
        top = 1 << n
        for m in members:
            if not 0 <= m < top:
                raise DomainError(f"subset mask {m} out of range for n={n}")
            bits |= 1 << m
        return cls(n, bits)

    def __contains__(self, subset: int) -> bool:
        return bool((self.bits >> subset) & 1)

    def __len__(self) -> int:
        return self.bits.bit_count()

    def members(self) -> Iterator[int]:
        """Member masks in ascending numeric order."""
        b = self.bits
        while b:
            lsb = b & -b
            yield lsb.bit_length() - 1
            b ^= lsb

    def add(self, subset: int) -> "Family":
        return Family(self.n, self.bits | (1 << subset))

    def union(self, other: "Family") -> "Family":
        if other.n != self.n:
            raise DomainError("family ground sets differ")
        return Family(self.n, self.bits | other.bits)

    def to_subsets(self) -> list[list[int]]:
        """Members as point lists, sorted by (cardinality, lexicographic)."""
        return [points_of(m) for m in sorted(self.members(), key=subset_key)]

    def to_hex(self) -> str:
        width = (1 << self.n) // 4 or 1
        return format(self.bits, f"0{width}x")

    @classmethod
    def from_hex(cls, n: int, text: str) -> "Family":
        return cls(n, int(text, 16))

    def to_json(self) -> dict:
        return {"n": self.n, "subsets": self.to_subsets(), "hex": self.to_hex()}


def parse_family(n: int, subsets: Sequence[Iterable[int]]) -> Family:
    """Build a family from point lists; duplicates are collapsed."""
    check_ground(n)
    bits = 0
    for pts in subsets:
        bits |= 1 << mask_from_points(pts, n)
    return Family(n, bits)


def powerset(n: int) -> Family:
    check_ground(n)
    return Family(n, (1 << (1 << n)) - 1)


def compress_mask(subset: int, within: int) -> int:
    """Re-index subset (a submask of `within`) onto the points of `within`,
    renumbered in increasing order."""
    out = 0
    i = 0
    m = within
    while m:
        lsb = m & -m
        if subset & lsb:
            out |= 1 << i
        i += 1
        m ^= lsb
    return out


def expand_mask(local: int, within: int) -> int:
    """Inverse of compress_mask."""
    out = 0
    i = 0
    m = within
    while m:
        lsb = m & -m
        if (local >> i) & 1:
            out |= lsb
        i += 1
        m ^= lsb
    return out


def restrict_family(fam: Family, a: int) -> Family:
    """F|_A = {F in fam : F subset of A}, re-indexed onto the points of A."""
    if not 0 <= a <= full_mask(fam.n):
        raise DomainError(f"subset mask {a} out of range for n={fam.n}")
    k = popcount(a)
    if k == 0:
        # F|_emptyset lives on an empty ground set; represent on n=1 is wrong,
        # so reject: the paper only restricts to nonempty subsets.
        raise DomainError("cannot restrict onto the empty set")
    bits = 0
    for m in fam.members():
        if m & ~a == 0:
            bits |= 1 << compress_mask(m, a)
    return Family(k, bits)
