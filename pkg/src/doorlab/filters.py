"""Algebras of sets, filters, and ultrafilters (absolute and relative to an
algebra).  On a finite ground set every algebra is the block algebra of a
partition and every ultrafilter is principal at a block."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .core import (
    DomainError,
    Family,
    complement,
    full_mask,
    points_of,
    popcount,
    powerset,
)


def is_algebra(fam: Family) -> bool:
    """Closed under complement and pairwise union (and therefore contains
    the empty set and X, and is intersection-closed)."""
    if len(fam) == 0:
        return False
    n = fam.n
    members = list(fam.members())
    for u in members:
        if complement(u, n) not in fam:
            return False
    for i, u in enumerate(members):
        for v in members[i + 1:]:
            if (u | v) not in fam:
                return False
    return True


def algebra_from_partition(n: int, blocks: Sequence[int]) -> Family:
    """All unions of blocks of a partition of the ground set."""
    if not blocks:
        raise DomainError("partition needs at least one block")
    seen = 0
    for b in blocks:
        if b == 0:
            raise DomainError("empty block in partition")
        if b & seen:
            p = (b & seen).bit_length() - 1
            raise DomainError(f"point {p} covered twice by partition")
        seen |= b
    if seen != full_mask(n):
        p = (full_mask(n) & ~seen).bit_length() - 1
        raise DomainError(f"point {p} not covered by partition")
    bits = 0
    for pick in range(1 << len(blocks)):
        m = 0
        for i, b in enumerate(blocks):
            if (pick >> i) & 1:
                m |= b
        bits |= 1 << m
    return Family(n, bits)


def atoms_of_algebra(sigma: Family) -> list[int]:
    """Minimal nonempty members; these are the partition blocks."""
    members = [m for m in sigma.members() if m]
    atoms = []
    for m in members:
        if not any(o and o != m and o & ~m == 0 for o in members):
            atoms.append(m)
    return atoms


def is_filter(fam: Family, sigma: Family) -> bool:
    """Nonempty, excludes the empty set, intersection-closed, and upward
    closed within sigma."""
    if fam.n != sigma.n:
        raise DomainError("filter and algebra ground sets differ")
    if fam.bits & ~sigma.bits:
        raise DomainError("family is not contained in the algebra")
    members = list(fam.members())
    if not members or 0 in fam:
        return False
    for i, u in enumerate(members):
        for v in members[i:]:
            if (u & v) not in fam:
                return False
    for u in members:
        for a in sigma.members():
            if u & ~a == 0 and a not in fam:
                return False
    return True


def is_ultrafilter(fam: Family, sigma: Family) -> bool:
    """A filter within sigma containing exactly one of U, U^c for every
    U in sigma."""
    if not is_filter(fam, sigma):
        return False
    n = fam.n
    for u in sigma.members():
        if (u in fam) == (complement(u, n) in fam):
            return False
    return True


def principal_family(p: int, sigma: Family) -> Family:
    """{U in sigma : p in U}."""
    n = sigma.n
    if not 0 <= p < n:
        raise DomainError(f"point {p} out of range for ground set of size {n}")
    bits = 0
    for m in sigma.members():
        if (m >> p) & 1:
            bits |= 1 << m
    return Family(n, bits)


@dataclass(frozen=True)
class FilterFamily:
    members: Family
    sigma: Family
    principal_at: int | None
    is_free: bool
    atom: int

    def to_json(self) -> dict:
        return {
            "n": self.members.n,
            "subsets": self.members.to_subsets(),
            "principal_at": self.principal_at,
            "is_free": self.is_free,
            "atom": points_of(self.atom),
            "sigma": self.sigma.to_subsets(),
        }


def _filter_of_atom(atom: int, sigma: Family) -> FilterFamily:
    bits = 0
    core = full_mask(sigma.n)
    for m in sigma.members():
        if atom & ~m == 0:
            bits |= 1 << m
            core &= m
    fam = Family(sigma.n, bits)
    principal_at = atom.bit_length() - 1 if popcount(atom) == 1 else None
    return FilterFamily(fam, sigma, principal_at, is_free=(core == 0), atom=atom)


def principal_ultrafilter(p: int, sigma: Family) -> FilterFamily:
    fam = principal_family(p, sigma)
    core = full_mask(sigma.n)
    for m in fam.members():
        core &= m
    return FilterFamily(fam, sigma, p, is_free=(core == 0), atom=core)


def enumerate_ultrafilters(sigma: Family) -> list[FilterFamily]:
    """All ultrafilters with respect to sigma: one per atom (block)."""
    if not is_algebra(sigma):
        raise DomainError("family is not an algebra")
    out = [_filter_of_atom(atom, sigma) for atom in atoms_of_algebra(sigma)]
    for f in out:
        assert is_ultrafilter(f.members, sigma)
        assert not f.is_free
    return out


def is_connected_door_wrt(top_family: Family, sigma: Family) -> bool:
    """Every proper nonempty member of sigma is open or closed but not both
    (openness meaning membership in top_family)."""
    n = sigma.n
    full = full_mask(n)
    if top_family.bits & ~sigma.bits:
        return False
    for u in sigma.members():
        if u in (0, full):
            continue
        if (u in top_family) == (complement(u, n) in top_family):
            return False
    return True


def partitions_of(n: int) -> list[list[int]]:
    """All set partitions of {0,...,n-1}, blocks as masks."""
    out: list[list[int]] = []

    def recurse(point: int, blocks: list[int]) -> None:
        if point == n:
            out.append(list(blocks))
            return
        bit = 1 << point
        for i in range(len(blocks)):
            blocks[i] |= bit
            recurse(point + 1, blocks)
            blocks[i] &= ~bit
        blocks.append(bit)
        recurse(point + 1, blocks)
        blocks.pop()

    recurse(0, [])
    return out
