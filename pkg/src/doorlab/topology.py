"""Topology axioms and structural predicates: connectedness, the door
property, OCC, T1, singleton profiles, and the open/closed union witness
check for connected door spaces."""

from __future__ import annotations

from dataclasses import dataclass

from .core import DomainError, Family, complement, full_mask, points_of, popcount, subset_key


class TopologyError(ValueError):
    """Axiom violation, with a witness in the message."""


class PreconditionError(ValueError):
    """Operation applied to a space that does not satisfy its hypothesis."""


@dataclass(frozen=True)
class Topology:
    n: int
    opens: Family

    def is_open(self, subset: int) -> bool:
        return subset in self.opens

    def is_closed(self, subset: int) -> bool:
        return complement(subset, self.n) in self.opens

    def to_json(self) -> dict:
        return {"n": self.n, "opens": self.opens.to_subsets(), "hex": self.opens.to_hex()}


def is_topology_bits(n: int, bits: int) -> bool:
    """Fast axiom check on a raw family bitset (used by enumeration scans)."""
    full = full_mask(n)
    if not (bits >> 0) & 1 or not (bits >> full) & 1:
        return False
    members = []
    b = bits
    while b:
        lsb = b & -b
        members.append(lsb.bit_length() - 1)
        b ^= lsb
    for i, u in enumerate(members):
        for v in members[i + 1:]:
            if not (bits >> (u | v)) & 1:
                return False
            if not (bits >> (u & v)) & 1:
                return False
    return True


def validate_topology(fam: Family) -> Topology:
    n = fam.n
    full = full_mask(n)
    if 0 not in fam:
        raise TopologyError("empty set missing from the family")
    if full not in fam:
        raise TopologyError(f"whole space {points_of(full)} missing from the family")
    members = list(fam.members())
    for i, u in enumerate(members):
        for v in members[i + 1:]:
            if (u | v) not in fam:
                raise TopologyError(
                    f"union {points_of(u)} | {points_of(v)} = {points_of(u | v)} missing")
            if (u & v) not in fam:
                raise TopologyError(
                    f"intersection {points_of(u)} & {points_of(v)} = {points_of(u & v)} missing")
    return Topology(n, fam)


@dataclass(frozen=True)
class SpaceReport:
    connected: bool
    door: bool
    connected_door: bool
    t1: bool
    open_singletons: tuple[int, ...]
    closed_singletons: tuple[int, ...]
    clopen_proper_count: int

    def to_json(self) -> dict:
        return {
            "connected": self.connected,
            "door": self.door,
            "connected_door": self.connected_door,
            "t1": self.t1,
            "open_singletons": list(self.open_singletons),
            "closed_singletons": list(self.closed_singletons),
            "clopen_proper_count": self.clopen_proper_count,
        }


def space_report(top: Topology) -> SpaceReport:
    n = top.n
    full = full_mask(n)
    clopen_proper = 0
    door = True
    for m in range(1 << n):
        is_o = top.is_open(m)
        is_c = top.is_closed(m)
        if not is_o and not is_c:
            door = False
        if is_o and is_c and m not in (0, full):
            clopen_proper += 1
    connected = clopen_proper == 0
    connected_door = connected and door

    # Cross-check against the xor characterization: every proper nonempty
    # subset open or closed but not both.
    xor_ok = all(
        top.is_open(m) != top.is_closed(m)
        for m in range(1, full)
    )
    assert connected_door == xor_ok, "connected-door characterizations disagree"

    open_singles = tuple(p for p in range(n) if top.is_open(1 << p))
    closed_singles = tuple(p for p in range(n) if top.is_closed(1 << p))
    return SpaceReport(
        connected=connected,
        door=door,
        connected_door=connected_door,
        t1=len(closed_singles) == n,
        open_singletons=open_singles,
        closed_singletons=closed_singles,
        clopen_proper_count=clopen_proper,
    )


def occ_satisfied(top: Topology) -> tuple[bool, tuple[int, int, int, int] | None]:
    """OCC: no pairwise disjoint nonempty A, B open and C, D closed.

    Returns (True, None) or (False, (A, B, C, D)) with the smallest witness
    in (cardinality, mask) order.
    """
    n = top.n
    opens = sorted((m for m in top.opens.members() if m), key=subset_key)
    closeds = sorted(
        (m for m in range(1, 1 << n) if top.is_closed(m)), key=subset_key)
    for ia, a in enumerate(opens):
        for b in opens[ia + 1:]:
            if a & b:
                continue
            ab = a | b
            for ic, c in enumerate(closeds):
                if c & ab:
                    continue
                for d in closeds[ic + 1:]:
                    if d & (ab | c):
                        continue
                    return False, (a, b, c, d)
    return True, None


def lemma1_check(top: Topology) -> tuple[bool, tuple[int, int, int] | None]:
    """For every disjoint nonempty pair (A open, B closed) and every
    C inside the remainder: A|C must be open and B|C closed."""
    report = space_report(top)
    if not report.connected_door:
        raise PreconditionError("space is not a connected door space")
    n = top.n
    full = full_mask(n)
    for a in top.opens.members():
        if a == 0:
            continue
        for b in range(1, 1 << n):
            if not top.is_closed(b) or a & b:
                continue
            rest = full & ~(a | b)
            c = rest
            while True:
                if not top.is_open(a | c) or not top.is_closed(b | c):
                    return False, (a, b, c)
                if c == 0:
                    break
                c = (c - 1) & rest
    return True, None
