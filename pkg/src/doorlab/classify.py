"""Constructors and recognizers for the named topology forms: excluded and
included point topologies, the three preimage-induced forms, and the
two-ultrafilter union shape.

Ultrafilter parameters are given by their principal point; free ultrafilters
do not exist on finite ground sets, so forms requiring them are rejected as
unconstructible rather than silently skipped.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import DomainError, Family, full_mask, points_of
from .topology import PreconditionError, Topology, space_report, validate_topology


class UnconstructibleError(ValueError):
    """The descriptor needs a free ultrafilter, which no finite set has."""


VALID_KINDS = (
    "ExcludedPoint", "IncludedPoint", "UltrafilterType",
    "Form1A", "Form1B", "Form2", "Form3", "T2Shape",
)


@dataclass(frozen=True)
class FormDescriptor:
    """Symbolic name of a topology form.

    kind            parameters
    ExcludedPoint   a
    IncludedPoint   a
    UltrafilterType seed (principal point), or free=True
    Form1A          a, seed  (ultrafilter on X minus {a}, principal at seed)
    Form1B          a, seed  (same seed convention)
    Form2           A plus two free seeds -- never constructible here
    Form3           a, b
    T2Shape         A, p, q  (principal seeds on A and its complement)
    """

    kind: str
    a: int | None = None
    b: int | None = None
    seed: int | None = None
    A: int | None = None
    p: int | None = None
    q: int | None = None
    free: bool = False

    def __post_init__(self) -> None:
        if self.kind not in VALID_KINDS:
            raise DomainError(f"unknown form kind {self.kind!r}")

    def to_json(self) -> dict:
        out: dict = {"kind": self.kind}
        for field in ("a", "b", "seed", "p", "q"):
            v = getattr(self, field)
            if v is not None:
                out[field] = v
        if self.A is not None:
            out["A"] = points_of(self.A)
        if self.free:
            out["free"] = True
        return out


def _require(cond: bool, msg: str) -> None:
    if not cond:
        raise DomainError(msg)


def construct_topology(d: FormDescriptor, n: int) -> Topology:
    full = full_mask(n)
    k = d.kind

    if k == "Form2" or d.free:
        raise UnconstructibleError(
            "unconstructible: free ultrafilters do not exist on finite sets")

    if k == "ExcludedPoint":
        _require(d.a is not None and 0 <= d.a < n, "parameter a out of range")
        bits = 1 << full
        for m in range(1 << n):
            if not (m >> d.a) & 1:
                bits |= 1 << m
        return validate_topology(Family(n, bits))

    if k in ("IncludedPoint", "UltrafilterType"):
        point = d.a if k == "IncludedPoint" else d.seed
        _require(point is not None and 0 <= point < n, "parameter out of range")
        bits = 1  # empty set
        for m in range(1 << n):
            if (m >> point) & 1:
                bits |= 1 << m
        return validate_topology(Family(n, bits))

    if k in ("Form1A", "Form1B"):
        _require(d.a is not None and 0 <= d.a < n, "parameter a out of range")
        _require(d.seed is not None and 0 <= d.seed < n and d.seed != d.a,
                 "seed must be a point distinct from a")
        bits = 1 | (1 << full)
        for m in range(1 << n):
            in_filter = (m >> d.seed) & 1 and not (m >> d.a) & 1
            if k == "Form1A" and in_filter:
                bits |= 1 << m
            if k == "Form1B" and (m >> d.a) & 1 and (m >> d.seed) & 1:
                # {a} joined with a filter member: supersets of {a, seed}
                bits |= 1 << m
        return validate_topology(Family(n, bits))

    if k == "Form3":
        _require(d.a is not None and d.b is not None and d.a != d.b
                 and 0 <= d.a < n and 0 <= d.b < n, "need distinct points a, b")
        avoid = (1 << d.a) | (1 << d.b)
        bits = 1 << full
        for m in range(1 << n):
            if m & avoid == 0:
                bits |= 1 << m
        return validate_topology(Family(n, bits))

    if k == "T2Shape":
        _require(d.A is not None and 0 < d.A < full, "A must be proper nonempty")
        _require(d.p is not None and (d.A >> d.p) & 1, "p must lie in A")
        _require(d.q is not None and 0 <= d.q < n and not (d.A >> d.q) & 1,
                 "q must lie outside A")
        need = (1 << d.p) | (1 << d.q)
        bits = 1 | (1 << full)
        for m in range(1 << n):
            if m & need == need:
                bits |= 1 << m
        return validate_topology(Family(n, bits))

    raise DomainError(f"unknown form kind {k!r}")


@dataclass(frozen=True)
class ClassificationLabel:
    labels: tuple[FormDescriptor, ...]
    degenerate: bool = False

    def to_json(self) -> dict:
        out: dict = {"labels": [d.to_json() for d in self.labels]}
        if self.degenerate:
            out["degenerate"] = True
        return out


def classify_connected_door(top: Topology) -> ClassificationLabel:
    """All excluded-point / included-point descriptors matching a connected
    door topology.  The ultrafilter type never occurs on a finite set."""
    n = top.n
    if n == 1:
        return ClassificationLabel(
            (FormDescriptor("IncludedPoint", a=0), FormDescriptor("ExcludedPoint", a=0)),
            degenerate=True)
    if not space_report(top).connected_door:
        raise PreconditionError("space is not a connected door space")
    labels = []
    for kind in ("ExcludedPoint", "IncludedPoint"):
        for a in range(n):
            d = FormDescriptor(kind, a=a)
            if construct_topology(d, n).opens == top.opens:
                labels.append(d)
    assert labels, "connected door space matched no finite type"
    return ClassificationLabel(tuple(labels))


def recognize_form(top: Topology) -> ClassificationLabel:
    """All Form1A / Form1B / Form3 / T2Shape descriptors (with principal
    seeds) whose construction equals the given topology."""
    n = top.n
    full = full_mask(n)
    labels: list[FormDescriptor] = []
    for a in range(n):
        for s in range(n):
            if s == a:
                continue
            for kind in ("Form1A", "Form1B"):
                d = FormDescriptor(kind, a=a, seed=s)
                if construct_topology(d, n).opens == top.opens:
                    labels.append(d)
    for a in range(n):
        for b in range(a + 1, n):
            d = FormDescriptor("Form3", a=a, b=b)
            if construct_topology(d, n).opens == top.opens:
                labels.append(d)
    for A in range(1, full):
        for p in points_of(A):
            for q in points_of(full & ~A):
                d = FormDescriptor("T2Shape", A=A, p=p, q=q)
                if construct_topology(d, n).opens == top.opens:
                    labels.append(d)
    return ClassificationLabel(tuple(labels))
