"""Exhaustive enumeration at desk scale: all topologies on a labeled ground
set, the door / connected-door / OCC filters over them, and all solutions of
the two set equations, each available through at least two independent
routes (raw scan vs closure DFS, brute scan vs modular parameters)."""

from __future__ import annotations

import json
import os
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path

from .classify import FormDescriptor, classify_connected_door, construct_topology
from .core import Family, full_mask, popcount
from .topology import (
    Topology,
    is_topology_bits,
    lemma1_check,
    occ_satisfied,
    space_report,
)
from .valuations import (
    EC_ZERO,
    ExactComplex,
    SetFunction,
    ec,
    induced_family,
)

CLOSURE_MAX = 6


class CapabilityError(ValueError):
    """Requested scale exceeds the mode's cap."""


@dataclass(frozen=True)
class EnumerationReport:
    n: int
    mode: str
    total_scanned: int
    counts: dict = field(default_factory=dict)
    elapsed: float = 0.0

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "mode": self.mode,
            "total_scanned": self.total_scanned,
            "counts": dict(sorted(self.counts.items())),
        }


def _chunks(total: int, workers: int) -> list[range]:
    workers = max(1, workers)
    step = (total + workers - 1) // workers
    return [range(lo, min(lo + step, total)) for lo in range(0, total, step)]


def _raw_scan(n: int, workers: int) -> tuple[list[int], int]:
    space = 1 << (1 << n)
    full = full_mask(n)
    base = 1 | (1 << full)

    def scan(rng: range) -> list[int]:
        found = []
        for bits in rng:
            if bits & base == base and is_topology_bits(n, bits):
                found.append(bits)
        return found

    parts = _chunks(space, workers)
    if len(parts) == 1:
        merged = scan(parts[0])
    else:
        with ThreadPoolExecutor(max_workers=len(parts)) as pool:
            merged = [b for part in pool.map(scan, parts) for b in part]
    return merged, space


def _closure_dfs(n: int) -> tuple[list[int], int]:
    """Orderly generation of all families containing the empty set and X
    that are closed under pairwise union and intersection.  Each closed
    family has a unique increasing canonical generator chain; a branch is
    pruned when closure creates a new element below the current generator.
    """
    full = full_mask(n)
    results: list[int] = []
    visited = 0

    def close_with(bits: int, members: list[int], m: int) -> tuple[int, list[int]] | None:
        new_bits = bits | (1 << m)
        mem = list(members)
        queue = [m]
        while queue:
            x = queue.pop()
            for u in mem:
                for y in (u | x, u & x):
                    if not (new_bits >> y) & 1:
                        if y < m:
                            return None
                        new_bits |= 1 << y
                        queue.append(y)
            mem.append(x)
        return new_bits, mem

    def dfs(bits: int, members: list[int], last: int) -> None:
        nonlocal visited
        visited += 1
        results.append(bits)
        for m in range(last + 1, full):
            if (bits >> m) & 1:
                continue
            nxt = close_with(bits, members, m)
            if nxt is not None:
                dfs(nxt[0], nxt[1], m)

    dfs(1 | (1 << full), [0, full], 0)
    return results, visited


def enumerate_topologies(
    n: int, mode: str = "auto", workers: int = 1
) -> tuple[list[Topology], EnumerationReport]:
    if mode == "auto":
        mode = "raw_scan" if n <= 4 else "closure_dfs"
    start = time.monotonic()
    if mode == "raw_scan":
        if n > 4:
            raise CapabilityError("raw_scan caps at n = 4")
        bits_list, scanned = _raw_scan(n, workers)
    elif mode == "closure_dfs":
        if n > CLOSURE_MAX:
            raise CapabilityError(f"closure_dfs caps at n = {CLOSURE_MAX}")
        bits_list, scanned = _closure_dfs(n)
    else:
        raise CapabilityError(f"unknown enumeration mode {mode!r}")
    bits_list.sort()
    tops = [Topology(n, Family(n, b)) for b in bits_list]
    report = EnumerationReport(
        n=n, mode=mode, total_scanned=scanned,
        counts={"topologies": len(tops)},
        elapsed=time.monotonic() - start)
    return tops, report


def enumerate_connected_door(n: int, mode: str = "auto", workers: int = 1) -> list[Topology]:
    tops, _ = enumerate_topologies(n, mode, workers)
    out = [t for t in tops if space_report(t).connected_door]
    if n >= 2:
        expected = 2 if n == 2 else 2 * n
        assert len(out) == expected, f"connected-door count {len(out)} != {expected}"
        for t in out:
            labels = classify_connected_door(t).labels
            assert labels and all(
                d.kind in ("ExcludedPoint", "IncludedPoint") for d in labels)
    return out


def enumerate_occ_door(n: int, mode: str = "auto", workers: int = 1):
    """Door topologies satisfying OCC; each must be connected-door once the
    space has more than three points."""
    if n < 4:
        return {"note": "OCC is vacuous below four points", "n": n}
    if n > 5:
        raise CapabilityError("occ-door enumeration caps at n = 5")
    tops, _ = enumerate_topologies(n, mode, workers)
    out = []
    for t in tops:
        rep = space_report(t)
        if rep.door and occ_satisfied(t)[0]:
            out.append(t)
            assert rep.connected_door, "door + OCC space is not connected-door"
    return out


def _canonical_solution_order(sols: list[SetFunction]) -> list[SetFunction]:
    return sorted(
        sols, key=lambda f: tuple(v.sort_key() for v in f.values))


def _brute_solutions(
    n: int, values: list[ExactComplex], equation: str
) -> list[SetFunction]:
    top = 1 << n
    value_set = set(values)
    first = 0 if equation == "eq2" else 1
    assigned: list[ExactComplex] = [EC_ZERO] * top
    out: list[SetFunction] = []

    def consistent(m: int, cand: ExactComplex) -> bool:
        if equation == "eq1_disjoint":
            if popcount(m) < 2:
                return True
            a = (m - 1) & m
            while a:
                b = m & ~a
                if a <= b and assigned[a] + assigned[b] != cand:
                    return False
                a = (a - 1) & m
            return True
        # eq2: every pair with union m, both proper
        a = (m - 1) & m
        while a:
            need = m & ~a
            s = a
            while True:
                b = need | s
                if b != m and a <= b:
                    if assigned[a] + assigned[b] != cand + assigned[a & s]:
                        return False
                if s == 0:
                    break
                s = (s - 1) & a
            a = (a - 1) & m
        return True

    def dfs(m: int) -> None:
        if m == top:
            used = {assigned[i] for i in range(first, top)}
            if used == value_set:
                out.append(SetFunction(n, equation == "eq2", tuple(assigned)))
            return
        for cand in values:
            assigned[m] = cand
            if consistent(m, cand):
                dfs(m + 1)
        assigned[m] = EC_ZERO

    dfs(first)
    return _canonical_solution_order(out)


def _modular_solutions(
    n: int, values: list[ExactComplex], equation: str
) -> list[SetFunction]:
    """Solutions via the weight parameterization: disjoint-additive
    solutions are point-weight sums, valuation solutions add a constant."""
    top = 1 << n
    value_set = set(values)
    out: list[SetFunction] = []

    def try_weights(c: ExactComplex, weights: list[ExactComplex], includes_empty: bool):
        vals = []
        for m in range(top):
            v = c
            for x in range(n):
                if (m >> x) & 1:
                    v = v + weights[x]
            vals.append(v)
        dom = range(0 if includes_empty else 1, top)
        used = {vals[m] for m in dom}
        if used == value_set:
            out.append(SetFunction(n, includes_empty, tuple(vals)))

    def rec(weights: list[ExactComplex], choices: list[ExactComplex], c: ExactComplex,
            includes_empty: bool) -> None:
        if len(weights) == n:
            try_weights(c, weights, includes_empty)
            return
        for w in choices:
            weights.append(w)
            rec(weights, choices, c, includes_empty)
            weights.pop()

    if equation == "eq1_disjoint":
        rec([], list(values), EC_ZERO, False)
    else:
        for c in values:
            rec([], [v - c for v in values], c, True)
    return _canonical_solution_order(out)


def enumerate_solutions(
    n: int,
    values: list[ExactComplex],
    equation: str = "eq1_disjoint",
    mode: str = "brute",
) -> list[SetFunction]:
    if equation not in ("eq1_disjoint", "eq2"):
        raise CapabilityError(f"unknown equation {equation!r}")
    if len(set(values)) != len(values) or len(values) not in (2, 3):
        raise CapabilityError("value set must have 2 or 3 distinct members")
    if mode == "brute":
        if n > 4:
            raise CapabilityError("brute solution scan caps at n = 4")
        return _brute_solutions(n, values, equation)
    if mode == "modular":
        if n > CLOSURE_MAX:
            raise CapabilityError(f"modular solution scan caps at n = {CLOSURE_MAX}")
        return _modular_solutions(n, values, equation)
    raise CapabilityError(f"unknown solution mode {mode!r}")


def three_valued_form_bits(n: int) -> set[int]:
    """Family bitsets of every Form1A / Form1B / Form3 instance with
    principal seeds."""
    out: set[int] = set()
    for a in range(n):
        for s in range(n):
            if s == a:
                continue
            for kind in ("Form1A", "Form1B"):
                out.add(construct_topology(
                    FormDescriptor(kind, a=a, seed=s), n).opens.bits)
    for a in range(n):
        for b in range(a + 1, n):
            out.add(construct_topology(
                FormDescriptor("Form3", a=a, b=b), n).opens.bits)
    return out


def induced_topology_survey(n: int, mode: str = "brute") -> dict:
    """Every valuation solution onto {-1, 0, 1}, with each designated value
    in {-1, 1}, either fails the axioms or lands exactly in the set of
    Form1A / Form1B / Form3 instances.  Instances needing free ultrafilters
    never appear."""
    values = [ec(-1), ec(0), ec(1)]
    sols = enumerate_solutions(n, values, "eq2", mode)
    induced: set[int] = set()
    realizers: dict[int, int] = {}
    for f in sols:
        for v in (ec(1), ec(-1)):
            fam = induced_family(f, v)
            if is_topology_bits(n, fam.bits):
                induced.add(fam.bits)
                realizers[fam.bits] = realizers.get(fam.bits, 0) + 1
    expected = three_valued_form_bits(n)
    return {
        "n": n,
        "mode": mode,
        "solutions": len(sols),
        "induced_topologies": len(induced),
        "matches_forms": induced == expected,
        "form2_instances": len(induced - expected),
        "realizer_counts": {format(b, "x"): c for b, c in sorted(realizers.items())},
    }


def counts_report(n: int, mode: str = "auto", workers: int = 1) -> dict:
    if n > 5:
        raise CapabilityError("counts report caps at n = 5")
    tops, rep = enumerate_topologies(n, mode, workers)
    door = 0
    connected_door = 0
    occ_door = 0
    for t in tops:
        r = space_report(t)
        if r.door:
            door += 1
            if n >= 4 and occ_satisfied(t)[0]:
                occ_door += 1
        if r.connected_door:
            connected_door += 1
    out = {
        "n": n,
        "mode": rep.mode,
        "total_scanned": rep.total_scanned,
        "topologies": len(tops),
        "door": door,
        "connected_door": connected_door,
    }
    if n >= 4:
        out["occ_door"] = occ_door
    if n == 1:
        out["degenerate"] = True
    return out


def golden_dir() -> Path:
    env = os.environ.get("DOORLAB_GOLDEN_DIR")
    if env:
        return Path(env)
    return Path(__file__).parent / "goldens" / "v1"


def load_golden(n: int) -> dict | None:
    path = golden_dir() / f"counts_n{n}.json"
    if not path.exists():
        return None
    return json.loads(path.read_text())


def compare_with_golden(n: int, workers: int = 1) -> dict:
    fresh = counts_report(n, workers=workers)
    golden = load_golden(n)
    stable_keys = ("topologies", "door", "connected_door", "occ_door")
    if golden is None:
        return {"n": n, "golden": None, "report": fresh, "match": None}
    match = all(
        fresh.get(k) == golden.get(k) for k in stable_keys if k in golden)
    return {"n": n, "golden": golden, "report": fresh, "match": match}
