"""Exact-arithmetic set functions and the identities they solve.

Two identities are checked throughout:

  disjoint additivity   f(A) + f(B) = f(A|B)          (A, B disjoint nonempty)
  valuation             f(A) + f(B) = f(A|B) + f(A&B) (all A, B)

Values are exact complex rationals; no floating point is used anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import filters
from .classify import FormDescriptor, UnconstructibleError, construct_topology
from .core import DomainError, Family, check_ground, complement, full_mask, popcount
from .topology import Topology, TopologyError, space_report, validate_topology


@dataclass(frozen=True)
class ExactComplex:
    re: Fraction
    im: Fraction = Fraction(0)

    def __add__(self, other: "ExactComplex") -> "ExactComplex":
        return ExactComplex(self.re + other.re, self.im + other.im)

    def __sub__(self, other: "ExactComplex") -> "ExactComplex":
        return ExactComplex(self.re - other.re, self.im - other.im)

    def __neg__(self) -> "ExactComplex":
        return ExactComplex(-self.re, -self.im)

    def scale(self, k: Fraction | int) -> "ExactComplex":
        return ExactComplex(self.re * k, self.im * k)

    @property
    def is_zero(self) -> bool:
        return self.re == 0 and self.im == 0

    @property
    def is_real(self) -> bool:
        return self.im == 0

    def sort_key(self) -> tuple[Fraction, Fraction]:
        return (self.re, self.im)

    def __str__(self) -> str:
        if self.im == 0:
            return str(self.re)
        if self.re == 0:
            return f"{self.im}i"
        sign = "+" if self.im > 0 else "-"
        return f"{self.re}{sign}{abs(self.im)}i"

    def to_json(self) -> dict:
        return {"re": str(self.re), "im": str(self.im)}


EC_ZERO = ExactComplex(Fraction(0))


def ec(re, im=0) -> ExactComplex:
    return ExactComplex(Fraction(re), Fraction(im))


def parse_value(text: str) -> ExactComplex:
    """Parse '3', '-1/2', '2i', '1+2i', '1/2-3/4i'."""
    t = text.strip().replace(" ", "")
    if not t:
        raise DomainError("empty value")
    try:
        if t.endswith("i"):
            body = t[:-1]
            split = max(body.rfind("+", 1), body.rfind("-", 1))
            re_txt, im_txt = (body[:split], body[split:]) if split > 0 else ("", body)
            if im_txt in ("", "+"):
                im_part = Fraction(1)
            elif im_txt == "-":
                im_part = Fraction(-1)
            else:
                im_part = Fraction(im_txt)
            re_part = Fraction(re_txt) if re_txt else Fraction(0)
        else:
            re_part, im_part = Fraction(t), Fraction(0)
    except (ValueError, ZeroDivisionError) as exc:
        raise DomainError(f"cannot parse value {text!r}") from exc
    return ExactComplex(re_part, im_part)


@dataclass(frozen=True)
class SetFunction:
    """Total assignment from P(X) (or P(X) minus the empty set) to exact
    complex values."""

    n: int
    includes_empty: bool
    values: tuple[ExactComplex, ...]  # indexed by mask; slot 0 unused if no empty

    def __post_init__(self) -> None:
        check_ground(self.n)
        if len(self.values) != 1 << self.n:
            raise DomainError("value table size does not match the ground set")

    def domain(self) -> range:
        return range(0 if self.includes_empty else 1, 1 << self.n)

    def __call__(self, mask: int) -> ExactComplex:
        if mask == 0 and not self.includes_empty:
            raise DomainError("function not defined on the empty set")
        return self.values[mask]

    def value_set(self) -> list[ExactComplex]:
        return sorted({self.values[m] for m in self.domain()},
                      key=ExactComplex.sort_key)

    def to_json(self) -> dict:
        from .core import points_of
        return {
            "n": self.n,
            "includes_empty": self.includes_empty,
            "values": [
                {"set": points_of(m), **self.values[m].to_json()}
                for m in self.domain()
            ],
        }


def set_function(n: int, includes_empty: bool, table: dict[int, ExactComplex]) -> SetFunction:
    vals = []
    for m in range(1 << n):
        if m == 0 and not includes_empty:
            vals.append(EC_ZERO)
            continue
        if m not in table:
            raise DomainError(f"no value assigned to mask {m}")
        vals.append(table[m])
    return SetFunction(n, includes_empty, tuple(vals))


def satisfies_valuation(f: SetFunction) -> tuple[bool, tuple[int, int] | None]:
    """f(A) + f(B) = f(A|B) + f(A&B) over all pairs of the domain.  The
    witness, if any, is the lexicographically least violating (A, B)."""
    dom = list(f.domain())
    for a in dom:
        fa = f.values[a]
        for b in dom:
            if b < a:
                continue
            u, i = a | b, a & b
            if i == 0 and not f.includes_empty:
                continue
            if fa + f.values[b] != f.values[u] + f.values[i]:
                return False, (a, b)
    return True, None


def satisfies_disjoint_additivity(f: SetFunction) -> tuple[bool, tuple[int, int] | None]:
    """f(A) + f(B) = f(A|B) for disjoint nonempty A, B."""
    top = 1 << f.n
    for a in range(1, top):
        fa = f.values[a]
        for b in range(a + 1, top):
            if a & b:
                continue
            if fa + f.values[b] != f.values[a | b]:
                return False, (a, b)
    return True, None


@dataclass(frozen=True)
class ModularParams:
    """f(A) = c + sum of weights over the points of A."""
    n: int
    c: ExactComplex
    weights: tuple[ExactComplex, ...]

    def to_json(self) -> dict:
        return {"n": self.n, "c": self.c.to_json(),
                "weights": [w.to_json() for w in self.weights]}


def modular_decompose(f: SetFunction) -> ModularParams:
    """Recover (c, weights) from a valuation solution.  Raises ValueError
    carrying the violating pair when f is not a valuation."""
    if not f.includes_empty:
        raise DomainError("decomposition needs a value at the empty set")
    ok, witness = satisfies_valuation(f)
    if not ok:
        raise ValueError(f"not a valuation; violated at pair {witness}")
    c = f.values[0]
    weights = tuple(f.values[1 << x] - c for x in range(f.n))
    return ModularParams(f.n, c, weights)


def modular_compose(p: ModularParams, includes_empty: bool = True) -> SetFunction:
    vals = []
    for m in range(1 << p.n):
        v = p.c
        for x in range(p.n):
            if (m >> x) & 1:
                v = v + p.weights[x]
        vals.append(v)
    return SetFunction(p.n, includes_empty, tuple(vals))


def induced_family(f: SetFunction, v: ExactComplex) -> Family:
    """{empty, X} together with the preimage of v."""
    bits = 1 | (1 << full_mask(f.n))
    for m in f.domain():
        if f.values[m] == v:
            bits |= 1 << m
    return Family(f.n, bits)


def extend_by_zero_at_empty(f: SetFunction) -> SetFunction:
    """The auxiliary extension used when moving from disjoint additivity to
    the valuation identity: value 0 at the empty set."""
    if f.includes_empty:
        raise DomainError("function already defined on the empty set")
    vals = list(f.values)
    vals[0] = EC_ZERO
    return SetFunction(f.n, True, tuple(vals))


def verify_two_valued_additive(f: SetFunction) -> dict:
    """For a two-valued surjective solution of disjoint additivity on at
    least three points: 0 is a value, the preimage of f(X) is an
    ultrafilter, and adding the empty set gives a connected door topology.
    """
    if f.includes_empty:
        raise DomainError("disjoint additivity uses the empty-free domain")
    if f.n < 3:
        raise DomainError("needs a ground set with at least three points")
    values = f.value_set()
    if len(values) != 2:
        raise DomainError("function is not onto a two-element value set")
    ok, witness = satisfies_disjoint_additivity(f)
    if not ok:
        raise DomainError(f"disjoint additivity fails at pair {witness}")

    zero_in_values = any(v.is_zero for v in values)
    full = full_mask(f.n)
    fx = f.values[full]
    pre_bits = 0
    for m in range(1, 1 << f.n):
        if f.values[m] == fx:
            pre_bits |= 1 << m
    pre = Family(f.n, pre_bits)
    sigma = Family(f.n, (1 << (1 << f.n)) - 1)
    is_uf = filters.is_ultrafilter(pre, sigma)

    fam = Family(f.n, pre_bits | 1)
    try:
        top = validate_topology(fam)
        is_cd = space_report(top).connected_door
    except TopologyError:
        is_cd = False

    return {
        "zero_in_values": zero_in_values,
        "preimage_is_ultrafilter": is_uf,
        "induces_connected_door": is_cd,
        "ok": zero_in_values and is_uf and is_cd,
    }


def classify_value_shape(values: list[ExactComplex]) -> dict:
    """Decide whether a 3-element value set is {-z, 0, z} or {0, z, 2z}."""
    if len(set(values)) != 3:
        raise DomainError("need exactly three distinct values")
    vs = set(values)
    nonzero = [v for v in vs if not v.is_zero]
    if len(nonzero) == 3:
        return {"shape": "Other"}
    u, w = sorted(nonzero, key=ExactComplex.sort_key)
    if u == -w:
        z = w  # the larger of the pair in sort order
        return {"shape": "NegZeroPos", "z": z}
    if w == u + u:
        return {"shape": "ZeroZ2Z", "z": u}
    if u == w + w:
        return {"shape": "ZeroZ2Z", "z": w}
    return {"shape": "Other"}


def _in_principal(m: int, seed: int, avoid: int) -> bool:
    """Membership in the principal ultrafilter at seed on X minus avoid."""
    return bool((m >> seed) & 1) and not (m >> avoid) & 1


def f_from_form(d: FormDescriptor, n: int) -> tuple[SetFunction, ExactComplex]:
    """The explicit piecewise function attached to a constructible form,
    with its designated preimage value.  The function is a valuation and its
    induced family at the designated value reproduces the form's topology.
    """
    if d.kind == "Form2" or d.free:
        raise UnconstructibleError(
            "unconstructible: free ultrafilters do not exist on finite sets")
    one, zero, neg = ec(1), EC_ZERO, ec(-1)
    vals: list[ExactComplex] = []

    if d.kind in ("IncludedPoint", "UltrafilterType"):
        point = d.a if d.kind == "IncludedPoint" else d.seed
        vals = [one if (m >> point) & 1 else zero for m in range(1 << n)]
        return SetFunction(n, True, tuple(vals)), one

    if d.kind == "ExcludedPoint":
        vals = [zero if (m >> d.a) & 1 else one for m in range(1 << n)]
        return SetFunction(n, True, tuple(vals)), one

    if d.kind == "Form1A":
        a, s = d.a, d.seed
        for m in range(1 << n):
            if _in_principal(m, s, a):
                vals.append(one)
            elif not (m >> a) & 1 or _in_principal(m & ~(1 << a), s, a):
                # outside the filter below X minus {a}, or {a} joined with
                # a filter member
                vals.append(zero)
            else:
                vals.append(neg)
        return SetFunction(n, True, tuple(vals)), one

    if d.kind == "Form1B":
        a, s = d.a, d.seed
        for m in range(1 << n):
            has_a = bool((m >> a) & 1)
            rest_in = _in_principal(m & ~(1 << a), s, a)
            if has_a and rest_in:
                vals.append(one)
            elif (not has_a and _in_principal(m, s, a)) or (has_a and not rest_in):
                vals.append(zero)
            else:
                vals.append(neg)
        return SetFunction(n, True, tuple(vals)), one

    if d.kind == "Form3":
        pair = (1 << d.a) | (1 << d.b)
        for m in range(1 << n):
            k = popcount(m & pair)
            vals.append((neg, zero, one)[k])
        return SetFunction(n, True, tuple(vals)), neg

    if d.kind == "T2Shape":
        need = (1 << d.p) | (1 << d.q)
        two = ec(2)
        for m in range(1 << n):
            k = popcount(m & need)
            vals.append((zero, one, two)[k])
        return SetFunction(n, True, tuple(vals)), two

    raise DomainError(f"unknown form kind {d.kind!r}")


# The ten pair subcases of the Form1A valuation check, keyed by the
# unordered pair of operand categories:
#   1: in the ultrafilter on X minus {a}
#   2: inside X minus {a} but not in the ultrafilter
#   3: {a} joined with an ultrafilter member
#   4: {a} joined with a non-member
_SUBCASE_INDEX = {
    frozenset((1,)): 1, frozenset((1, 2)): 2, frozenset((1, 3)): 3,
    frozenset((1, 4)): 4, frozenset((2, 3)): 5, frozenset((3,)): 6,
    frozenset((3, 4)): 7, frozenset((2,)): 8, frozenset((2, 4)): 9,
    frozenset((4,)): 10,
}


def form1a_pair_subcase(a: int, seed: int, A: int, B: int) -> int:
    """Which of the ten Form1A verification subcases the pair (A, B) is."""

    def cat(m: int) -> int:
        has_a = bool((m >> a) & 1)
        rest_in = _in_principal(m & ~(1 << a), seed, a)
        if not has_a:
            return 1 if _in_principal(m, seed, a) else 2
        return 3 if rest_in else 4

    return _SUBCASE_INDEX[frozenset((cat(A), cat(B)))]


def check_inclusion_exclusion3(f: SetFunction) -> bool:
    """Three-set inclusion-exclusion identity over all triples."""
    if not f.includes_empty:
        raise DomainError("identity ranges over the full power set")
    top = 1 << f.n
    v = f.values
    for a in range(top):
        for b in range(a, top):
            for c in range(b, top):
                lhs = v[a | b | c]
                rhs = (v[a] + v[b] + v[c]
                       - v[a & b] - v[b & c] - v[a & c]
                       + v[a & b & c])
                if lhs != rhs:
                    return False
    return True


def increasing_filter_check(f: SetFunction) -> dict:
    """For a real-valued monotone valuation, the preimage of f(X) is a
    filter."""
    if not f.includes_empty:
        raise DomainError("check ranges over the full power set")
    for m in f.domain():
        if not f.values[m].is_real:
            raise DomainError("non-real value encountered")
    top = 1 << f.n
    increasing = True
    for a in range(top):
        for x in range(f.n):
            b = a | (1 << x)
            if b != a and f.values[a].re > f.values[b].re:
                increasing = False
                break
        if not increasing:
            break
    report: dict = {"is_increasing": increasing}
    ok_val, _ = satisfies_valuation(f)
    report["is_valuation"] = ok_val
    if increasing and ok_val:
        full = full_mask(f.n)
        fx = f.values[full]
        pre = [m for m in range(top) if f.values[m] == fx]
        bits = 0
        for m in pre:
            bits |= 1 << m
        # Intersection- and upward-closure only: a constant function's
        # preimage is the whole power set, the improper filter, and the
        # monotone-preimage fact holds in that generality.
        inter_closed = all((bits >> (a & b)) & 1 for a in pre for b in pre)
        upward_closed = all(
            (bits >> v) & 1
            for u in pre for v in range(top) if u & ~v == 0)
        report["preimage_is_filter"] = bool(pre) and inter_closed and upward_closed
        report["preimage_is_proper"] = 0 not in pre
        report["ok"] = report["preimage_is_filter"]
    else:
        report["ok"] = True  # hypothesis not met; nothing to assert
    return report


def lemma_two_valued_report(values: dict[int, ExactComplex], sigma: Family) -> dict:
    """The three structural facts about a two-valued surjective valuation
    on an algebra: complement values split, preimages are down/up closed,
    and both preimages are union- and intersection-closed."""
    n = sigma.n
    members = list(sigma.members())
    vset = sorted({values[m] for m in members}, key=ExactComplex.sort_key)
    if len(vset) != 2:
        raise DomainError("function is not onto a two-element value set")
    z_pair = set(vset)
    full = full_mask(n)

    split_ok = all(
        {values[m], values[complement(m, n)]} == z_pair for m in members)

    v_empty, v_full = values[0], values[full]
    down_ok = all(
        values[a] == v_empty
        for y in members if values[y] == v_empty
        for a in members if a & ~y == 0)
    up_ok = all(
        values[v] == v_full
        for u in members if values[u] == v_full
        for v in members if u & ~v == 0)

    closed_ok = True
    for z in vset:
        pre = [m for m in members if values[m] == z]
        for i, a in enumerate(pre):
            for b in pre[i:]:
                if values[a | b] != z or values[a & b] != z:
                    closed_ok = False

    return {
        "complement_split": split_ok,
        "down_up_closed": down_ok and up_ok,
        "preimages_lattice_closed": closed_ok,
        "ok": split_ok and down_ok and up_ok and closed_ok,
    }


def valuation_on_algebra(values: dict[int, ExactComplex], sigma: Family) -> bool:
    members = list(sigma.members())
    for i, a in enumerate(members):
        for b in members[i:]:
            if values[a] + values[b] != values[a | b] + values[a & b]:
                return False
    return True
