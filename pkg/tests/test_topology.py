import pytest

from doorlab.classify import FormDescriptor, construct_topology
from doorlab.core import Family, parse_family, powerset
from doorlab.search import enumerate_connected_door
from doorlab.topology import (
    PreconditionError,
    TopologyError,
    lemma1_check,
    occ_satisfied,
    space_report,
    validate_topology,
)


def sierpinski():
    return validate_topology(parse_family(2, [[], [0], [0, 1]]))


def discrete(n):
    return validate_topology(powerset(n))


def indiscrete(n):
    return validate_topology(parse_family(n, [[], list(range(n))]))


def test_validate_sierpinski():
    assert sierpinski().is_open(0b01)


def test_validate_missing_whole_space():
    with pytest.raises(TopologyError, match="missing"):
        validate_topology(parse_family(2, [[], [0], [1]]))


def test_validate_missing_union():
    with pytest.raises(TopologyError, match="union"):
        validate_topology(parse_family(3, [[], [0], [1], [0, 1, 2]]))


def test_report_sierpinski():
    rep = space_report(sierpinski())
    assert rep.connected and rep.door and rep.connected_door


def test_report_discrete():
    rep = space_report(discrete(2))
    assert not rep.connected and rep.door and not rep.connected_door
    assert rep.clopen_proper_count == 2


def test_report_indiscrete_n3():
    rep = space_report(indiscrete(3))
    assert rep.connected and not rep.door


def test_occ_discrete_n4_witness():
    ok, witness = occ_satisfied(discrete(4))
    assert not ok
    assert witness == (0b0001, 0b0010, 0b0100, 0b1000)


def test_occ_excluded_point_n4():
    top = construct_topology(FormDescriptor("ExcludedPoint", a=3), 4)
    assert occ_satisfied(top)[0]


def test_occ_vacuous_below_four_points():
    for fam_bits in range(1 << 8):
        fam = Family(3, fam_bits)
        try:
            top = validate_topology(fam)
        except TopologyError:
            continue
        assert occ_satisfied(top)[0]


def test_lemma1_included_point_n3():
    top = construct_topology(FormDescriptor("IncludedPoint", a=0), 3)
    # A={0} open, B={1} closed, C={2}: {0,2} open and {1,2} closed.
    assert top.is_open(0b101)
    assert top.is_closed(0b110)
    assert lemma1_check(top)[0]


def test_lemma1_excluded_point_n4_exhaustive():
    top = construct_topology(FormDescriptor("ExcludedPoint", a=3), 4)
    assert lemma1_check(top)[0]


def test_lemma1_precondition():
    with pytest.raises(PreconditionError):
        lemma1_check(discrete(2))


def test_n1_indiscrete_is_degenerate_connected_door():
    rep = space_report(indiscrete(1))
    assert rep.connected_door


def test_connected_door_singleton_profile():
    # At least one closed singleton always.  The biconditional "at least
    # two open points iff exactly one closed singleton" needs three or more
    # points: the two-point space has one open point and one closed
    # singleton at once.
    for n in range(2, 6):
        for top in enumerate_connected_door(n):
            rep = space_report(top)
            assert len(rep.closed_singletons) >= 1
            if n >= 3:
                two_open = len(rep.open_singletons) >= 2
                one_closed = len(rep.closed_singletons) == 1
                assert two_open == one_closed


def test_t1_connected_door_empty_on_finite_sets():
    for n in range(2, 6):
        for top in enumerate_connected_door(n):
            assert not space_report(top).t1
