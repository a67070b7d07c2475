import pytest

from doorlab.search import (
    CapabilityError,
    compare_with_golden,
    counts_report,
    enumerate_connected_door,
    enumerate_occ_door,
    enumerate_solutions,
    enumerate_topologies,
    induced_topology_survey,
    load_golden,
)
from doorlab.valuations import ec


TOPOLOGY_COUNTS = {1: 1, 2: 4, 3: 29, 4: 355, 5: 6942}


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_topology_totals(n):
    tops, rep = enumerate_topologies(n)
    assert len(tops) == TOPOLOGY_COUNTS[n]
    bits = [t.opens.bits for t in tops]
    assert bits == sorted(bits)


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_mode_agreement_topologies(n):
    raw = [t.opens.bits for t in enumerate_topologies(n, "raw_scan")[0]]
    dfs = [t.opens.bits for t in enumerate_topologies(n, "closure_dfs")[0]]
    assert raw == dfs


def test_raw_scan_cap():
    with pytest.raises(CapabilityError, match="n = 4"):
        enumerate_topologies(5, "raw_scan")


def test_closure_cap():
    with pytest.raises(CapabilityError, match="n = 6"):
        enumerate_topologies(7, "closure_dfs")


def test_worker_determinism():
    for workers in (1, 2, 5):
        bits = [t.opens.bits
                for t in enumerate_topologies(4, "raw_scan", workers=workers)[0]]
        assert bits == [t.opens.bits
                        for t in enumerate_topologies(4, "raw_scan", workers=1)[0]]


@pytest.mark.parametrize("n,count", [(2, 2), (3, 6), (4, 8), (5, 10)])
def test_connected_door_counts(n, count):
    assert len(enumerate_connected_door(n)) == count


def test_occ_door_matches_connected_door():
    for n in (4, 5):
        occ = {t.opens.bits for t in enumerate_occ_door(n)}
        cd = {t.opens.bits for t in enumerate_connected_door(n)}
        assert occ == cd


def test_occ_door_below_four_points_is_note():
    out = enumerate_occ_door(3)
    assert isinstance(out, dict) and "note" in out


class TestSolutions:
    def test_two_valued_n3(self):
        sols = enumerate_solutions(3, [ec(0), ec(1)], "eq1_disjoint", "brute")
        assert len(sols) == 3
        # Each solution is the indicator of one point.
        for f in sols:
            ones = [p for p in range(3) if f.values[1 << p] == ec(1)]
            assert len(ones) == 1

    def test_no_zero_no_solutions(self):
        assert enumerate_solutions(3, [ec(1), ec(2)], "eq1_disjoint", "brute") == []

    def test_three_valued_counts_n4(self):
        sym = enumerate_solutions(4, [ec(-1), ec(0), ec(1)], "eq1_disjoint", "brute")
        lad = enumerate_solutions(4, [ec(0), ec(1), ec(2)], "eq1_disjoint", "brute")
        assert len(sym) == 12
        assert len(lad) == 6

    @pytest.mark.parametrize("equation,values", [
        ("eq1_disjoint", [ec(0), ec(1)]),
        ("eq1_disjoint", [ec(-1), ec(0), ec(1)]),
        ("eq2", [ec(-1), ec(0), ec(1)]),
    ])
    @pytest.mark.parametrize("n", [2, 3, 4])
    def test_brute_equals_modular(self, n, equation, values):
        brute = enumerate_solutions(n, values, equation, "brute")
        modular = enumerate_solutions(n, values, equation, "modular")
        assert [f.values for f in brute] == [f.values for f in modular]

    def test_bad_value_set(self):
        with pytest.raises(CapabilityError):
            enumerate_solutions(3, [ec(1)], "eq1_disjoint")
        with pytest.raises(CapabilityError):
            enumerate_solutions(3, [ec(1), ec(1)], "eq1_disjoint")

    def test_brute_cap(self):
        with pytest.raises(CapabilityError):
            enumerate_solutions(5, [ec(0), ec(1)], "eq1_disjoint", "brute")


def test_survey_n3_both_modes():
    for mode in ("brute", "modular"):
        rep = induced_topology_survey(3, mode)
        assert rep["matches_forms"]
        assert rep["form2_instances"] == 0


def test_counts_report_n2():
    rep = counts_report(2)
    assert rep["topologies"] == 4
    assert rep["door"] == 3
    assert rep["connected_door"] == 2


def test_counts_report_n1_degenerate():
    rep = counts_report(1)
    assert rep["topologies"] == 1
    assert rep["connected_door"] == 1
    assert rep["degenerate"]


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_golden_files_match(n):
    golden = load_golden(n)
    assert golden is not None, "golden file missing"
    result = compare_with_golden(n)
    assert result["match"] is True
