import pytest

from doorlab.classify import (
    FormDescriptor,
    UnconstructibleError,
    classify_connected_door,
    construct_topology,
    recognize_form,
)
from doorlab.core import parse_family
from doorlab.topology import PreconditionError, validate_topology


def test_excluded_point_n3():
    top = construct_topology(FormDescriptor("ExcludedPoint", a=2), 3)
    assert top.opens.to_subsets() == [[], [0], [1], [0, 1], [0, 1, 2]]


def test_form3_n4():
    top = construct_topology(FormDescriptor("Form3", a=0, b=1), 4)
    assert top.opens.to_subsets() == [[], [2], [3], [2, 3], [0, 1, 2, 3]]


def test_form1a_n3():
    top = construct_topology(FormDescriptor("Form1A", a=0, seed=1), 3)
    assert top.opens.to_subsets() == [[], [1], [1, 2], [0, 1, 2]]


def test_t2shape_supersets_of_pair():
    top = construct_topology(
        FormDescriptor("T2Shape", A=0b0011, p=0, q=2), 4)
    expected = {m for m in range(16) if m & 0b0101 == 0b0101} | {0}
    assert set(top.opens.members()) == expected


def test_form2_unconstructible():
    with pytest.raises(UnconstructibleError, match="free ultrafilters"):
        construct_topology(FormDescriptor("Form2", A=0b01), 3)


def test_free_seed_unconstructible():
    with pytest.raises(UnconstructibleError):
        construct_topology(FormDescriptor("UltrafilterType", free=True), 3)


def test_classify_included_point_n3():
    top = construct_topology(FormDescriptor("IncludedPoint", a=0), 3)
    labels = classify_connected_door(top).labels
    assert labels == (FormDescriptor("IncludedPoint", a=0),)


def test_classify_sierpinski_coincidence():
    top = validate_topology(parse_family(2, [[], [0], [0, 1]]))
    kinds = {(d.kind, d.a) for d in classify_connected_door(top).labels}
    assert kinds == {("IncludedPoint", 0), ("ExcludedPoint", 1)}


def test_classify_excluded_point_n4():
    top = construct_topology(FormDescriptor("ExcludedPoint", a=3), 4)
    labels = classify_connected_door(top).labels
    assert labels == (FormDescriptor("ExcludedPoint", a=3),)


def test_classify_precondition():
    from doorlab.core import powerset
    with pytest.raises(PreconditionError):
        classify_connected_door(validate_topology(powerset(2)))


def test_classify_n1_degenerate():
    top = validate_topology(parse_family(1, [[], [0]]))
    lab = classify_connected_door(top)
    assert lab.degenerate
    assert {d.kind for d in lab.labels} == {"IncludedPoint", "ExcludedPoint"}


def test_recognize_form3():
    top = construct_topology(FormDescriptor("Form3", a=0, b=1), 4)
    labels = recognize_form(top).labels
    assert FormDescriptor("Form3", a=0, b=1) in labels


def test_recognize_t2_all_separating_sets():
    top = construct_topology(FormDescriptor("T2Shape", A=0b0001, p=0, q=2), 4)
    t2 = [d for d in recognize_form(top).labels if d.kind == "T2Shape"]
    # One label per subset separating 0 from 2, for each admissible seed pair.
    seps = [(A, p, q) for A in range(1, 15)
            for p in (0, 2) for q in (0, 2)
            if p != q and (A >> p) & 1 and not (A >> q) & 1]
    assert len(t2) == len(seps)
    # Supersets of a pair are also the Form1B instance at that pair.
    assert any(d.kind == "Form1B" for d in recognize_form(top).labels)


def test_recognize_indiscrete_empty():
    top = validate_topology(parse_family(3, [[], [0, 1, 2]]))
    assert recognize_form(top).labels == ()


@pytest.mark.parametrize("n", [2, 3, 4])
def test_roundtrip_constructible_descriptors(n):
    descs = []
    descs += [FormDescriptor("ExcludedPoint", a=a) for a in range(n)]
    descs += [FormDescriptor("IncludedPoint", a=a) for a in range(n)]
    for a in range(n):
        for s in range(n):
            if s != a:
                descs.append(FormDescriptor("Form1A", a=a, seed=s))
                descs.append(FormDescriptor("Form1B", a=a, seed=s))
    descs += [FormDescriptor("Form3", a=a, b=b)
              for a in range(n) for b in range(a + 1, n)]
    for d in descs:
        top = construct_topology(d, n)
        if d.kind in ("ExcludedPoint", "IncludedPoint"):
            assert d in classify_connected_door(top).labels
        else:
            assert d in recognize_form(top).labels


def test_descriptor_json():
    d = FormDescriptor("Form3", a=0, b=1)
    assert d.to_json() == {"kind": "Form3", "a": 0, "b": 1}
