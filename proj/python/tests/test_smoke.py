import json

import pytest

import scalecomplex as sc


@pytest.fixture(scope="module")
def knc():
    return sc.build_non_chromatic_complex()


def test_f_vector(knc):
    assert knc.f_vector() == [1, 12, 66, 208, 399, 456, 282, 72, 3]
    assert len(knc) == 1499


def test_facets_and_classes(knc):
    assert len(knc.facets()) == 57
    assert not knc.is_pure()
    rows = {(r["pitch_classes"], r["interval_sequence"], r["scale_count"], r["name"]) for r in sc.classify_facets(knc)}
    assert (7, "2-2-1-2-2-2-1", 12, "major") in rows
    assert (6, "1-3-1-3-1-3", 4, "augmented") in rows
    assert len(rows) == 7
    assert len(sc.enumerate_maximal_sequences()) == 7


def test_homology(knc):
    assert sc.reduced_betti(knc) == [0, 0, 0, 0, 0, 0, 3, 0, 0]
    hollow = sc.build_from_facets(3, [[0, 1], [1, 2], [0, 2]])
    assert sc.reduced_betti(hollow) == [0, 0, 1]
    assert sc.connected_components(sc.build_from_facets(3, [[0, 1], [2]])) == 2


def test_scales():
    assert sc.interval_sequence([0, 2, 4, 5, 7, 9, 11]) == [2, 2, 1, 2, 2, 2, 1]
    assert sc.is_non_chromatic(sc.parse_scale("C D E F G A B"))
    assert not sc.is_non_chromatic([0, 1, 4, 5, 7, 9, 11])
    assert sc.mode_count([0, 2, 4, 5, 7, 9, 11]) == 84
    with pytest.raises(sc.DomainError):
        sc.interval_sequence([])


def test_collapse(knc):
    reduced, log, complete = sc.collapse_above_dim(knc, 5)
    assert complete
    assert reduced.max_dimension == 5
    assert sc.reduced_betti(reduced)[6] == 3
    assert all(len(step["facet"]) == len(step["free_face"]) + 1 for step in log)


def test_spheres_and_verify(knc):
    report = sc.sphere_report(knc)
    assert len(report["spheres"]) == 4
    assert all(s["certificate"]["pass"] for s in report["spheres"])
    assert [r["rank"] for r in report["basis_ranks"]] == [1, 1, 1, 1, 3, 3, 3, 3, 3]
    assert all(passed for _, passed, _ in sc.verify())


def test_json_round_trip(knc):
    text = json.dumps(knc.to_json())
    again = sc.complex_from_json(text)
    assert again.f_vector() == knc.f_vector()
    with pytest.raises(sc.ParseError):
        sc.complex_from_json("{not json")


def test_capacity():
    with pytest.raises(sc.CapacityError):
        sc.build_non_chromatic_complex(sc.PitchUniverse(30, 3))
