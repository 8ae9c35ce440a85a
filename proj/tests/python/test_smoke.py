import json

import pytest

import bch_atlas as ba


def test_family_lengths():
    assert ba.family_length("anti", 2, 5) == 341
    assert ba.family_length("projective", 4, 5) == 341
    assert ba.family_length("primitive", 3, 4) == 80


def test_cosets():
    assert ba.cosets(2, 15) == [(0, 1), (1, 4), (3, 4), (5, 2), (7, 4)]
    assert ba.coset(2, 15, 3) == [3, 6, 9, 12]


def test_leaders():
    assert ba.largest_leaders(2, 341, 2) == [(165, 5), (149, 10)]
    assert ba.leader_formula("anti", 2, 5, 2)[:2] == (149, 10)
    assert ba.leader_formula("projective", 4, 5, 2)[0] == 229
    assert ba.leader_formula("projective", 5, 9, 2) is None


def test_dimensions():
    assert ba.dimension("anti", 2, 4, 9) == 53
    assert ba.dimension_formula("anti", 2, 5, 149) == (16, "anti.second-leader")
    assert ba.dimension("projective", 4, 5, 233) == 6


def test_generator_and_distance():
    assert ba.generator("primitive", 2, 4, 3) == [1, 1, 0, 0, 1]
    assert ba.min_distance("primitive", 2, 4, 7) == 7


def test_dually_bch():
    assert ba.dually_bch("primitive", 2, 6, 4) == (False, False)


def test_report_key_order():
    r = ba.params_report("anti", 2, 5, 149)
    assert list(r)[:4] == ["family", "q", "m", "s"]
    assert list(r)[-1] == "notes"
    assert r["d_exact"] == 149
    assert json.loads(json.dumps(r)) == r


def test_verify_suite():
    r = ba.verify("tilde-dual", threads=2)
    assert r["summary"]["disagree"] == 0
    assert r["summary"]["total"] == len(r["cases"])
    assert "distances" in ba.suite_names()


def test_errors():
    with pytest.raises(ba.Error):
        ba.dimension("primitive", 6, 3, 5)
    with pytest.raises(ValueError):
        ba.dimension("primitive", 2, 4, 99)
