import json

import pytest
import zariski


def test_entailment_certificate():
    cert = zariski.entails("Z/6", "1", ["2", "3"])
    assert cert == {"exponent": 1, "cofactors": [("2", 0), ("1", 1)]}
    assert zariski.entails("Z/6", "2", ["3"]) is None


def test_truth_open_and_forcing():
    assert zariski.truth_open("Z/12", "3 = 0") == ["4"]
    assert zariski.truth_open("Z/6", "x = 0", {"x": "3"}) == ["2"]
    assert zariski.forces("Z", "1", "false") == "false"
    assert zariski.forces("Z/1", "1", "false") == "true"


def test_nabla():
    assert zariski.nabla_translate("D(2) | D(3)") == "nabla(nabla(D(2)) | nabla(D(3)))"
    assert zariski.classify("D(2) | D(3)") == "coherent"


def test_prover_and_checker():
    text = zariski.prove("D(1) |- D(2) | D(3)", "Z/6")
    assert text is not None
    ok, _ = zariski.check_derivation(text, "Z/6", True)
    assert ok
    ok, reason = zariski.check_derivation(text)
    assert not ok and reason
    assert zariski.prove("D(2) |- D(3)", "Z/6") is None
    assert json.loads(text)["conclusion"] == "D(1) |- D(2) | D(3)"


def test_filters_and_apps():
    assert sorted(zariski.prime_filters("Z/6")) == [[1, 2, 4, 5], [1, 3, 5]]
    assert zariski.mccoy("Z/6", "2")["witness"] == "3"
    assert zariski.mccoy("Z/6", "2; 3")["injective"]
    assert zariski.richman("Z/6", "1, 0")["kernel"] is not None
    assert zariski.richman("Z/1", "0, 0")["certificate"] is not None
    assert zariski.generic_freeness("Z/6", "2")["rank"] == 0


def test_errors():
    with pytest.raises(ValueError):
        zariski.truth_open("Z/6", "D(2")
    with pytest.raises(Exception):
        zariski.describe_ring("W")


def test_criterion():
    assert zariski.run_criterion(10)["passed"]
