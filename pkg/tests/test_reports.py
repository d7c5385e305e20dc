import json

import pytest

from pascalmod import FAIL, NOT_APPLICABLE, PASS, CheckReport


def test_roundtrip():
    r = CheckReport("thm1", {"n": 3}, FAIL, {"det": "-1", "expected": 1})
    obj = json.loads(r.dumps())
    assert set(obj) == {"check", "params", "verdict", "witness"}
    assert CheckReport.from_json(obj) == r


def test_pass_has_no_witness_key():
    r = CheckReport("thm4", {"n": 1}, PASS)
    assert "witness" not in r.to_json()
    assert r.passed and not r.failed


def test_validation():
    with pytest.raises(ValueError):
        CheckReport("x", {}, "maybe")
    with pytest.raises(ValueError):
        CheckReport("x", {}, FAIL)
    assert CheckReport("x", {}, NOT_APPLICABLE).verdict == "not-applicable"
