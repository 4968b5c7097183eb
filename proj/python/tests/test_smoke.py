import json
from fractions import Fraction
from pathlib import Path

import pytest

import quadlie

FIXTURES = Path(__file__).resolve().parents[2] / "fixtures"


def zeros(rows, cols):
    return [[0] * cols for _ in range(rows)]


def test_catalog_has_nine_families():
    tags = [f["tag"] for f in quadlie.catalog()]
    assert tags == ["1.1", "2.1", "2.2", "2.3", "2.4", "3.1", "3.2", "3.3", "3.4"]


def test_metric_catalog():
    mc = quadlie.metric_catalog(3)
    assert mc["metric"] == ["1.1", "2.1", "3.3", "3.4"]
    assert mc["rejected"]["3.1"][0] == "b1"


def test_reduce_lambda_rank_one():
    lam = [[2, 4, 1], [0, 0, 3], [1, 2, 0], [0, 0, 0]]
    red = quadlie.reduce_lambda(lam)
    assert red["form"] == "E11"
    assert red["canonical"][0][0] == Fraction(1)
    assert all(isinstance(v, Fraction) for row in red["g"] for v in row)


def test_classify_scalar_mu():
    mu = [[Fraction(1, 2), 0, 0], [0, Fraction(1, 2), 0], [0, 0, 0]]
    out = quadlie.classify(zeros(3, 3), zeros(3, 3), zeros(3, 3), mu)
    assert out["tag"] == "3.3"
    assert out["normal_form"]["mu"] == [[1, 0, 0], [0, 1, 0], [0, 0, 1]]


def test_check_names_failures():
    lam = [[1, 0, 0], [0, 1, 0], [0, 0, 1]]
    mu = zeros(3, 3)
    mu[2][1] = 1
    assert len(quadlie.check(zeros(3, 3), zeros(3, 3), lam, mu)) == 1


def test_example_document():
    doc = json.loads((FIXTURES / "example-3-2.json").read_text())
    rep = quadlie.analyze(doc)
    assert rep["nilpotent"] is False
    assert rep["invariant"] is True
    assert rep["center"] == [{"v1": "1"}, {"c": "1"}]


def test_extend_and_metric():
    text = (FIXTURES / "case-1-1.json").read_text()
    assert quadlie.extend(text)["failures"] == []
    assert quadlie.check_metric(text)["metric"] is True
    bad = (FIXTURES / "perturbed-mu.json").read_text()
    assert quadlie.extend(bad)["failures"] == ["d mu + e_phi(lambda) != 0"]


def test_split_check():
    out = quadlie.split_check("3.4", 5)
    assert out["split_dim"] == 2
    assert out["remainder_tag"] == "3.4"


def test_bad_rational_raises():
    doc = {"name": "a", "dim": 2, "basis": ["x", "y"],
           "brackets": [{"left": "x", "right": "y", "result": {"x": "1/0"}}]}
    with pytest.raises(quadlie.InputError, match="brackets\\[0\\].result.x"):
        quadlie.analyze(doc)
