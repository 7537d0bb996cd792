import pytest

import cqg


@pytest.fixture(scope="module")
def files():
    return cqg.corpus()


def test_corpus_names(files):
    assert "group_Z2.json" in files
    assert "sweedler_H4.json" in files
    assert len(files) == 17


def test_check_all_pass(files):
    report = cqg.check(files["fun_S3.json"])
    assert report["passed"]
    assert all(c["residual"] == 0 for c in report["checks"])


def test_compact_verdicts(files):
    z2 = cqg.compact(files["group_Z2.json"])
    assert z2["details"]["verdict"] == "compact"
    assert z2["details"]["min_eigenvalue"] == pytest.approx(1.0)
    h4 = cqg.compact(files["sweedler_H4.json"])
    assert not h4["passed"]
    assert "no normal integral" in h4["details"]["reason"]


def test_antipode_batteries(files):
    report = cqg.antipode(files["fun_Q8.json"])
    assert report["passed"]
    assert report["details"]["batteries"]["trivial_antipode"]["all_true"]


def test_decompose_dimensions(files):
    comps = cqg.decompose(files["fun_S3.json"])["details"]["components"]
    assert sorted(c["dim"] for c in comps) == [1, 1, 4]


def test_sumu_rewriting():
    e = cqg.SumuEngine(1)
    assert e.normalize("ha") == {"": "1", "cd": "s^2"}
    assert e.normalize("ca") == {"ac": "s^-2"}
    assert not e.is_canonical("dc")
    assert e.delta("c") == {("c", "a"): "1", ("h", "c"): "1"}
    assert e.antipode("d") == {"d": "-s^-2"}
    assert e.theta("h") == "s^2"
    assert e.beta("aa") == "s^-2"


def test_sumu_verify_both_signs():
    for sign in (1, -1):
        r = cqg.SumuEngine(sign).verify("unitary", 3)
        assert r["passed"], r["witness"]
    report = cqg.sumu(sign=-1, degree=3)
    assert report["passed"]


def test_errors(files):
    with pytest.raises(ValueError):
        cqg.SumuEngine(1).normalize("x")
    with pytest.raises(ValueError):
        cqg.sumu(identity="nope")
    with pytest.raises(ValueError):
        cqg.check("{not json")
    with pytest.raises(ValueError):
        cqg.SumuEngine(2)
