import pytest

from momentlab.verify import IDENTITY_CLASSES, verify_suite


def test_minimal_depth_passes():
    assert verify_suite(2).passed


def test_depth_five_covers_every_class():
    report = verify_suite(5)
    assert report.passed, report.failing()
    assert len(report.entries) >= 10
    assert {e.name for e in report.entries} == set(IDENTITY_CLASSES)
    assert all(e.compared > 0 for e in report.entries)


@pytest.mark.parametrize("name", ["free-motzkin", "gv", "boolean", "delta-product", "free-routes"])
def test_perturbation_fails_exactly_one_entry(name):
    report = verify_suite(3, perturb=name)
    assert report.failing() == [name]


def test_selected_identities_only():
    report = verify_suite(3, identities=["gv", "free-motzkin"])
    assert [e.name for e in report.entries] == ["gv", "free-motzkin"]


def test_unknown_identity():
    with pytest.raises(KeyError):
        verify_suite(3, identities=["nope"])


def test_report_dict_shape():
    d = verify_suite(2, identities=["path-counts"]).to_dict()
    assert d["v"] == 1 and d["passed"] is True
    assert d["checks"][0]["name"] == "path-counts"
