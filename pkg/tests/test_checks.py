import pytest

from cyclic_mckay import check_group, make_group, sweep
from cyclic_mckay.checks import CHECKS, SL2_CHECKS


@pytest.mark.parametrize("r, a, counts", [
    (7, 3, {"specials": 3, "curves": 3, "clusters": 4, "hj_length": 3}),
    (2, 1, {"specials": 1, "curves": 1, "clusters": 2, "hj_length": 1}),
    (5, 2, {"specials": 2, "curves": 2, "clusters": 3, "hj_length": 2}),
])
def test_check_group_examples(r, a, counts):
    report = check_group(make_group(r, a))
    assert report.ok, report.failures()
    assert report.counts == counts


def test_sl2_checks_only_for_sl2():
    names = {c.name for c in check_group(make_group(7, 3)).checks}
    assert names == {n for n, _ in CHECKS}
    names = {c.name for c in check_group(make_group(7, 6)).checks}
    assert names == {n for n, _ in CHECKS + SL2_CHECKS}


def test_failures_are_recorded_not_raised(monkeypatch):
    from cyclic_mckay import checks
    from cyclic_mckay.errors import NotAChain

    def broken(G):
        raise NotAChain("synthetic")

    monkeypatch.setattr(checks, "CHECKS", checks.CHECKS + [("broken", broken)])
    report = checks.check_group(make_group(5, 2))
    assert not report.ok
    assert [c.name for c in report.failures()] == ["broken"]
    assert report.to_dict()["status"] == "fail"


def test_sweep_small():
    reports = sweep(2)
    assert [(rep.group.r, rep.group.a) for rep in reports] == [(2, 1)]
    reports = sweep(7)
    assert all(rep.ok for rep in reports)
    assert len(reports) == 1 + 2 + 2 + 4 + 2 + 6


def test_sweep_parallel_preserves_order():
    serial = [rep.to_dict() for rep in sweep(9)]
    parallel = [rep.to_dict() for rep in sweep(9, jobs=2)]
    assert serial == parallel


def test_sweep_rejects_small_bound():
    with pytest.raises(ValueError):
        sweep(1)
