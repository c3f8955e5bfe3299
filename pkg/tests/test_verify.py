import pytest

from tricomplex.verify import SUITE_NAMES, run_suite


def test_suite_names():
    assert SUITE_NAMES == ("algebra", "roots", "dynamics", "sets", "raster")


def test_unknown_suite_rejected():
    with pytest.raises(ValueError):
        run_suite("calculus")


def test_rows_are_well_formed_and_deterministic():
    first = run_suite("roots", seed=7)
    again = run_suite("roots", seed=7)
    assert len(first) > 0
    assert [r.name for r in first] == [r.name for r in again]
    assert [r.observed for r in first] == [r.observed for r in again]
    names = [r.name for r in first]
    assert len(set(names)) == len(names)
    for row in first:
        assert row.name.startswith("roots/")
        assert isinstance(row.passed, bool)


def test_every_check_in_every_suite_passes():
    rows = run_suite("all")
    assert len(rows) == 53
    failed = [r.name for r in rows if not r.passed]
    assert failed == []
    prefixes = {r.name.split("/", 1)[0] for r in rows}
    assert prefixes == set(SUITE_NAMES)
