from fractions import Fraction
import pytest
from lgr import lgr_catalog as catalog
from lgr.lgr_catalog import CatalogEntry, ExpectedData, verify_all
from lgr.lgr_errors import UnknownCase
from lgr.lgr_field import EXACT, FLOAT

Y, Z, W = 1, 2, 3


@pytest.mark.parametrize("field", [EXACT, FLOAT])
def test_verify_all(field):
    report = verify_all(field)
    assert report.ok, report.lines()


def test_entries():
    assert [entry.name for entry in catalog.entries()] == list(catalog.NAMES)
    assert catalog.get("case2").metric.gram[3][3] == 1


def test_unknown_case():
    with pytest.raises(UnknownCase) as e:
        catalog.get("case5")
    assert "case5" in str(e.value)
    assert e.value.exit_code == 2


def test_berwald_verdicts():
    verdicts = {entry.name: entry.expected.berwald for entry in catalog.entries()}
    assert verdicts == {
        "abelian": True,
        "case1": True,
        "case2": True,
        "case3": False,
        "case4": False,
    }


def tampered(name, **changes):
    entry = catalog.get(name)
    old = entry.expected
    fields = dict(
        connection=old.connection,
        curvature=old.curvature,
        parallel=old.parallel,
        flag_sign=old.flag_sign,
    )
    fields.update(changes)
    return CatalogEntry(name, entry.algebra, entry.metric, ExpectedData(**fields))


def test_connection_mismatch_is_reported():
    connection = dict(catalog.CONNECTIONS["case1"])
    connection[(Y, Z)] = {W: 1}
    report = verify_all(catalog=[tampered("case1", connection=connection)])
    assert report.kinds() == {"connection"}
    assert report.lines() == ["case1: connection mismatch at (1, 2, 3): expected 1, got 1/2"]


def test_curvature_mismatch_is_reported():
    curv = dict(catalog.CURVATURES["case2"])
    curv[(1, 2, 2)] = {Y: Fraction(-1, 2)}
    report = verify_all(catalog=[tampered("case2", curvature=curv)])
    assert report.kinds() == {"curvature"}
    # the tampered entry and its antisymmetric partner
    assert len(report) == 2


def test_parallel_mismatch_is_reported():
    report = verify_all(catalog=[tampered("case3", parallel=(0,))])
    assert report.lines() == ["case3: parallel fields mismatch: expected dimension 1, got 0"]
