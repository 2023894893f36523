import math

import pytest

from abelfourier.checks import Check, CheckReport


def test_inequality():
    check = Check('a', 1.0, 2.0)
    assert check.ok
    assert check.margin == pytest.approx(1.0)
    assert check.excess == pytest.approx(-1.0)

    tight = Check('b', 1.0 + 1e-10, 1.0, rtol=1e-9)
    assert tight.ok
    assert not Check('c', 1.1, 1.0, rtol=1e-9).ok


def test_identity():
    check = Check('a', 1j, 1j + 1e-13, relation='==', atol=1e-12)
    assert check.ok
    assert check.to_dict()['lhs'] == [0.0, 1.0]
    assert not Check('b', 1.0, 2.0, relation='==', rtol=0.1).ok


def test_nan_is_a_violation():
    check = Check('a', math.nan, 1.0)
    assert not check.ok
    assert not check


def test_unknown_relation():
    with pytest.raises(ValueError):
        Check('a', 1, 2, relation='<')


def test_report():
    report = CheckReport('r', [Check('a', 1.0, 2.0), Check('b', 1.0, 1.5)])
    assert report.ok
    assert report.worst.name == 'b'
    report.add(Check('c', 3.0, 1.0))
    assert not report.ok
    assert [c.name for c in report.failures()] == ['c']
    assert len(report) == 3
    assert CheckReport('empty').worst is None
