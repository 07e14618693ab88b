import doctest

from eulertwist import polys, series


def test_polys_doctests():
    failures, _ = doctest.testmod(polys)
    assert failures == 0


def test_series_doctests():
    failures, _ = doctest.testmod(series)
    assert failures == 0
