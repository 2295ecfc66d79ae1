"""Rational generating functions and the series catalog."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from sympy import Poly, series as sympy_series, symbols

from braidcoh.series import (
    CATALOG,
    RationalSeries,
    catalog_names,
    compare,
    get,
    mv_euler_identity,
    mv_euler_series,
    one_minus,
)
from braidcoh.suites import SERIES_SOURCES

t = symbols("t")


def sympy_coefficients(s, top):
    num = sum(c * t ** k for k, c in enumerate(s.num))
    den = sum(c * t ** k for k, c in enumerate(s.den))
    expansion = sympy_series(num / den, t, 0, top + 1).removeO()
    p = Poly(expansion, t) if expansion != 0 else None
    return [int(p.coeff_monomial(t ** k)) if p is not None else 0 for k in range(top + 1)]


@pytest.mark.parametrize("name", catalog_names())
def test_expansion_agrees_with_sympy(name):
    s = CATALOG[name].series
    assert s.expand(40) == sympy_coefficients(s, 40)


def test_examples():
    assert RationalSeries.from_factors((1,), one_minus(4)).expand(12) == \
        [1, 0, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0, 1]
    free = get("b3-free").series.expand(28)
    assert [free[n] for n in range(4, 29, 4)] == [1, 1, 1, 1, 3, 1, 3]
    even = get("z2-even").series.expand(40)
    assert all(even[4 * k] == 2 * k + 1 for k in range(11))


coeff_lists = st.lists(st.integers(-3, 3), min_size=1, max_size=5)
dens = st.lists(st.integers(-2, 2), max_size=4).map(lambda c: [1] + c)
rationals = st.builds(RationalSeries, coeff_lists, dens)


@settings(max_examples=60, deadline=None)
@given(rationals, rationals)
def test_expand_is_a_ring_homomorphism(a, b):
    top = 15
    ea, eb = a.expand(top), b.expand(top)
    assert (a + b).expand(top) == [x + y for x, y in zip(ea, eb)]
    conv = [sum(ea[i] * eb[k - i] for i in range(k + 1)) for k in range(top + 1)]
    assert (a * b).expand(top) == conv


def test_catalog_sums_and_products():
    a, b = CATALOG["z4-even"].series, CATALOG["z6-odd-mod3"].series
    ea, eb = a.expand(30), b.expand(30)
    assert (a * b).expand(30) == [sum(ea[i] * eb[k - i] for i in range(k + 1)) for k in range(31)]
    assert (a - b).expand(30) == [x - y for x, y in zip(ea, eb)]


def test_equality_is_cross_multiplication():
    s = RationalSeries((1,), one_minus(1))
    assert s == RationalSeries((1, 1), (1, 0, -1))
    assert s != RationalSeries((1,), one_minus(4))


def test_compare_reports_first_mismatch():
    good = get("z2-even").series.expand(20)
    assert compare("z2-even", good).ok
    shifted = [0] + good[:-1]
    assert compare("z2-even", shifted).first_mismatch == 0
    tweaked = list(good)
    tweaked[8] += 1
    assert compare("z2-even", tweaked).first_mismatch == 8


def test_mv_euler_identity():
    assert mv_euler_identity(120).ok
    s = mv_euler_series()
    assert s.coefficient(20) == 3 and s.coefficient(4) == 1 and s.coefficient(2) == 0


@pytest.mark.parametrize("name", sorted(SERIES_SOURCES))
def test_catalog_matches_computations_to_forty(name):
    coeffs = get(name).series.expand(40)
    for _label, _g, _i, _c, fn in SERIES_SOURCES[name]:
        for n in range(max(2, get(name).valid_from) if name == "b3-free" else 0, 41, 2):
            assert fn(n) == coeffs[n], (name, n)


def test_every_catalog_entry_has_a_computed_source():
    assert set(SERIES_SOURCES) == set(CATALOG)


def test_unknown_name_lists_catalog():
    with pytest.raises(KeyError, match="b3-free"):
        get("bogus")


def test_denominator_must_be_invertible():
    with pytest.raises(ValueError):
        RationalSeries((1,), (2, 1))
