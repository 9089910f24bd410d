"""Growth series, skew growth, dimension estimates, and rewrite checks."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from knotgrowth.altsum import AltSumSemigroup, Zmod, dtw_alphabet
from knotgrowth.diagrams import apply_reidemeister, build_torus2, build_trivial, r1_insert
from knotgrowth.errors import InternalConsistencyError, ParameterError
from knotgrowth.growth import (
    GrowthSeries,
    RationalForm,
    cumulative_dimension,
    dtw_growth,
    gk_dimension,
    growth_for_family,
    growth_from_counts,
    reidemeister_dimension_check,
    semigroup_growth,
    skew_growth,
    torus_growth,
)


def convolve(p, q, terms):
    return tuple(
        sum(p[i] * q[k - i] for i in range(k + 1) if i < len(p) and k - i < len(q))
        for k in range(terms)
    )


def test_rational_form():
    geo = RationalForm((1,), (1, -1))
    assert geo.expand(5) == (1, 1, 1, 1, 1)
    assert RationalForm((1, 2), (1, -1)).expand(4) == (1, 3, 3, 3)
    assert RationalForm((1, 0, 0), (1, -1, 0)).numerator == (1,)
    assert geo.to_json_dict() == {"num": [1], "den": [1, -1]}
    with pytest.raises(ParameterError):
        RationalForm((1,), (2, -1))


def test_growth_series_validation():
    with pytest.raises(ParameterError):
        GrowthSeries((2, 3, 3))
    with pytest.raises(InternalConsistencyError):
        GrowthSeries((1, 5, 5), rational=RationalForm((1, 2), (1, -1)))
    series = GrowthSeries((1, 3, 3))
    assert series.counts() == (3, 3)


def test_growth_from_counts_rational_detection():
    series = growth_from_counts((3, 3, 3, 3))
    assert series.coefficients == (1, 3, 3, 3, 3)
    assert series.rational == RationalForm((1, 2), (1, -1))
    growing = growth_from_counts((2, 3, 4, 5))
    assert growing.rational is None
    assert growth_from_counts((4, 5, 5, 5, 5)).rational == RationalForm((1, 3, 1), (1, -1))
    with pytest.raises(ParameterError):
        growth_from_counts(())
    with pytest.raises(ParameterError):
        growth_from_counts((3, 0, 3))


@pytest.mark.parametrize("n", [3, 5, 7])
def test_torus_closed_form_matches_counts(n):
    closed = torus_growth(n, terms=10)
    measured = semigroup_growth(AltSumSemigroup(Zmod(n), tuple(range(n))), terms=10)
    assert closed.coefficients == measured.coefficients
    assert closed.rational == RationalForm((1, n - 1), (1, -1))
    assert closed.warnings == ()


def test_torus_closed_form_warns_on_even():
    with pytest.warns(UserWarning, match="even"):
        series = torus_growth(4)
    assert series.warnings
    # the even case genuinely departs from the closed form
    measured = semigroup_growth(
        AltSumSemigroup(Zmod(4), (0, 1, 2, 3), strong=True), terms=6
    )
    assert series.coefficients[:6] != measured.coefficients


@pytest.mark.parametrize("n,l", [(2, 2), (3, 2), (2, 4)])
def test_dtw_closed_form_matches_counts(n, l):
    closed = dtw_growth(n, l, terms=10)
    measured = semigroup_growth(dtw_alphabet(n, l).semigroup(), terms=10)
    assert closed.coefficients == measured.coefficients
    assert closed.rational == RationalForm((1, n + l - 1, n * l - n - l + 1), (1, -1))


def test_dtw_closed_form_warns_on_odd_product():
    with pytest.warns(UserWarning, match="odd"):
        series = dtw_growth(3, 3)
    assert series.warnings


def test_skew_growth_values():
    torus = skew_growth(torus_growth(3), terms=4)
    assert torus.coefficients == (1, -3, 6, -12)
    assert torus.rational == RationalForm((1, -1), (1, 2))
    dtw = skew_growth(dtw_growth(2, 2), terms=4)
    assert dtw.coefficients == (1, -4, 11, -29)


@pytest.mark.parametrize(
    "series",
    [torus_growth(n, terms=21) for n in (3, 5, 7)]
    + [dtw_growth(n, l, terms=21) for n, l in ((2, 2), (3, 2), (2, 4))],
    ids=["torus3", "torus5", "torus7", "dtw22", "dtw32", "dtw24"],
)
def test_skew_is_reciprocal_to_order_20(series):
    skew = skew_growth(series, terms=21)
    unit = (1,) + (0,) * 20
    assert convolve(series.coefficients, skew.coefficients, 21) == unit


def test_skew_without_rational_is_capped():
    series = growth_from_counts((2, 3, 4, 5))
    assert series.rational is None
    skew = skew_growth(series)
    assert len(skew.coefficients) == len(series.coefficients)
    assert skew.rational is None
    with pytest.raises(ParameterError):
        skew_growth(series, terms=40)


@given(st.lists(st.integers(min_value=1, max_value=9), min_size=3, max_size=8))
@settings(max_examples=200)
def test_skew_reciprocal_property(counts):
    series = growth_from_counts(counts)
    skew = skew_growth(series)
    terms = len(series.coefficients)
    assert convolve(series.coefficients, skew.coefficients, terms) == (1,) + (0,) * (terms - 1)


def test_cumulative_dimension():
    counts = (3, 3, 3)
    assert [cumulative_dimension(counts, d) for d in range(4)] == [1, 4, 7, 10]
    with pytest.raises(ParameterError):
        cumulative_dimension(counts, 4)
    with pytest.raises(ParameterError):
        cumulative_dimension(counts, -1)


# -- dimension estimation ------------------------------------------------------


def test_gk_from_rational_pole_order():
    est = gk_dimension(torus_growth(3))
    assert (est.value, est.infinite, est.method) == (1, False, "rational")
    assert est.label() == "1"
    assert gk_dimension(dtw_growth(2, 2)).value == 1
    assert gk_dimension(growth_for_family("trivial", (), terms=10)).value == 1


def test_gk_from_differences():
    hopf = growth_for_family("hopf", (), terms=11)
    est = gk_dimension(hopf)
    assert (est.value, est.method) == (2, "difference")
    # plain counts take the same route: no rational form is attached
    est2 = gk_dimension((1,) * 10)
    assert (est2.value, est2.method) == (1, "difference")


def test_gk_ratio_test_flags_exponential_growth():
    free2 = tuple(2**t for t in range(1, 11))
    est = gk_dimension(free2)
    assert est.infinite
    assert est.method == "ratio"
    assert est.label() == "infinity"
    assert all(r >= 1.2 for r in est.evidence["ratios"])


def test_gk_method_overrides_and_unresolved():
    free2 = tuple(2**t for t in range(1, 11))
    assert gk_dimension(free2, method="ratio").infinite
    forced = gk_dimension(free2, method="difference")
    assert forced.method == "unresolved" and forced.value is None
    flat = gk_dimension((1,) * 10, method="ratio")
    assert flat.method == "unresolved" and not flat.infinite
    short = gk_dimension((2, 3))
    assert short.method == "unresolved"
    assert short.label() == "unresolved"
    with pytest.raises(ParameterError):
        gk_dimension(free2, method="rational")
    with pytest.raises(ParameterError):
        gk_dimension(free2, method="entropy")


def test_gk_json_shape():
    data = gk_dimension(torus_growth(3)).to_json_dict()
    assert data["gk"] == "1"
    assert data["method"] == "rational"
    assert data["evidence"]["pole_order"] == 1


# -- rewrite invariance --------------------------------------------------------


def test_rewrite_preserves_cumulative_dimensions():
    trefoil = build_torus2(3)
    kinked = apply_reidemeister(trefoil, r1_insert(arc=0, end=0))
    report = reidemeister_dimension_check(trefoil, kinked, max_len=3, description="r1")
    assert report.all_equal
    assert [d.left_cumulative for d in report.degrees] == [4, 7, 10]
    assert [d.right_cumulative for d in report.degrees] == [4, 7, 10]
    data = report.to_json_dict()
    assert data["all_equal"] is True
    assert data["degrees"][0]["left"] == {"count": 3, "cumulative": 4}


def test_distinct_knots_are_distinguished():
    report = reidemeister_dimension_check(
        build_torus2(3), build_trivial(), max_len=2, description="trefoil-vs-unknot"
    )
    assert not report.all_equal


def test_growth_for_family_dispatch():
    assert growth_for_family("trivial", (), terms=5).coefficients == (1, 1, 1, 1, 1)
    assert growth_for_family("hopf", (), terms=5).counts() == (2, 3, 4, 5)
    assert growth_for_family("torus2", (5,), terms=5).counts() == (5, 5, 5, 5)
    even = growth_for_family("torus2", (4,), terms=5)
    assert even.counts() == (4, 6, 8, 10)
    twist = growth_for_family("twist", (3,), terms=5)
    assert twist.source == "twist:3"
    assert twist.coefficients == dtw_growth(3, 2, terms=5).coefficients
    assert growth_for_family("dtw", (2, 4), terms=4).counts() == (6, 9, 9)
    with pytest.raises(ParameterError):
        growth_for_family("conway", (3,))
