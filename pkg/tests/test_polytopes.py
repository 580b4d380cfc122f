from fractions import Fraction

import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

import oracles
from schur_kostka.core_weights import partition_pair_to_weights
from schur_kostka.kostant import mult_kostant
from schur_kostka.polytopes import (
    GTPattern,
    Tableau,
    gt_count,
    gt_enumerate,
    gt_to_tableau,
    ssyt_count,
    ssyt_enumerate,
    su3_interval,
    tableau_to_gt,
)


def test_small_counts():
    assert gt_count((2, 1, 0), (1, 1, 1)) == 2
    assert ssyt_count((5, 3, 1), (3, 3, 3)) == 3
    assert gt_count((12, 8, 3, 0), (3, 7, 9, 4)) == 26


def test_bijection_roundtrip():
    for g in gt_enumerate((2, 1, 0), (1, 1, 1)):
        t = gt_to_tableau(g)
        assert tableau_to_gt(t) == g
        assert t.content() == g.content() == (1, 1, 1)


@st.composite
def shape_content(draw, n=None):
    n = n or draw(st.sampled_from([3, 4]))
    parts = sorted(draw(st.lists(st.integers(0, 5), min_size=n - 1, max_size=n - 1)), reverse=True) + [0]
    total = sum(parts)
    cuts = sorted(draw(st.lists(st.integers(0, total), min_size=n - 1, max_size=n - 1)))
    xi = [b - a for a, b in zip([0] + cuts, cuts + [total])]
    return tuple(parts), tuple(xi)


@given(shape_content())
def test_three_routes(ac):
    alpha, xi = ac
    g = gt_count(alpha, xi)
    assert g == ssyt_count(alpha, xi) == oracles.ssyt_count(alpha, xi)
    lam, d = partition_pair_to_weights(alpha, xi)
    assert g == mult_kostant(lam, d)


@given(shape_content())
def test_permuting_content(ac):
    alpha, xi = ac
    assert gt_count(alpha, xi) == gt_count(alpha, tuple(sorted(xi)))


@given(shape_content())
def test_enumerations_valid(ac):
    alpha, xi = ac
    pats = gt_enumerate(alpha, xi)
    assert len(set(pats)) == len(pats)
    for t in ssyt_enumerate(alpha, xi):
        assert isinstance(t, Tableau) and t.content() == xi and t.shape == alpha


def test_invalid_patterns_rejected():
    with pytest.raises(ValueError):
        GTPattern(((2, 1, 0), (0, 1), (1,)))
    with pytest.raises(ValueError):
        Tableau(((2, 1),), 2)


def test_empty_when_sums_differ():
    assert gt_count((2, 1, 0), (1, 1, 0)) == 0


def test_su3_interval():
    lo, hi = su3_interval((2, 1, 0), (1, 1, 1))
    assert (lo, hi) == (1, 2)
    lo, hi = su3_interval((5, 3, 1), (3, 3, 3))
    assert hi - lo == 2


@given(shape_content(3))
def test_su3_interval_counts_points(ac):
    alpha, xi = ac
    lo, hi = su3_interval(alpha, xi)
    assume(lo <= hi)
    assert gt_count(alpha, xi) == int(hi - lo) + 1
    assert isinstance(lo, Fraction)
