import json

import pytest
from hypothesis import given
from hypothesis import strategies as st

from schur_kostka.pictographs import (
    NE,
    NW,
    Liana,
    LianaForest,
    forest_census,
    forest_count,
    forest_readout,
    lianas_to_forest,
    non_ssyt_collision,
    tableau_forest,
    tableau_to_lianas,
)
from schur_kostka.polytopes import Tableau, gt_count, ssyt_enumerate

EXAMPLE = Tableau(((1, 1, 1, 2, 2, 2, 2, 3, 3, 3, 3, 3), (2, 2, 2, 3, 3, 3, 4, 4), (3, 4, 4)), 4)


def test_example_lianas():
    ls = tableau_to_lianas(EXAMPLE)
    assert [set(li.entries) for li in ls] == [{3}, {3}, {3}, {3}, {3, 4}, {2, 4}, {2, 3}, {2, 3}, {2, 3}, {1, 2, 4}, {1, 2, 4}, {1, 2, 3}]
    sixth = ls[5]
    assert sixth.root == 2 and sixth.left_levels == {1, 3}


def test_example_forest():
    f = tableau_forest(EXAMPLE)
    assert forest_readout(f) == ((12, 8, 3, 0), (3, 7, 9, 4))
    assert f.is_conserved()
    b = f.boundary_labels()
    assert sorted(x for x in b["left"] + b["right"] if x) == [1, 3, 3, 5, 9]


def test_single_liana_and_empty_forest():
    li = Liana.from_column((1, 2), 3)
    f = lianas_to_forest([li])
    assert sum(m for *_, m in f.edges) == 3
    assert all(m == 1 for *_, m in f.edges)
    z = lianas_to_forest([], 3)
    assert z.edges == () and forest_readout(z) == ((0, 0, 0), (0, 0, 0))


def test_liana_paths_reach_apex():
    for col in ((1,), (2,), (1, 3), (1, 2, 3)):
        li = Liana.from_column(col, 3)
        L, i, d = li.path()[-1]
        assert L == 3 and (i - (d == NW)) == 0


def test_counts():
    assert forest_count((12, 8, 3, 0), (3, 7, 9, 4)) == 26
    assert forest_count((2, 1, 0), (1, 1, 1)) == 2
    assert forest_count((4, 0, 0), (4, 0, 0)) == 1


@st.composite
def small_tableau(draw):
    n = draw(st.sampled_from([2, 3, 4]))
    parts = sorted(draw(st.lists(st.integers(0, 4), min_size=n, max_size=n)), reverse=True)
    parts[-1] = 0 if n > 1 else parts[-1]
    total = sum(parts)
    if total > 10:
        parts = [min(p, 2) for p in parts]
        total = sum(parts)
    cuts = sorted(draw(st.lists(st.integers(0, total), min_size=n - 1, max_size=n - 1)))
    xi = tuple(b - a for a, b in zip([0] + cuts, cuts + [total]))
    tabs = ssyt_enumerate(tuple(parts), xi)
    if not tabs:
        return None
    return draw(st.sampled_from(tabs))


@given(small_tableau())
def test_roundtrip(t):
    if t is None:
        return
    alpha, xi = forest_readout(tableau_forest(t))
    assert alpha == t.shape and xi == t.content()


@given(small_tableau())
def test_injective(t):
    if t is None:
        return
    cen = forest_census(t.shape, t.content())
    assert cen.injective and cen.count == gt_count(t.shape, t.content())


def test_non_ssyt_collision_exists():
    found = non_ssyt_collision((2, 1, 0), (1, 1, 1))
    assert found is not None
    rows, ssyt = found
    assert any(r[0] > r[1] for r in rows if len(r) > 1)
    assert tableau_forest(rows, 3) == tableau_forest(ssyt)


def test_json_and_svg_roundtrip():
    f = tableau_forest(EXAMPLE)
    assert LianaForest.from_json(json.loads(f.dumps())) == f
    svg = f.to_svg()
    assert svg.startswith("<svg") and svg.count("<line") > len(f.edges)


def test_bad_columns():
    with pytest.raises(ValueError):
        Liana.from_column((2, 2), 3)
    with pytest.raises(ValueError):
        Liana.from_column((4,), 3)
    assert NE != NW
