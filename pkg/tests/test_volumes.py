import random
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from schur_kostka.core_weights import rho, weight, weight_pair_to_xi, weight_to_partition
from schur_kostka.polytopes import gt_count
from schur_kostka.volumes import (
    b2_cell_types,
    b2_prefactor,
    cells_crosssection,
    heckman_b2,
    heckman_su,
    i_mult_relation,
    in_octagon,
    in_permutahedron,
    jump_su4,
    normalization,
    observed_jump_su4,
    pdf,
    su4_walls,
    vol_b2,
    vol_b2_ray,
    vol_su,
    vol_su2,
    vol_su3,
    vol_su4,
    wall_smoothness_probe,
)
from schur_kostka.volumes.walls import generic_wall_point

small = st.fractions(min_value=-6, max_value=6, max_denominator=7)
pos = st.fractions(min_value=Fraction(1, 7), max_value=4, max_denominator=7)


@st.composite
def su_point(draw, n):
    a = sorted(draw(st.lists(small, min_size=n, max_size=n, unique=True)), reverse=True)
    # a random convex combination of permutations lands inside the permutahedron
    w = [draw(st.integers(0, 5)) for _ in range(3)]
    if not any(w):
        w[0] = 1
    perms = [draw(st.permutations(a)) for _ in range(3)]
    xi = tuple(sum(Fraction(wk) * p[i] for wk, p in zip(w, perms)) / sum(w) for i in range(n))
    return tuple(a), xi


@st.composite
def b2_point(draw):
    a2 = draw(pos)
    a1 = a2 + draw(pos)
    unit = st.fractions(-1, 1, max_denominator=9)
    x = (a1 * draw(unit), a1 * draw(unit))
    return (a1, a2), x


@given(su_point(3), pos)
def test_su3_homogeneous_degree_one(ax, t):
    a, x = ax
    assert vol_su3([t * v for v in a], [t * v for v in x]) == t * vol_su3(a, x)


@given(su_point(4), pos)
def test_su4_homogeneous_degree_three(ax, t):
    a, x = ax
    assert vol_su4([t * v for v in a], [t * v for v in x]) == t**3 * vol_su4(a, x)


@given(b2_point(), pos)
def test_b2_homogeneous_degree_two(ax, t):
    a, x = ax
    assert vol_b2([t * v for v in a], [t * v for v in x]) == t**2 * vol_b2(a, x)


@given(su_point(4), st.permutations(range(4)))
def test_su4_symmetric(ax, perm):
    a, x = ax
    assert vol_su4(a, [x[i] for i in perm]) == vol_su4(a, x)


@given(su_point(4), small)
def test_su4_translation(ax, c):
    a, x = ax
    assert vol_su4([v + c for v in a], [v + c for v in x]) == vol_su4(a, x)


@given(b2_point(), st.booleans(), st.booleans(), st.booleans())
def test_b2_weyl_symmetric(ax, s1, s2, swap):
    a, (x1, x2) = ax
    y = (-x1 if s1 else x1, -x2 if s2 else x2)
    if swap:
        y = y[::-1]
    assert vol_b2(a, y) == vol_b2(a, (x1, x2))


@given(su_point(3))
def test_heckman_su3(ax):
    assert heckman_su(*ax) == vol_su3(*ax)


@given(su_point(4))
def test_heckman_su4(ax):
    assert heckman_su(*ax) == vol_su4(*ax)


@given(b2_point())
def test_heckman_b2(ax):
    a, x = ax
    assert heckman_b2(a, x) == vol_b2(a, x) == vol_b2_ray(a, x)


@given(b2_point())
def test_b2_support(ax):
    a, x = ax
    if not in_octagon(a, x):
        assert vol_b2(a, x) == 0
    else:
        assert vol_b2(a, x) >= 0


def test_su2_and_su3_values():
    assert vol_su2((3, 1), (2, 2)) == Fraction(1, 2)
    assert vol_su2((3, 1), (4, 0)) == 0
    assert vol_su3((2, 1, 0), (1, 1, 1)) == 1
    assert vol_su3((5, 3, 1), (3, 3, 3)) == 2


def test_su3_mult_relation_small_scan():
    for a1 in range(7):
        for a2 in range(a1 + 1):
            for x1 in range(a1 + 1):
                for x2 in range(a1 + 1):
                    x = (x1, x2, a1 + a2 - x1 - x2)
                    if gt_count((a1, a2, 0), x):
                        assert gt_count((a1, a2, 0), x) == vol_su3((a1, a2, 0), x) + 1


def test_su4_special_values():
    r = weight_to_partition(rho("A3")).parts
    got = [vol_su4(r, weight_pair_to_xi(rho("A3"), weight("A3", d)).parts) for d in ((0, 0, 0), (1, 0, 1), (0, 1, 0))]
    assert got == [Fraction(1, 2), Fraction(1, 24), Fraction(1, 6)]
    assert vol_su((12, 8, 3, 0), (3, 7, 9, 4)) == Fraction(23, 3)


def test_b2_special_values():
    r = rho("B2").orthogonal()
    assert vol_b2(r, weight("B2", (-1, 2)).orthogonal()) == Fraction(1, 8)
    assert vol_b2(r, (0, 0)) == Fraction(1, 2)
    assert b2_prefactor((4, 3)) == Fraction(1, 56)


def test_pdf():
    assert pdf((3, 1), (2, 0)) == Fraction(1, 2)
    assert pdf((Fraction(3, 2), Fraction(1, 2)), (0, 0), "B2") == b2_prefactor((Fraction(3, 2), Fraction(1, 2))) * Fraction(1, 2)
    with pytest.raises(ValueError):
        pdf((1, 1, 0), (1, 1, 0))


@pytest.mark.parametrize("alpha,alg", [((5, 3, 1), "A2"), ((4, 3), "B2")])
def test_normalization(alpha, alg):
    assert abs(float(normalization(alpha, alg, 40)) - 1) < 0.01


def test_relation_scan():
    rng = random.Random(21)
    n = 0
    branches = set()
    while n < 60:
        tag = rng.choice(["A2", "A3", "B2"])
        r = 3 if tag == "A3" else 2
        lam = weight(tag, [rng.randint(0, 3) for _ in range(r)])
        d = weight(tag, [rng.randint(-4, 4) for _ in range(r)])
        try:
            res = i_mult_relation(lam, d)
        except ValueError:
            continue
        n += 1
        branches.add((tag, res.branch))
        assert res.holds, res.to_json()
    assert ("A3", "Q+rho") in branches and ("B2", "Q+rho") in branches


def test_relation_rejects_bad_input():
    with pytest.raises(ValueError):
        i_mult_relation(weight("A3", (1, 0, 0)), weight("A3", (0, 0, 0)))


def test_cell_counts():
    assert cells_crosssection("A3", (5, 4, 2, -11), (3, Fraction(9, 2))).F == 37
    for a in ((4, 1), (4, Fraction(3, 2)), (4, 3)):
        assert cells_crosssection("B2", a).F == 25
    assert len(b2_cell_types([(4, 1), (4, Fraction(3, 2)), (4, 3)])) == 33


def test_jump_formulas_at_generic_points():
    rng = random.Random(4)
    alpha = tuple(map(Fraction, (7, 4, 2, -6)))
    S = sum(alpha)
    checked = 0
    for w in su4_walls():
        x = generic_wall_point(alpha, w, rng)
        if x is None:
            continue
        rec = jump_su4(alpha, w, x)
        y = [x[k] + Fraction(rng.randint(-5, 5), 3) for k in range(3)]
        y = tuple(y) + (S - sum(y),)
        assert rec(y) == observed_jump_su4(alpha, w, x, y)
        checked += 1
    assert checked >= 10


@pytest.mark.parametrize("kind,want", [("single", 1), ("pair", 2)])
def test_continuity_class(kind, want):
    rng = random.Random(2)
    alpha = (7, 4, 2, -6)
    for w in su4_walls():
        if w.kind != kind:
            continue
        x = generic_wall_point(alpha, w, rng)
        if x is None or jump_su4(alpha, w, x).coefficient == 0:
            continue
        pr = wall_smoothness_probe("A3", alpha, w, x)
        assert pr.stable and pr.continuity_class == want
        return
    pytest.fail("no generic wall found")


@given(su_point(4))
def test_support_is_permutahedron(ax):
    a, x = ax
    assert in_permutahedron(a, x)
    assert vol_su4(a, x) >= 0
