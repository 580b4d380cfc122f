from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from schur_kostka.core_weights import (
    delta_b2,
    delta_rho,
    dominant_representative,
    fractions,
    from_orthogonal,
    in_root_lattice,
    partition,
    partition_pair_to_weights,
    rho,
    weight,
    weight_pair_to_xi,
    weight_to_partition,
    weyl_dimension,
    weyl_group,
    weyl_orbit,
)

labels = st.lists(st.integers(-6, 6), min_size=3, max_size=3)


def test_rational_parsing():
    assert fractions(["3/2", 1, "-4"]) == (Fraction(3, 2), Fraction(1), Fraction(-4))
    with pytest.raises((ValueError, ZeroDivisionError)):
        fractions(["1/0"])


def test_partition_of_kostka_example():
    lam = weight("A3", (4, 5, 3))
    assert weight_to_partition(lam).parts == (12, 8, 3, 0)
    assert weight_pair_to_xi(lam, weight("A3", (-4, -2, 5))).parts == (3, 7, 9, 4)


def test_small_xi():
    assert weight_pair_to_xi(weight("A2", (1, 1)), weight("A2", (-1, 2))).parts == (1, 2, 0)


@given(labels, labels)
def test_xi_roundtrip(lam, d):
    lam = weight("A3", [abs(x) for x in lam])
    d = weight("A3", d)
    alpha = weight_to_partition(lam).parts
    xi = weight_pair_to_xi(lam, d).parts
    assert sum(xi) == sum(alpha)
    l2, d2 = partition_pair_to_weights(alpha, xi)
    assert (l2, d2) == (lam, d)


def test_root_lattice():
    assert not in_root_lattice(weight("A3", (1, 0, 0)))
    assert in_root_lattice(weight("A3", (2, -1, 0)))
    assert in_root_lattice(weight("B2", (0, 2)))
    assert not in_root_lattice(weight("B2", (0, 1)))


def test_weyl_groups():
    assert [len(weyl_group(t)) for t in ("A1", "A2", "A3", "B2")] == [2, 6, 24, 8]
    assert len(weyl_orbit(weight("A2", (1, 0)))) == 3


@given(st.lists(st.integers(-5, 5), min_size=2, max_size=2))
def test_dominant_representative_b2(v):
    w = weight("B2", v)
    d = dominant_representative(w)
    assert d.is_dominant
    x = w.orthogonal()
    assert d.orthogonal() == tuple(sorted((abs(t) for t in x), reverse=True))


def test_delta_values():
    assert delta_b2((4, 3)) == 84
    assert delta_rho("A3") == 12
    assert delta_rho("B2") == Fraction(3, 2)


def test_orthogonal_b2():
    assert weight("B2", (1, 1)).orthogonal() == (Fraction(3, 2), Fraction(1, 2))
    assert from_orthogonal((Fraction(3, 2), Fraction(1, 2))) == rho("B2")


def test_weyl_dimension():
    assert weyl_dimension(weight("A2", (1, 1))) == 8
    assert weyl_dimension(weight("B2", (1, 0))) == 5
    assert weyl_dimension(weight("B2", (0, 1))) == 4


def test_partition_validation():
    # content vectors need not be sorted, only the length is checked
    assert partition((1, 2, 3)).parts == (1, 2, 3)
    with pytest.raises(ValueError):
        partition((1, 2, 3, 4, 5))
    with pytest.raises(ValueError):
        partition((1, 2, 3), "A3")
