"""Volumes from the alternating sum of continuous partition functions.

``I(alpha; xi) = sum_w eps(w) T(w alpha - xi)`` where ``T`` is the top-degree
part of the Kostant partition function (the volume of the polytope of ways
to write a vector as a nonnegative combination of positive roots).  This is
an independent route to every closed form in :mod:`.su` and :mod:`.b2`.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from typing import Sequence

from ..core_weights import _perm_sign, fractions


def t_a1(k1) -> Fraction:
    return Fraction(1, 2) if k1 >= 0 else Fraction(0)


def t_a2(k1, k2) -> Fraction:
    if k1 < 0 or k2 < 0:
        return Fraction(0)
    return Fraction(min(k1, k2))


def t_a3(k1, k2, k3) -> Fraction:
    if min(k1, k2, k3) < 0:
        return Fraction(0)
    k1, k2, k3 = fractions((k1, k2, k3))
    sixth = Fraction(1, 6)
    if k2 <= k1 and k2 <= k3:
        return sixth * k2**3
    if k1 <= k2 <= k3:
        return sixth * k1 * k1 * (3 * k2 - 2 * k1)
    if k1 <= k3 and k1 + k3 <= k2:
        return sixth * k1 * k1 * (3 * k3 - k1)
    if k1 <= k3 <= k2 <= k1 + k3:
        return sixth * k1 * k1 * (3 * k3 - k1) - sixth * (k1 - k2 + k3) ** 3
    if k3 <= k2 <= k1:
        return sixth * k3 * k3 * (3 * k2 - 2 * k3)
    if k3 <= k1 and k1 + k3 <= k2:
        return sixth * k3 * k3 * (3 * k1 - k3)
    return sixth * k3 * k3 * (3 * k1 - k3) - sixth * (k1 - k2 + k3) ** 3


def t_b2(k1, k2) -> Fraction:
    if k1 < 0 or k2 < 0:
        return Fraction(0)
    k1, k2 = fractions((k1, k2))
    if k2 <= k1:
        return k2 * k2 / 4
    if 2 * k1 <= k2:
        return k1 * k1 / 2
    return k1 * k1 / 2 - (2 * k1 - k2) ** 2 / 4


def heckman_su(alpha: Sequence, xi: Sequence) -> Fraction:
    """su(n), n = 2, 3, 4.  For su(2) this is the closed-support convention."""
    a = fractions(alpha)
    x = fractions(xi)
    n = len(a)
    if sum(a) != sum(x):
        raise ValueError("sums differ")
    t = {2: t_a1, 3: t_a2, 4: t_a3}[n]
    total = Fraction(0)
    for w in itertools.permutations(range(n)):
        v = [a[w[i]] - x[i] for i in range(n)]
        kac = list(itertools.accumulate(v))[: n - 1]
        total += _perm_sign(w) * t(*kac)
    if n == 2:
        # closed support on both ends
        return Fraction(1, 2) if a[1] <= x[0] <= a[0] else Fraction(0)
    return total


def heckman_b2(alpha: Sequence, xi: Sequence) -> Fraction:
    """B2 in orthogonal coordinates."""
    a = fractions(alpha)
    x = fractions(xi)
    total = Fraction(0)
    for p in itertools.permutations(range(2)):
        for s in itertools.product((1, -1), repeat=2):
            sig = _perm_sign(p) * s[0] * s[1]
            v = [s[i] * a[p[i]] - x[i] for i in range(2)]
            total += sig * t_b2(v[0], v[0] + v[1])
    return total
