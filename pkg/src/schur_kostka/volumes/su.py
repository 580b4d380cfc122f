"""Closed-form volume functions I(alpha; xi) for su(2), su(3) and su(4)."""

from __future__ import annotations

import itertools
from fractions import Fraction
from typing import Sequence

from ..core_weights import _perm_sign, fractions

# Generic direction used to resolve sign(0) by continuity; every partial sum of
# its first three entries is nonzero, so A_S = 0 is never ambiguous.
TIEBREAK = (1, 10, 100, -111)

_S4 = tuple((w, _perm_sign(w)) for w in itertools.permutations(range(4)))
_SUBSETS = ((0,), (1,), (2,), (0, 1), (0, 2), (1, 2), (0, 1, 2))


def _sgn(x) -> int:
    return (x > 0) - (x < 0)


def _check_sum(alpha, xi) -> None:
    if sum(alpha) != sum(xi):
        raise ValueError(f"sum(alpha) = {sum(alpha)} differs from sum(xi) = {sum(xi)}")


def _check_decreasing(alpha) -> None:
    if any(alpha[i] < alpha[i + 1] for i in range(len(alpha) - 1)):
        raise ValueError(f"alpha must be weakly decreasing, got {tuple(map(str, alpha))}")


def vol_su2(alpha: Sequence, xi: Sequence) -> Fraction:
    """1/2 on the closed segment ``alpha_2 <= xi_1 <= alpha_1``, else 0."""
    a = fractions(alpha)
    x = fractions(xi)
    if len(a) != 2 or len(x) != 2:
        raise ValueError("su(2) data has two Young components")
    _check_decreasing(a)
    _check_sum(a, x)
    return Fraction(1, 2) if a[1] <= x[0] <= a[0] else Fraction(0)


def vol_su3(alpha: Sequence, xi: Sequence) -> Fraction:
    a = fractions(alpha)
    x = fractions(xi)
    if len(a) != 3 or len(x) != 3:
        raise ValueError("su(3) data has three Young components")
    _check_decreasing(a)
    _check_sum(a, x)
    cands = [a[0] - a[1], a[1] - a[2]]
    for xi_i in x:
        cands += [a[0] - xi_i, xi_i - a[2]]
    return max(Fraction(0), min(cands))


def su3_piece(beta: Sequence, zeta: Sequence) -> Fraction:
    """The affine determination of I_su(3) selected by the signs of ``zeta_k - beta_2``.

    Unlike :func:`vol_su3` this is not clamped and does not require equal sums.
    """
    b = fractions(beta)
    z = fractions(zeta)
    s = [_sgn(t - b[1]) for t in z]
    pos = [k for k in range(3) if s[k] > 0]
    neg = [k for k in range(3) if s[k] < 0]
    if len(pos) == 3 or (len(neg) == 0):
        return b[1] - b[2]
    if len(neg) == 3 or len(pos) == 0:
        return b[0] - b[1]
    if len(neg) == 1:
        return z[neg[0]] - b[2]
    return b[0] - z[pos[0]]


def _su4_sum(a, y, ref) -> Fraction:
    """Alternating sum with |A|^3 = s A^3 and A|A| = s A^2, signs read at ``ref``."""
    total = Fraction(0)
    for w, eps in _S4:
        A = [a[w[i]] - y[i] for i in range(3)]
        R = [a[w[i]] - ref[i] for i in range(3)]
        val = {}
        sg = {}
        for idx in _SUBSETS:
            val[idx] = sum((A[i] for i in idx), Fraction(0))
            r = sum((R[i] for i in idx), Fraction(0))
            sg[idx] = _sgn(r) if r != 0 else -_sgn(sum(TIEBREAK[i] for i in idx))

        def cube(k):
            return sg[k] * val[k] ** 3

        def sq(k):
            return sg[k] * val[k] ** 2

        a2 = val[(1,)]
        a12 = val[(0, 1)]
        inner = sq((0, 1, 2)) + sq((2,))
        t1 = sg[(1,)] * (
            Fraction(1, 6) * (cube((0, 1, 2)) - cube((0, 2)) + cube((1, 2)) - cube((2,)))
            - Fraction(1, 2) * a2 * inner
        )
        t2 = sg[(0, 1)] * (Fraction(1, 2) * a12 * inner + Fraction(1, 3) * (cube((2,)) - cube((0, 1, 2))))
        total += eps * sg[(0,)] * (t1 + t2)
    # the alternating sum as printed counts every term 8 times
    return total / 8


def vol_su4(alpha: Sequence, xi: Sequence) -> Fraction:
    """Closed-form su(4) volume; on singular walls evaluated by continuity."""
    a = fractions(alpha)
    x = fractions(xi)
    if len(a) != 4 or len(x) != 4:
        raise ValueError("su(4) data has four Young components")
    _check_decreasing(a)
    _check_sum(a, x)
    return _su4_sum(a, x, x)


def su4_determination(alpha: Sequence, ref: Sequence, xi: Sequence) -> Fraction:
    """Value at ``xi`` of the polynomial that represents I_su(4) on the cell containing ``ref``.

    If ``ref`` sits on a wall the cell reached from ``ref`` along a fixed generic
    direction is used.
    """
    a = fractions(alpha)
    r = fractions(ref)
    x = fractions(xi)
    _check_sum(a, r)
    _check_sum(a, x)
    return _su4_sum(a, x, r)


def in_permutahedron(alpha: Sequence, xi: Sequence) -> bool:
    """Majorisation test: ``xi`` lies in the convex hull of the permutations of ``alpha``."""
    a = sorted(fractions(alpha), reverse=True)
    x = sorted(fractions(xi), reverse=True)
    if sum(a) != sum(x):
        return False
    pa = pb = Fraction(0)
    for i in range(len(a) - 1):
        pa += a[i]
        pb += x[i]
        if pb > pa:
            return False
    return True


def vol_su(alpha: Sequence, xi: Sequence) -> Fraction:
    n = len(alpha)
    if n == 2:
        return vol_su2(alpha, xi)
    if n == 3:
        return vol_su3(alpha, xi)
    if n == 4:
        return vol_su4(alpha, xi)
    raise ValueError(f"no closed form for su({n})")
