"""Exact Gaussian elimination over the rationals."""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence


def rref(rows: Sequence[Sequence]) -> tuple[list[list[Fraction]], list[int]]:
    m = [[Fraction(x) for x in row] for row in rows]
    if not m:
        return m, []
    ncol = len(m[0])
    pivots: list[int] = []
    r = 0
    for c in range(ncol):
        piv = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        p = m[r][c]
        m[r] = [x / p for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m, pivots


def nullspace(rows: Sequence[Sequence], ncol: int) -> list[list[Fraction]]:
    if not rows:
        return [[Fraction(int(i == j)) for i in range(ncol)] for j in range(ncol)]
    m, pivots = rref(rows)
    free = [c for c in range(ncol) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * ncol
        v[f] = Fraction(1)
        for i, c in enumerate(pivots):
            v[c] = -m[i][f]
        basis.append(v)
    return basis


def solve_square(a: Sequence[Sequence], b: Sequence) -> list[Fraction]:
    """Solve ``a x = b`` for a nonsingular square system."""
    n = len(a)
    aug = [list(row) + [bi] for row, bi in zip(a, b)]
    m, pivots = rref(aug)
    if pivots != list(range(n)):
        raise ValueError("singular system")
    return [m[i][n] for i in range(n)]
