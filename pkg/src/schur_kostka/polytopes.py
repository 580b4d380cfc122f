"""Gelfand-Tsetlin patterns, semistandard tableaux and the su(3) fibre interval.

A GT pattern is stored top-down: ``rows[0]`` is the highest weight ``alpha``
(length n) and ``rows[-1]`` has length 1.  The row of length ``j`` sums to
``xi_1 + ... + xi_j`` so that ``xi_i`` counts the entries equal to ``i`` in
the corresponding tableau.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterator, Sequence

from .core_weights import fractions


def _int_vector(v: Sequence, name: str) -> tuple[int, ...]:
    out = []
    for x in fractions(v):
        if x.denominator != 1:
            raise ValueError(f"{name} must be integral, got {x}")
        out.append(int(x))
    return tuple(out)


def _check_alpha(alpha: tuple[int, ...]) -> None:
    if any(alpha[i] < alpha[i + 1] for i in range(len(alpha) - 1)):
        raise ValueError(f"alpha must be weakly decreasing, got {alpha}")


@dataclass(frozen=True)
class GTPattern:
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(int(x) for x in r) for r in self.rows)
        object.__setattr__(self, "rows", rows)
        n = len(rows)
        for j, r in enumerate(rows):
            if len(r) != n - j:
                raise ValueError(f"row {j} of a size-{n} pattern must have length {n - j}")
        for up, down in zip(rows, rows[1:]):
            for i, x in enumerate(down):
                if not (up[i + 1] <= x <= up[i]):
                    raise ValueError(f"interlacing fails between {up} and {down}")

    @property
    def n(self) -> int:
        return len(self.rows)

    @property
    def top(self) -> tuple[int, ...]:
        return self.rows[0]

    def content(self) -> tuple[int, ...]:
        sums = [sum(r) for r in reversed(self.rows)]
        return tuple(sums[0:1]) + tuple(sums[i] - sums[i - 1] for i in range(1, len(sums)))

    def to_json(self) -> list[list[int]]:
        return [list(r) for r in self.rows]

    def __str__(self) -> str:
        return " / ".join(",".join(map(str, r)) for r in self.rows)


@dataclass(frozen=True)
class Tableau:
    rows: tuple[tuple[int, ...], ...]
    n: int

    def __post_init__(self):
        rows = tuple(tuple(int(x) for x in r) for r in self.rows if len(r))
        object.__setattr__(self, "rows", rows)
        for r in rows:
            if any(not (1 <= x <= self.n) for x in r):
                raise ValueError(f"entries must lie in 1..{self.n}")
            if any(r[i] > r[i + 1] for i in range(len(r) - 1)):
                raise ValueError(f"row {r} is not weakly increasing")
        for a, b in zip(rows, rows[1:]):
            if len(b) > len(a):
                raise ValueError("row lengths must weakly decrease")
            if any(b[i] <= a[i] for i in range(len(b))):
                raise ValueError("columns must strictly increase")

    @property
    def shape(self) -> tuple[int, ...]:
        s = [len(r) for r in self.rows]
        return tuple(s + [0] * (self.n - len(s)))

    def content(self) -> tuple[int, ...]:
        c = [0] * self.n
        for r in self.rows:
            for x in r:
                c[x - 1] += 1
        return tuple(c)

    def to_json(self) -> list[list[int]]:
        return [list(r) for r in self.rows]

    def __str__(self) -> str:
        return " / ".join("".join(map(str, r)) if self.n < 10 else ",".join(map(str, r)) for r in self.rows)


def _targets(alpha: tuple[int, ...], xi: tuple[int, ...]) -> list[int]:
    """Required sums of the rows of length n-1, n-2, ..., 1."""
    n = len(alpha)
    return [sum(xi[: n - 1 - t]) for t in range(n - 1)]


def _children(row: tuple[int, ...], total: int) -> Iterator[tuple[int, ...]]:
    """Rows interlacing below ``row`` with the given sum, in lexicographic order."""
    m = len(row) - 1
    lo = [row[i + 1] for i in range(m)]
    hi = [row[i] for i in range(m)]
    # suffix bounds on the remaining sum
    suf_lo = [0] * (m + 1)
    suf_hi = [0] * (m + 1)
    for i in range(m - 1, -1, -1):
        suf_lo[i] = suf_lo[i + 1] + lo[i]
        suf_hi[i] = suf_hi[i + 1] + hi[i]
    cur: list[int] = []

    def rec(i: int, rem: int):
        if i == m:
            if rem == 0:
                yield tuple(cur)
            return
        a = max(lo[i], rem - suf_hi[i + 1])
        b = min(hi[i], rem - suf_lo[i + 1])
        for x in range(a, b + 1):
            cur.append(x)
            yield from rec(i + 1, rem - x)
            cur.pop()

    yield from rec(0, total)


def _prepare(alpha, xi) -> tuple[tuple[int, ...], tuple[int, ...]] | None:
    a = _int_vector(alpha, "alpha")
    x = _int_vector(xi, "xi")
    if len(a) != len(x):
        raise ValueError("alpha and xi must have the same length")
    _check_alpha(a)
    if sum(a) != sum(x):
        return None
    return a, x


def gt_enumerate(alpha, xi) -> list[GTPattern]:
    """All integer GT patterns with top row ``alpha`` and content ``xi``, lexicographically."""
    prep = _prepare(alpha, xi)
    if prep is None:
        return []
    a, x = prep
    targets = _targets(a, x)
    out: list[GTPattern] = []
    rows: list[tuple[int, ...]] = [a]

    def rec(t: int):
        if t == len(targets):
            out.append(GTPattern(tuple(rows)))
            return
        for child in _children(rows[-1], targets[t]):
            rows.append(child)
            rec(t + 1)
            rows.pop()

    rec(0)
    return out


def gt_count(alpha, xi) -> int:
    prep = _prepare(alpha, xi)
    if prep is None:
        return 0
    a, x = prep
    targets = tuple(_targets(a, x))

    @lru_cache(maxsize=None)
    def count(row: tuple[int, ...], t: int) -> int:
        if t == len(targets):
            return 1
        return sum(count(c, t + 1) for c in _children(row, targets[t]))

    return count(a, 0)


def gt_to_tableau(g: GTPattern) -> Tableau:
    n = g.n
    # shapes[k] = shape of the sub-tableau with entries <= k
    shapes = {k: list(g.rows[n - k]) + [0] * (n - k) for k in range(1, n + 1)}
    shapes[0] = [0] * n
    rows = []
    for r in range(n):
        row: list[int] = []
        for k in range(1, n + 1):
            row.extend([k] * (shapes[k][r] - shapes[k - 1][r]))
        rows.append(tuple(row))
    return Tableau(tuple(rows), n)


def tableau_to_gt(t: Tableau) -> GTPattern:
    n = t.n
    rows = []
    for k in range(n, 0, -1):
        rows.append(tuple(sum(1 for x in (t.rows[r] if r < len(t.rows) else ()) if x <= k) for r in range(k)))
    return GTPattern(tuple(rows))


def ssyt_enumerate(alpha, xi) -> list[Tableau]:
    """Semistandard tableaux of shape ``alpha`` and content ``xi``, filled cell by cell."""
    prep = _prepare(alpha, xi)
    if prep is None:
        return []
    shape, content = prep
    n = len(shape)
    if any(c < 0 for c in content) or shape[-1] < 0:
        return []
    cells = [(r, c) for r in range(n) for c in range(shape[r])]
    grid = [[0] * shape[r] for r in range(n)]
    left = list(content)
    out: list[Tableau] = []

    def rec(idx: int):
        if idx == len(cells):
            out.append(Tableau(tuple(tuple(row) for row in grid), n))
            return
        r, c = cells[idx]
        lo = 1
        if c > 0:
            lo = max(lo, grid[r][c - 1])
        if r > 0:
            lo = max(lo, grid[r - 1][c] + 1)
        for v in range(lo, n + 1):
            if left[v - 1] == 0:
                continue
            grid[r][c] = v
            left[v - 1] -= 1
            rec(idx + 1)
            left[v - 1] += 1
        grid[r][c] = 0

    rec(0)
    return out


def ssyt_count(alpha, xi) -> int:
    return len(ssyt_enumerate(alpha, xi))


def su3_interval(alpha, xi) -> tuple[Fraction, Fraction]:
    """Range of ``x_1^(2)`` for the su(3) fibre, with the middle row summing to ``xi_2 + xi_3``.

    Accepts rational data; the interval is empty when ``lo > hi``.
    """
    a = fractions(alpha)
    x = fractions(xi)
    if len(a) != 3 or len(x) != 3:
        raise ValueError("su3_interval needs length-3 alpha and xi")
    lo = max(a[1], x[1], x[2], x[1] + x[2] - a[1])
    hi = a[0] - x[0] + min(x[0], a[1])
    return lo, hi
