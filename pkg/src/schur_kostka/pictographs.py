"""Liana forests: a pictographic encoding of Young tableaux.

The grid is a triangle of side ``n``.  Level ``L`` (1 = ground, ``n + 1`` =
apex) carries the points ``(L, 0) .. (L, n + 1 - L)``.  From ``(L, i)`` an
``NW`` edge goes to ``(L + 1, i - 1)`` and an ``NE`` edge to ``(L + 1, i)``.

A column of a tableau with ``j`` entries becomes a liana rooted at ``(1, j)``;
an entry ``p`` makes it step ``NW`` between levels ``n + 1 - p`` and
``n + 2 - p``, every other step is ``NE``.  Columns are read right to left.
Since a liana makes exactly ``j`` NW steps it ends at the apex, and it
follows a side of the triangle whenever its position reaches ``0`` or the
right end of its level.
"""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Sequence

from .polytopes import Tableau, ssyt_enumerate

NW, NE = "NW", "NE"


@dataclass(frozen=True)
class Liana:
    n: int
    root: int
    left_levels: frozenset[int]

    def __post_init__(self):
        object.__setattr__(self, "left_levels", frozenset(int(x) for x in self.left_levels))
        if not 1 <= self.root <= self.n:
            raise ValueError(f"root must lie in 1..{self.n}")
        if any(not 1 <= x <= self.n for x in self.left_levels):
            raise ValueError(f"left levels must lie in 1..{self.n}")
        if len(self.left_levels) != self.root:
            raise ValueError("a liana rooted at j turns left exactly j times")

    @classmethod
    def from_column(cls, column: Sequence[int], n: int) -> "Liana":
        col = [int(p) for p in column]
        if any(b <= a for a, b in zip(col, col[1:])):
            raise ValueError(f"column {col} is not strictly increasing")
        if any(not 1 <= p <= n for p in col):
            raise ValueError(f"entries must lie in 1..{n}")
        return cls(n, len(col), frozenset(n + 1 - p for p in col))

    @property
    def entries(self) -> tuple[int, ...]:
        """The column entries, i.e. the left-set as printed next to each liana."""
        return tuple(sorted(self.n + 1 - L for L in self.left_levels))

    def path(self) -> list[tuple[int, int, str]]:
        """Edges ``(level, position, direction)`` from the ground to the apex."""
        out = []
        pos = self.root
        for L in range(1, self.n + 1):
            if L in self.left_levels:
                out.append((L, pos, NW))
                pos -= 1
            else:
                out.append((L, pos, NE))
        return out


def _columns(rows: Sequence[Sequence[int]]) -> list[list[int]]:
    rows = [list(r) for r in rows if len(r)]
    width = len(rows[0]) if rows else 0
    return [[r[c] for r in rows if c < len(r)] for c in range(width)]


def tableau_to_lianas(t, n: int | None = None) -> list[Liana]:
    """One liana per column, read from the rightmost column to the leftmost.

    ``t`` may be a :class:`Tableau` or plain rows; rows need not be weakly
    increasing, only the columns must increase strictly.
    """
    if isinstance(t, Tableau):
        rows, n = t.rows, t.n
    else:
        rows = t
        if n is None:
            raise ValueError("n is required for plain rows")
    if any(len(b) > len(a) for a, b in zip(rows, rows[1:])):
        raise ValueError("row lengths must weakly decrease")
    return [Liana.from_column(col, n) for col in reversed(_columns(rows))]


@dataclass(frozen=True)
class LianaForest:
    n: int
    edges: tuple[tuple[int, int, str, int], ...]  # sorted (level, position, direction, multiplicity), positive only

    def multiplicity(self, level: int, pos: int, direction: str) -> int:
        return self._map().get((level, pos, direction), 0)

    def _map(self) -> dict:
        return {(L, i, d): m for L, i, d, m in self.edges}

    def level_totals(self, direction: str = NW) -> list[int]:
        """Total multiplicity of ``direction`` edges between level L and L+1, for L = 1..n."""
        tot = [0] * self.n
        for L, _, d, m in self.edges:
            if d == direction:
                tot[L - 1] += m
        return tot

    def is_conserved(self) -> bool:
        mp = self._map()
        for L in range(2, self.n + 1):
            for i in range(0, self.n + 2 - L):
                inflow = mp.get((L - 1, i + 1, NW), 0) + mp.get((L - 1, i, NE), 0)
                outflow = mp.get((L, i, NW), 0) + mp.get((L, i, NE), 0)
                if inflow != outflow:
                    return False
        return True

    def boundary_labels(self) -> dict[str, list[int]]:
        """Multiplicities on the left side (NE edges at position 0) and right side (NW edges at the right end)."""
        mp = self._map()
        left = [mp.get((L, 0, NE), 0) for L in range(1, self.n + 1)]
        right = [mp.get((L, self.n + 1 - L, NW), 0) for L in range(1, self.n + 1)]
        return {"left": left, "right": right}

    def to_json(self) -> dict:
        return {"n": self.n, "edges": [[L, i, d, m] for L, i, d, m in self.edges]}

    @classmethod
    def from_json(cls, data: dict) -> "LianaForest":
        return cls(int(data["n"]), tuple(sorted((int(L), int(i), str(d), int(m)) for L, i, d, m in data["edges"])))

    def dumps(self) -> str:
        return json.dumps(self.to_json())

    def to_svg(self, unit: float = 40.0) -> str:
        """Edges drawn with stroke width proportional to multiplicity."""
        h = unit * 3**0.5 / 2
        n = self.n

        def xy(L, i):
            return (unit * (i + (L - 1) / 2) + unit / 2, h * (n + 1 - L) + unit / 2)

        W = unit * (n + 1)
        H = h * n + unit
        parts = [f'<svg xmlns="http://www.w3.org/2000/svg" width="{W:.1f}" height="{H:.1f}">']
        # background grid
        for L in range(1, n + 1):
            for i in range(0, n + 2 - L):
                x0, y0 = xy(L, i)
                for d, j in ((NW, i - 1), (NE, i)):
                    if 0 <= j <= n - L:
                        x1, y1 = xy(L + 1, j)
                        parts.append(f'<line x1="{x0:.1f}" y1="{y0:.1f}" x2="{x1:.1f}" y2="{y1:.1f}" stroke="#ddd" stroke-width="1"/>')
        for L, i, d, m in self.edges:
            x0, y0 = xy(L, i)
            x1, y1 = xy(L + 1, i - 1 if d == NW else i)
            colour = "#b03030" if d == NW else "#3050b0"
            parts.append(
                f'<line x1="{x0:.1f}" y1="{y0:.1f}" x2="{x1:.1f}" y2="{y1:.1f}" stroke="{colour}" stroke-width="{1 + m:.0f}"/>'
            )
            parts.append(f'<text x="{(x0 + x1) / 2:.1f}" y="{(y0 + y1) / 2:.1f}" font-size="10">{m}</text>')
        parts.append("</svg>")
        return "\n".join(parts)


def lianas_to_forest(lianas: Iterable[Liana], n: int | None = None) -> LianaForest:
    lianas = list(lianas)
    if n is None:
        if not lianas:
            raise ValueError("n is required for an empty forest")
        n = lianas[0].n
    acc: Counter = Counter()
    for li in lianas:
        if li.n != n:
            raise ValueError("all lianas must live on the same grid")
        for e in li.path():
            acc[e] += 1
    return LianaForest(n, tuple(sorted((L, i, d, m) for (L, i, d), m in acc.items())))


def forest_readout(f: LianaForest) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """``(alpha, xi)``: shape from the ground-level roots, content from the NW totals read downward.

    ``alpha_i`` counts the lianas rooted at positions ``>= i``; ``xi_p`` is the
    number of NW edges between levels ``n + 1 - p`` and ``n + 2 - p``.
    """
    n = f.n
    mp = f._map()
    roots = [mp.get((1, j, NW), 0) + mp.get((1, j, NE), 0) for j in range(n + 1)]
    alpha = tuple(sum(roots[i:]) for i in range(1, n + 1))
    nw = f.level_totals(NW)
    xi = tuple(nw[n - p] for p in range(1, n + 1))
    return alpha, xi


def tableau_forest(t, n: int | None = None) -> LianaForest:
    if isinstance(t, Tableau):
        n = t.n
    return lianas_to_forest(tableau_to_lianas(t, n), n)


@dataclass
class ForestCount:
    count: int
    tableaux: int
    collisions: list[tuple[Tableau, Tableau]]

    @property
    def injective(self) -> bool:
        return self.count == self.tableaux


def forest_census(alpha, xi) -> ForestCount:
    seen: dict[LianaForest, Tableau] = {}
    clashes = []
    tabs = ssyt_enumerate(alpha, xi)
    for t in tabs:
        f = tableau_forest(t)
        if f in seen:
            clashes.append((seen[f], t))
        else:
            seen[f] = t
    return ForestCount(len(seen), len(tabs), clashes)


def forest_count(alpha, xi) -> int:
    """Number of distinct forests obtained from the semistandard tableaux of shape alpha, content xi."""
    return forest_census(alpha, xi).count


def column_strict_fillings(alpha, xi) -> list[tuple[tuple[int, ...], ...]]:
    """All fillings with strictly increasing columns and content ``xi`` (rows unconstrained)."""
    from itertools import combinations

    shape = [int(a) for a in alpha]
    n = len(shape)
    content = [int(x) for x in xi]
    width = shape[0] if shape else 0
    heights = [sum(1 for s in shape if s > c) for c in range(width)]
    out = []
    cols: list[tuple[int, ...]] = []
    left = list(content)

    def rec(c):
        if c == width:
            rows = tuple(tuple(cols[k][r] for k in range(width) if heights[k] > r) for r in range(n))
            out.append(tuple(r for r in rows if r))
            return
        for col in combinations(range(1, n + 1), heights[c]):
            if any(left[p - 1] == 0 for p in col):
                continue
            for p in col:
                left[p - 1] -= 1
            cols.append(col)
            rec(c + 1)
            cols.pop()
            for p in col:
                left[p - 1] += 1

    if sum(shape) == sum(content):
        rec(0)
    return out


def non_ssyt_collision(alpha, xi):
    """A column-strict, non-semistandard filling whose forest equals that of some SSYT, or None."""
    n = len(alpha)
    ssyt = {tableau_forest(t): t for t in ssyt_enumerate(alpha, xi)}
    for rows in column_strict_fillings(alpha, xi):
        if any(r[i] > r[i + 1] for r in rows for i in range(len(r) - 1)):
            f = tableau_forest(rows, n)
            if f in ssyt:
                return rows, ssyt[f]
    return None
