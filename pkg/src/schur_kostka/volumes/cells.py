"""Cells of polynomiality in planar sections.

Candidate lines are all singular walls meeting the section.  A segment of a
candidate line is kept when the polynomial determinations on its two sides
differ (or when it bounds the support), so walls along which ``I`` happens to
be regular do not split cells.  Faces are then counted with Euler's formula.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Sequence

from ..core_weights import fractions
from .b2 import _alpha as _b2_alpha
from .b2 import _eval as _b2_eval
from .b2 import b2_determination, b2_lines, in_octagon, vol_b2
from ._plane import Arrangement, Line, build, face_samples
from .su import in_permutahedron, su4_determination, vol_su3, vol_su4
from .walls import su4_walls

EPS = Fraction(1, 10**7)
# fixed generic probe offsets used to compare two polynomial determinations
_PROBES = ((Fraction(3, 7), Fraction(-5, 11)), (Fraction(-13, 17), Fraction(2, 19)), (Fraction(1, 23), Fraction(29, 31)), (Fraction(-7, 5), Fraction(-3, 2)))


@dataclass
class CellArrangement:
    algebra: str
    alpha: tuple[Fraction, ...]
    plane: tuple | None
    arrangement: Arrangement
    embed: Callable = None
    value: Callable = None

    @property
    def lines(self) -> list[Line]:
        return self.arrangement.lines

    @property
    def counts(self) -> tuple[int, int, int]:
        return self.arrangement.counts()

    @property
    def V(self) -> int:
        return self.counts[0]

    @property
    def E(self) -> int:
        return self.counts[1]

    @property
    def F(self) -> int:
        return self.counts[2]

    def polygon_vertices(self) -> list:
        return sorted({p for s in self.arrangement.segments if s.boundary for p in (s.p, s.q)})

    def samples(self) -> list[tuple]:
        """(2-d point, full xi, I value) for one probe point per face sector."""
        out = []
        for p in face_samples(self.arrangement):
            x = self.embed(p)
            out.append((p, x, self.value(x)))
        return out

    def summary(self) -> dict:
        v, e, f = self.counts
        return {
            "algebra": self.algebra,
            "alpha": [str(a) for a in self.alpha],
            "plane": None if self.plane is None else [self.plane[0], str(self.plane[1])],
            "V": v,
            "E": e,
            "F": f,
            "boundary_edges": sum(1 for s in self.arrangement.segments if s.boundary),
            "lines": sorted({self.arrangement.lines[s.line].label for s in self.arrangement.segments}),
        }


def _classify(arr: Arrangement, inside, differ) -> Arrangement:
    keep = []
    for s in arr.segments:
        ln = arr.lines[s.line]
        mid = ((s.p[0] + s.q[0]) / 2, (s.p[1] + s.q[1]) / 2)
        plus = (mid[0] + EPS * ln.a, mid[1] + EPS * ln.b)
        minus = (mid[0] - EPS * ln.a, mid[1] - EPS * ln.b)
        if not (inside(plus) and inside(minus)):
            s.boundary = True
            keep.append(s)
        elif differ(plus, minus):
            keep.append(s)
    return Arrangement(arr.lines, arr.points, keep, arr.inside)


def _su4_section(alpha, plane) -> CellArrangement:
    a = fractions(alpha)
    if len(a) != 4:
        raise ValueError("su(4) sections need four Young components")
    k, val = plane
    k = int(k)
    val = Fraction(val)
    if not 1 <= k <= 4:
        raise ValueError("slice index must be in 1..4")
    S = sum(a)
    rest = [t for t in range(4) if t != k - 1]
    u_idx, v_idx, w_idx = rest

    def emb(p):
        x = [Fraction(0)] * 4
        x[k - 1] = val
        x[u_idx] = p[0]
        x[v_idx] = p[1]
        x[w_idx] = S - val - p[0] - p[1]
        return tuple(x)

    lines: dict[tuple, Line] = {}
    for w in su4_walls():
        c, rhs = w.form(a, 4)
        # substitute xi_k = val and xi_w = S - val - u - v
        cu = c[u_idx] - c[w_idx]
        cv = c[v_idx] - c[w_idx]
        const = rhs - c[k - 1] * val - c[w_idx] * (S - val)
        if cu == 0 and cv == 0:
            continue
        ln = Line(cu, cv, const, w.label())
        lines.setdefault(ln.key(), ln)

    def inside(p):
        return in_permutahedron(a, emb(p))

    arr = build(list(lines.values()), inside)
    probes = [emb(p) for p in _PROBES]

    def differ(p, q):
        xp, xq = emb(p), emb(q)
        return any(su4_determination(a, xp, y) != su4_determination(a, xq, y) for y in probes)

    return CellArrangement("A3", a, (k, val), _classify(arr, inside, differ), emb, lambda x: vol_su4(a, x))


def _su3_determination(a, ref, y) -> Fraction:
    terms = [lambda x: a[0] - a[1], lambda x: a[1] - a[2]]
    for i in range(3):
        terms.append(lambda x, i=i: a[0] - x[i])
        terms.append(lambda x, i=i: x[i] - a[2])
    vals = [t(ref) for t in terms]
    m = min(vals)
    if m < 0:
        return Fraction(0)
    return terms[vals.index(m)](y)


def _su3_section(alpha) -> CellArrangement:
    a = fractions(alpha)
    S = sum(a)

    def emb(p):
        return (p[0], p[1], S - p[0] - p[1])

    lines = []
    for i in range(3):
        for j in range(3):
            if i < 2:
                c = [Fraction(int(t == i)) for t in range(2)]
                lines.append(Line(c[0], c[1], a[j], f"xi{i + 1}=alpha{j + 1}"))
            else:
                lines.append(Line(Fraction(-1), Fraction(-1), a[j] - S, f"xi3=alpha{j + 1}"))

    def inside(p):
        return in_permutahedron(a, emb(p))

    arr = build(lines, inside)
    probes = [emb(p) for p in _PROBES]

    def differ(p, q):
        return any(_su3_determination(a, emb(p), y) != _su3_determination(a, emb(q), y) for y in probes)

    return CellArrangement("A2", a, None, _classify(arr, inside, differ), emb, lambda x: vol_su3(a, x))


def _b2_section(alpha) -> CellArrangement:
    a = _b2_alpha(alpha)

    def inside(p):
        return in_octagon(a, p)

    arr = build(b2_lines(a), inside)

    def differ(p, q):
        pp, pq = b2_determination(a, p), b2_determination(a, q)
        return any(_b2_eval(pp, y) != _b2_eval(pq, y) for y in _PROBES)

    return CellArrangement("B2", a, None, _classify(arr, inside, differ), lambda p: tuple(p), lambda x: vol_b2(a, x))


def cells_crosssection(algebra_tag: str, alpha: Sequence, plane: tuple | None = None) -> CellArrangement:
    """Cells of polynomiality of I in a planar section.

    su(4): ``plane = (k, value)`` fixes ``xi_k``; su(3) and B2 use the whole
    two-dimensional support (``plane`` is ignored).
    """
    tag = str(algebra_tag).upper()
    if tag in ("A3", "SU4"):
        if plane is None:
            raise ValueError("su(4) sections need plane=(k, value)")
        return _su4_section(alpha, plane)
    if tag in ("A2", "SU3"):
        return _su3_section(alpha)
    if tag in ("B2", "SO5"):
        return _b2_section(alpha)
    raise ValueError(f"no cell sections for {algebra_tag}")


def b2_cell_signatures(alpha: Sequence) -> set[tuple[int, ...]]:
    """Sign vectors of the cells with respect to the 8 interior lines, labelled generically.

    Lines are identified by their label (e.g. ``xi1=+a2``), so signatures from
    different ``alpha`` can be pooled.
    """
    sec = _b2_section(alpha)
    interior = b2_lines(sec.alpha)[8:]
    sigs = set()
    for p in face_samples(sec.arrangement):
        sigs.add(tuple((ln.value(p) > 0) - (ln.value(p) < 0) for ln in interior))
    return sigs


def b2_cell_types(alphas: Sequence) -> set[tuple[int, ...]]:
    out: set = set()
    for a in alphas:
        out |= b2_cell_signatures(a)
    return out
