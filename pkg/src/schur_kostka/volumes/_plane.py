"""Exact planar line arrangements clipped to a convex polygon."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Sequence

Point = tuple[Fraction, Fraction]


@dataclass(frozen=True)
class Line:
    """The line ``a*x + b*y = c``; ``value(p)`` is positive on the side ``(a, b)`` points to."""

    a: Fraction
    b: Fraction
    c: Fraction
    label: str = ""

    def value(self, p: Sequence) -> Fraction:
        return self.a * p[0] + self.b * p[1] - self.c

    def slope(self, d: Sequence) -> Fraction:
        return self.a * d[0] + self.b * d[1]

    def key(self) -> tuple:
        """Normalised coefficients, equal for coincident lines."""
        f = self.a if self.a != 0 else self.b
        return (self.a / f, self.b / f, self.c / f)


def sign(x) -> int:
    return (x > 0) - (x < 0)


def intersect(l1: Line, l2: Line) -> Point | None:
    det = l1.a * l2.b - l2.a * l1.b
    if det == 0:
        return None
    x = (l1.c * l2.b - l2.c * l1.b) / det
    y = (l1.a * l2.c - l2.a * l1.c) / det
    return (Fraction(x), Fraction(y))


@dataclass
class Segment:
    line: int
    p: Point
    q: Point
    boundary: bool = False


@dataclass
class Arrangement:
    lines: list[Line]
    points: list[Point]
    segments: list[Segment]
    inside: Callable[[Point], bool] = field(repr=False)

    def vertices(self) -> set[Point]:
        out = set()
        for s in self.segments:
            out.add(s.p)
            out.add(s.q)
        return out

    def components(self) -> int:
        parent: dict[Point, Point] = {}

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for s in self.segments:
            parent.setdefault(s.p, s.p)
            parent.setdefault(s.q, s.q)
            ra, rb = find(s.p), find(s.q)
            if ra != rb:
                parent[ra] = rb
        return len({find(x) for x in parent})

    def counts(self) -> tuple[int, int, int]:
        """``(V, E, F)`` with ``F`` the number of bounded faces (Euler: V - E + F = C)."""
        v = len(self.vertices())
        e = len(self.segments)
        return v, e, e - v + self.components()

    def filtered(self, keep: Callable[[Segment], bool]) -> "Arrangement":
        return Arrangement(self.lines, self.points, [s for s in self.segments if keep(s)], self.inside)


def build(lines: Sequence[Line], inside: Callable[[Point], bool], boundary: Callable[[Segment], bool] | None = None) -> Arrangement:
    """Split every line at all pairwise intersections lying in the closed region."""
    uniq: dict[tuple, Line] = {}
    for ln in lines:
        uniq.setdefault(ln.key(), ln)
    lines = list(uniq.values())
    pts: set[Point] = set()
    for l1, l2 in itertools.combinations(lines, 2):
        p = intersect(l1, l2)
        if p is not None and inside(p):
            pts.add(p)
    segs = []
    for i, ln in enumerate(lines):
        on = [p for p in pts if ln.value(p) == 0]
        on.sort(key=lambda p: -ln.b * p[0] + ln.a * p[1])
        for p, q in zip(on, on[1:]):
            mid = ((p[0] + q[0]) / 2, (p[1] + q[1]) / 2)
            if inside(mid):
                s = Segment(i, p, q)
                if boundary is not None:
                    s.boundary = boundary(s)
                segs.append(s)
    return Arrangement(lines, sorted(pts), segs, inside)


def face_samples(arr: Arrangement) -> list[Point]:
    """One interior point per bounded face, found by probing every angular sector at every vertex."""
    adj: dict[Point, list[tuple]] = {}
    for s in arr.segments:
        adj.setdefault(s.p, []).append((s.q[0] - s.p[0], s.q[1] - s.p[1]))
        adj.setdefault(s.q, []).append((s.p[0] - s.q[0], s.p[1] - s.q[1]))
    out = []
    for v, dirs in adj.items():
        dirs = sorted(dirs, key=_angle_key)
        for i, d1 in enumerate(dirs):
            d2 = dirs[(i + 1) % len(dirs)]
            cross = d1[0] * d2[1] - d1[1] * d2[0]
            if len(dirs) == 1:
                probe = (-d1[1], d1[0])
            elif cross > 0:
                probe = (d1[0] + d2[0], d1[1] + d2[1])
            elif cross == 0 and d1[0] * d2[0] + d1[1] * d2[1] < 0:
                probe = (-d1[1], d1[0])
            else:
                continue  # reflex sector: the face is sampled from another vertex
            t = _safe_step(arr, v, probe)
            p = (v[0] + t * probe[0], v[1] + t * probe[1])
            if arr.inside(p):
                out.append(p)
    return out


def _angle_key(d):
    # exact angular order: upper half-plane first, then a monotone rational parameter
    x, y = d
    half = 0 if (y > 0 or (y == 0 and x > 0)) else 1
    if half == 0:
        key = -x / (abs(x) + abs(y))
    else:
        key = x / (abs(x) + abs(y))
    return (half, key)


def _safe_step(arr: Arrangement, v: Point, d) -> Fraction:
    t = Fraction(1)
    for ln in arr.lines:
        val = ln.value(v)
        sl = ln.slope(d)
        if val != 0 and sl != 0:
            r = -val / sl
            if r > 0:
                t = min(t, r / 2)
    return t
