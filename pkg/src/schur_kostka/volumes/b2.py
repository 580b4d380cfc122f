"""B2 volume function by accumulating quadratic jumps across the singular lines.

The support is the octagon ``|xi_i| <= a1``, ``|xi_1 +- xi_2| <= a1 + a2``.
Across each of the 8 boundary and 8 interior lines the polynomial
determination changes by ``c * L(xi)^2`` with ``|c| = 1/2`` on the axis
parallel lines and ``|c| = 1/4`` on the diagonal ones.  The sign of ``c``
may change at every vertex of the arrangement, so it is carried per
elementary segment.  The signs are fixed once per ``alpha`` by requiring
that the jumps around every vertex cancel (I is single valued), which
leaves a one dimensional solution space; the scale is fixed by the outer
face ``xi_1 = a1`` where ``I`` must vanish from outside with the value
``1/2 (xi_1 - a1)^2`` just inside.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from .._linalg import nullspace
from ..core_weights import fractions
from ._plane import Arrangement, Line, Segment, build, sign

# exact rational slopes tried in turn for the accumulation ray
THETA_LADDER = (Fraction(13, 17), Fraction(11, 19), Fraction(23, 29), Fraction(5, 31), Fraction(37, 41), Fraction(2, 43))
TIEBREAK = (Fraction(19), Fraction(7))


def _alpha(alpha: Sequence) -> tuple[Fraction, Fraction]:
    a1, a2 = fractions(alpha)
    if not a1 > a2 > 0:
        raise ValueError(f"B2 volume needs a1 > a2 > 0, got ({a1}, {a2})")
    return a1, a2


def b2_lines(alpha: Sequence) -> list[Line]:
    """The 8 boundary lines followed by the 8 interior singular lines."""
    a1, a2 = _alpha(alpha)
    out = []
    families = ((a1, a1 + a2, "a1", "(a1+a2)"), (a2, a1 - a2, "a2", "(a1-a2)"))
    for big, diag, name_ax, name_dg in families:
        for s, ss in ((1, "+"), (-1, "-")):
            out.append(Line(Fraction(1), Fraction(0), s * big, f"xi1={ss}{name_ax}"))
            out.append(Line(Fraction(0), Fraction(1), s * big, f"xi2={ss}{name_ax}"))
            out.append(Line(Fraction(1), Fraction(1), s * diag, f"xi1+xi2={ss}{name_dg}"))
            out.append(Line(Fraction(1), Fraction(-1), s * diag, f"xi1-xi2={ss}{name_dg}"))
    return out


def in_octagon(alpha: Sequence, xi: Sequence) -> bool:
    a1, a2 = fractions(alpha)
    x1, x2 = fractions(xi)
    return abs(x1) <= a1 and abs(x2) <= a1 and abs(x1 + x2) <= a1 + a2 and abs(x1 - x2) <= a1 + a2


@dataclass
class B2Model:
    alpha: tuple[Fraction, Fraction]
    arrangement: Arrangement
    coeffs: list[Fraction]
    _cells: dict = field(default_factory=dict, repr=False)

    @property
    def segments(self) -> list[Segment]:
        return self.arrangement.segments

    def line_of(self, s: Segment) -> Line:
        return self.arrangement.lines[s.line]

    def jump_table(self) -> list[dict]:
        """Per segment: line label, endpoints, and the coefficient c of the jump ``c * L^2``
        collected when ``L`` increases through 0."""
        out = []
        for s, c in zip(self.segments, self.coeffs):
            out.append({"line": self.line_of(s).label, "p": s.p, "q": s.q, "coeff": c, "boundary": s.boundary})
        return out


def _vertex_rows(arr: Arrangement) -> list[list[Fraction]]:
    """Cancellation of the jumps c_e L_e^2 around every vertex.

    Going counter-clockwise around a vertex, a segment leaving in direction
    ``d`` is crossed with ``L`` increasing iff ``n . rot90(d) > 0``; the three
    rows are the coefficients of ``x^2, 2xy, y^2`` in ``sum +-c_e (n_e . x)^2``.
    """
    rows = []
    for v in sorted(arr.vertices()):
        inc = []
        for si, s in enumerate(arr.segments):
            if s.p == v:
                d = (s.q[0] - s.p[0], s.q[1] - s.p[1])
            elif s.q == v:
                d = (s.p[0] - s.q[0], s.p[1] - s.q[1])
            else:
                continue
            ln = arr.lines[s.line]
            rot = (-d[1], d[0])
            inc.append((si, sign(ln.slope(rot)), ln))
        for comp in range(3):
            row = [Fraction(0)] * len(arr.segments)
            for si, sg, ln in inc:
                coef = (ln.a * ln.a, ln.a * ln.b, ln.b * ln.b)[comp]
                row[si] += sg * coef
            rows.append(row)
    return rows


@lru_cache(maxsize=64)
def b2_model(alpha: tuple) -> B2Model:
    a = _alpha(alpha)
    lines = b2_lines(a)
    boundary_keys = {ln.key() for ln in lines[:8]}

    arr = build(lines, lambda p: in_octagon(a, p))
    for s in arr.segments:
        s.boundary = arr.lines[s.line].key() in boundary_keys
    basis = nullspace(_vertex_rows(arr), len(arr.segments))
    if len(basis) != 1:
        raise ArithmeticError(f"expected a one dimensional solution space, got {len(basis)}")
    v = basis[0]
    ref = next(i for i, s in enumerate(arr.segments) if arr.lines[s.line].label == "xi1=+a1")
    scale = Fraction(-1, 2) / v[ref]
    coeffs = [x * scale for x in v]
    for s, c in zip(arr.segments, coeffs):
        ln = arr.lines[s.line]
        want = Fraction(1, 2) if ln.a * ln.b == 0 else Fraction(1, 4)
        if abs(c) != want:
            raise ArithmeticError(f"jump magnitude {c} on {ln.label}, expected {want}")
    return B2Model(a, arr, coeffs)


def _crosses(P, Q, s: Segment):
    """Parameter ``u`` in [0, 1] on ``s`` where segment P->Q meets it (P excluded), else None."""
    d = (Q[0] - P[0], Q[1] - P[1])
    e = (s.q[0] - s.p[0], s.q[1] - s.p[1])
    den = -d[0] * e[1] + d[1] * e[0]
    if den == 0:
        return None
    r = (s.p[0] - P[0], s.p[1] - P[1])
    t = (-r[0] * e[1] + r[1] * e[0]) / den
    u = (d[0] * r[1] - d[1] * r[0]) / den
    if 0 < t <= 1 and 0 <= u <= 1:
        return t, u
    return None


def _anchor(model: B2Model, target) -> tuple[Fraction, Fraction]:
    a1 = model.alpha[0]
    verts = model.arrangement.vertices()
    for theta in THETA_LADDER:
        P = (-3 * a1, -7 * a1 * theta)
        d = (target[0] - P[0], target[1] - P[1])
        clean = True
        for v in verts:
            if v == target:
                continue
            w = (v[0] - P[0], v[1] - P[1])
            if d[0] * w[1] - d[1] * w[0] == 0:
                t = (w[0] * d[0] + w[1] * d[1]) / (d[0] * d[0] + d[1] * d[1])
                if 0 < t < 1:
                    clean = False
                    break
        if clean:
            return P
    raise ArithmeticError("no vertex-free accumulation ray found")


def _accumulate(model: B2Model, xi) -> tuple[Fraction, ...]:
    """Coefficients (x^2, xy, y^2, x, y, 1) of the determination at a generic point ``xi``."""
    P = _anchor(model, xi)
    poly = [Fraction(0)] * 6
    for s, c in zip(model.segments, model.coeffs):
        hit = _crosses(P, xi, s)
        if hit is None:
            continue
        ln = model.line_of(s)
        sg = sign(ln.value(xi) - ln.value(P))
        a, b, k = ln.a, ln.b, ln.c
        f = sg * c
        # (a x + b y - k)^2
        terms = (a * a, 2 * a * b, b * b, -2 * a * k, -2 * b * k, k * k)
        for i in range(6):
            poly[i] += f * terms[i]
    return tuple(poly)


def _eval(poly, xi) -> Fraction:
    x, y = xi
    return poly[0] * x * x + poly[1] * x * y + poly[2] * y * y + poly[3] * x + poly[4] * y + poly[5]


def _cell_point(model: B2Model, xi):
    """Sign vector of the cell reached from ``xi`` along the tie-break direction, and a point in it."""
    lines = model.arrangement.lines
    signs = []
    step = None
    for ln in lines:
        val = ln.value(xi)
        sl = ln.slope(TIEBREAK)
        signs.append(sign(val) if val != 0 else sign(sl))
        if val != 0 and sl != 0 and sign(val) != sign(sl):
            r = abs(val / sl) / 2
            step = r if step is None else min(step, r)
    if all(ln.value(xi) != 0 for ln in lines):
        return tuple(signs), xi
    step = step if step is not None else Fraction(1)
    return tuple(signs), (xi[0] + step * TIEBREAK[0], xi[1] + step * TIEBREAK[1])


def b2_determination(alpha: Sequence, xi: Sequence) -> tuple[Fraction, ...]:
    """Quadratic polynomial (x^2, xy, y^2, x, y, 1) representing I_B2 on the cell of ``xi``."""
    model = b2_model(_alpha(alpha))
    x = fractions(xi)
    key, rep = _cell_point(model, x)
    poly = model._cells.get(key)
    if poly is None:
        poly = _accumulate(model, rep)
        model._cells[key] = poly
    return poly


def vol_b2(alpha: Sequence, xi: Sequence) -> Fraction:
    """I_B2(alpha; xi) with ``alpha`` and ``xi`` in orthogonal coordinates."""
    a = _alpha(alpha)
    x = fractions(xi)
    if len(x) != 2:
        raise ValueError("B2 xi has two orthogonal coordinates")
    if not in_octagon(a, x):
        return Fraction(0)
    return _eval(b2_determination(a, x), x)


def vol_b2_ray(alpha: Sequence, xi: Sequence) -> Fraction:
    """Same value by a direct ray accumulation to ``xi`` itself (no cell cache)."""
    a = _alpha(alpha)
    x = fractions(xi)
    model = b2_model(a)
    return _eval(_accumulate(model, x), x)
