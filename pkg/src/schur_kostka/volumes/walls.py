"""Singular walls, predicted jumps of I_su(4), and transverse smoothness probes."""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Sequence

from ..core_weights import fractions
from .b2 import b2_lines, vol_b2
from .su import _sgn, su4_determination, vol_su3, vol_su4


@dataclass(frozen=True)
class WallSpec:
    """A singular hyperplane.

    * ``single``: ``xi_i = alpha_j`` with ``indices = (i, j)``;
    * ``pair``: ``xi_i + xi_j = alpha_k + alpha_l`` with ``indices = (i, j, k, l)``;
    * ``b2_line``: ``indices = (m,)`` indexing :func:`b2_lines`.

    Indices are 1-based.  ``side = +1`` means the wall is crossed in the
    direction of increasing ``L`` (the left-hand side minus the right-hand side).
    """

    kind: str
    indices: tuple[int, ...]
    side: int = 1

    def __post_init__(self):
        if self.kind not in ("single", "pair", "b2_line"):
            raise ValueError(f"unknown wall kind {self.kind!r}")
        if self.side not in (1, -1):
            raise ValueError("side must be +1 or -1")
        idx = self.indices
        if self.kind == "single" and len(idx) != 2:
            raise ValueError("single walls need (i, j)")
        if self.kind == "pair":
            if len(idx) != 4 or not (idx[0] < idx[1] and idx[2] < idx[3]):
                raise ValueError("pair walls need (i, j, k, l) with i < j and k < l")
        if self.kind == "b2_line" and (len(idx) != 1 or not 1 <= idx[0] <= 16):
            raise ValueError("b2_line walls need one index in 1..16")

    def form(self, alpha: Sequence, n: int | None = None) -> tuple[tuple[Fraction, ...], Fraction]:
        """Coefficients ``c`` and constant ``k`` with ``L(xi) = c . xi - k``."""
        a = fractions(alpha)
        if self.kind == "b2_line":
            ln = b2_lines(a)[self.indices[0] - 1]
            return (ln.a, ln.b), ln.c
        n = n or len(a)
        c = [Fraction(0)] * n
        if self.kind == "single":
            i, j = self.indices
            c[i - 1] = Fraction(1)
            return tuple(c), a[j - 1]
        i, j, k, l = self.indices
        c[i - 1] = c[j - 1] = Fraction(1)
        return tuple(c), a[k - 1] + a[l - 1]

    def value(self, alpha: Sequence, xi: Sequence) -> Fraction:
        c, k = self.form(alpha, len(xi))
        return sum((ci * x for ci, x in zip(c, fractions(xi))), Fraction(0)) - k

    def normal(self, alpha: Sequence, n: int) -> tuple[Fraction, ...]:
        """Transverse direction, tangent to ``sum xi = const`` for A-type walls, along which ``L`` grows."""
        c, _ = self.form(alpha, n)
        if self.kind == "b2_line":
            return c
        m = sum(c) / n
        return tuple(x - m for x in c)

    def label(self) -> str:
        if self.kind == "single":
            return "xi%d=alpha%d" % self.indices
        if self.kind == "pair":
            return "xi%d+xi%d=alpha%d+alpha%d" % self.indices
        return b2_lines((2, 1))[self.indices[0] - 1].label


def su4_walls() -> list[WallSpec]:
    """All 16 hexagonal and 36 rectangular walls of su(4) (with redundant complements)."""
    out = [WallSpec("single", (i, j)) for i in range(1, 5) for j in range(1, 5)]
    pairs = list(itertools.combinations(range(1, 5), 2))
    out += [WallSpec("pair", p + q) for p in pairs for q in pairs]
    return out


def h_sign(beta: Sequence, zeta: Sequence) -> int:
    """+1, 0 or -1 according to the sum of signs of ``zeta_k - beta_2``."""
    b = fractions(beta)
    total = sum(_sgn(z - b[1]) for z in fractions(zeta))
    if total in (3, -3):
        return 0
    if total == 1:
        return 1
    if total == -1:
        return -1
    raise ValueError(f"h is undefined when some zeta_k equals beta_2 (sign sum {total})")


@dataclass
class JumpRecord:
    """Predicted change ``P_after - P_before`` of the polynomial determination across a wall."""

    wall: WallSpec
    order: int
    coefficient: Fraction
    eta: int | None = None
    piece: tuple | None = None
    _fn: Callable = field(default=None, repr=False)

    def __call__(self, xi: Sequence) -> Fraction:
        return self._fn(fractions(xi)) * self.wall.side


def jump_su4(alpha: Sequence, wall: WallSpec, xi_on_wall: Sequence) -> JumpRecord:
    a = fractions(alpha)
    p = fractions(xi_on_wall)
    if len(a) != 4 or len(p) != 4:
        raise ValueError("su(4) data has four Young components")
    if wall.value(a, p) != 0:
        raise ValueError(f"point does not lie on {wall.label()}")
    if wall.kind == "single":
        i, j = wall.indices
        beta = tuple(a[t] for t in range(4) if t != j - 1)
        others = [t for t in range(4) if t != i - 1]
        zeta = tuple(p[t] for t in others)
        eta = h_sign(beta, zeta)
        pattern = tuple(_sgn(z - beta[1]) for z in zeta)
        sigma = Fraction(1) if j in (2, 4) else Fraction(-1)

        def fn(y, i=i, j=j, beta=beta, others=others, pattern=pattern, eta=eta, sigma=sigma):
            x = y[i - 1] - a[j - 1]
            zeta_y = tuple(y[t] for t in others)
            lin = _piece_with_pattern(beta, zeta_y, pattern)
            return sigma * x * x / 2 * (lin + Fraction(eta, 3) * x)

        return JumpRecord(wall, 2, sigma / 2, eta, pattern, fn)

    i, j, k, l = wall.indices
    comp = tuple(t for t in range(1, 5) if t not in (i, j))
    kl = (k, l)
    if kl in ((1, 2), (3, 4)):
        coef = Fraction(1, 6)
    elif kl == (1, 3):
        coef = Fraction(-1, 6)
    elif kl == (2, 4):
        coef = Fraction(-1, 6)
    elif kl == (2, 3):
        coef = Fraction(1, 6) if all(a[2] <= p[t - 1] <= a[1] for t in (i, j)) else Fraction(0)
    else:  # (1, 4): same plane as xi_m + xi_n = alpha_2 + alpha_3 for the complementary pair
        coef = Fraction(1, 6) if all(a[2] <= p[t - 1] <= a[1] for t in comp) else Fraction(0)

    def fn(y, coef=coef):
        x = wall.value(a, y)
        return coef * x**3

    return JumpRecord(wall, 3, coef, None, None, fn)


def _piece_with_pattern(beta, zeta, pattern) -> Fraction:
    pos = [k for k in range(3) if pattern[k] > 0]
    neg = [k for k in range(3) if pattern[k] < 0]
    if len(neg) == 0:
        return beta[1] - beta[2]
    if len(pos) == 0:
        return beta[0] - beta[1]
    if len(neg) == 1:
        return zeta[neg[0]] - beta[2]
    return beta[0] - zeta[pos[0]]


def observed_jump_su4(alpha: Sequence, wall: WallSpec, xi_on_wall: Sequence, y: Sequence, eps=Fraction(1, 10**6)) -> Fraction:
    """``P_after(y) - P_before(y)`` from the closed form, cells sampled at ``xi_on_wall +- eps * n``."""
    a = fractions(alpha)
    p = fractions(xi_on_wall)
    eps = Fraction(eps)
    n = wall.normal(a, 4)
    if wall.side < 0:
        n = tuple(-x for x in n)
    after = tuple(pi + eps * ni for pi, ni in zip(p, n))
    before = tuple(pi - eps * ni for pi, ni in zip(p, n))
    return su4_determination(a, after, y) - su4_determination(a, before, y)


# ---------------------------------------------------------------------------
# smoothness


@dataclass
class ProbeResult:
    jumps: list[Fraction]
    h: Fraction
    stable: bool
    degree: int
    rate: Fraction = Fraction(1)  # dL/dt along the probe direction

    @property
    def jumps_per_unit(self) -> list[Fraction]:
        """Jumps of the derivatives with respect to ``L`` itself."""
        return [j / self.rate**m for m, j in enumerate(self.jumps)]

    @property
    def continuity_class(self) -> int | None:
        """Largest ``k`` with the first ``k`` derivatives continuous (``-1``: discontinuous)."""
        for m, j in enumerate(self.jumps):
            if j != 0:
                return m - 1
        return None

    def to_json(self) -> dict:
        return {
            "jumps": [str(j) for j in self.jumps],
            "jumps_per_unit": [str(j) for j in self.jumps_per_unit],
            "h": str(self.h),
            "stable": self.stable,
            "degree": self.degree,
            "continuity_class": self.continuity_class,
        }


def _derivatives_at_zero(ts: list[Fraction], vs: list[Fraction]) -> list[Fraction]:
    """Exact derivatives at 0 of the interpolating polynomial through (ts, vs)."""
    from .._linalg import solve_square

    m = len(ts)
    coeffs = solve_square([[t**k for k in range(m)] for t in ts], vs)
    return [coeffs[k] * math.factorial(k) for k in range(m)]


def _one_sided(f, base, n, h, degree):
    out = []
    for side in (1, -1):
        ts = [side * h * k for k in range(1, degree + 2)]
        vs = [f(tuple(b + t * d for b, d in zip(base, n))) for t in ts]
        out.append(_derivatives_at_zero(ts, vs)[: degree + 1])
    return out


def wall_smoothness_probe(algebra_tag: str, alpha: Sequence, wall: WallSpec, base: Sequence, h=Fraction(1, 100), levels: int = 6) -> ProbeResult:
    """Jumps of the transverse derivatives of I across ``wall`` at ``base``.

    On each side the restriction of I to the transverse line is a polynomial
    of known degree near the wall, so ``degree + 1`` exact samples per side
    determine every one-sided derivative.  The step is halved until two
    consecutive steps give identical jumps (both stencils inside the two
    adjacent cells).
    """
    tag = str(algebra_tag).upper()
    a = fractions(alpha)
    base = fractions(base)
    if tag in ("A2", "SU3"):
        f, degree, n = (lambda x: vol_su3(a, x)), 1, wall.normal(a, 3)
    elif tag in ("A3", "SU4"):
        f, degree, n = (lambda x: vol_su4(a, x)), 3, wall.normal(a, 4)
    elif tag in ("B2", "SO5"):
        f, degree, n = (lambda x: vol_b2(a, x)), 2, wall.normal(a, 2)
    else:
        raise ValueError(f"no smoothness probe for {algebra_tag}")
    if wall.value(a, base) != 0:
        raise ValueError("base point is not on the wall")
    h = Fraction(h)
    c, _ = wall.form(a, len(base))
    rate = sum((ci * ni for ci, ni in zip(c, n)), Fraction(0))
    prev = None
    for _ in range(levels):
        right, left = _one_sided(f, base, n, h, degree)
        jumps = [r - l for r, l in zip(right, left)]
        if prev is not None and jumps == prev:
            return ProbeResult(jumps, h, True, degree, rate)
        prev = jumps
        h /= 2
    return ProbeResult(prev, h * 2, False, degree, rate)


# ---------------------------------------------------------------------------
# sampling points on walls


def _parallel(u, v) -> bool:
    return all(u[i] * v[j] == u[j] * v[i] for i in range(len(u)) for j in range(i + 1, len(u)))


def generic_wall_point(alpha: Sequence, wall: WallSpec, rng, tries: int = 60, margin=Fraction(1, 1000)):
    """A rational point of ``wall`` in the relative interior of its facet of the su(4) arrangement.

    The point keeps a distance of at least ``margin * (alpha_1 - alpha_4)`` (in
    wall value) from every non-coincident wall.  Returns None when the wall
    does not cut the permutahedron or no such point was found.
    """
    from .su import in_permutahedron

    a = fractions(alpha)
    perms = list(itertools.permutations(a))
    nvec = wall.normal(a, 4)
    c, _ = wall.form(a, 4)
    rate = sum((ci * ni for ci, ni in zip(c, nvec)), Fraction(0))
    scale = (a[0] - a[3]) * margin
    others = [w for w in su4_walls() if not _parallel(w.normal(a, 4), nvec)]
    for _ in range(tries):
        pick = rng.sample(perms, 4)
        wts = [Fraction(rng.randint(1, 40)) for _ in pick]
        tot = sum(wts)
        x = [sum((w * p[k] for w, p in zip(wts, pick)), Fraction(0)) / tot for k in range(4)]
        t = -wall.value(a, x) / rate
        x = tuple(xi + t * ni for xi, ni in zip(x, nvec))
        if not in_permutahedron(a, x):
            continue
        if any(abs(o.value(a, x)) < scale for o in others):
            continue
        step = scale / 10
        if not all(in_permutahedron(a, tuple(xi + s * ni for xi, ni in zip(x, nvec))) for s in (step, -step)):
            continue
        return x
    return None
