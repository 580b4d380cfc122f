"""Large-s and large-p behaviour of multiplicities.

* ``C_{lam, s rho}^{s rho + delta}`` stabilises to ``mult_lam(delta)``;
* ``p -> mult_{p lam}(p delta)`` is a (quasi-)polynomial whose leading
  coefficient is the volume function ``I(lam; delta)``;
* the same for ``p -> C_{p lam, p mu}^{p nu}`` gives the Horn volume ``J``.

All fitting is exact: a Vandermonde system over the rationals, checked on
held-out terms.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Sequence

from ._linalg import solve_square
from .core_weights import (
    B2,
    Weight,
    algebra,
    format_rational,
    in_root_lattice,
    rho,
    weight,
    weight_pair_to_xi,
    weight_to_partition,
)
from .kostant import lr_steinberg, mult_kostant, weight_system

HELD_OUT = 2


class FitError(ValueError):
    """No quasi-polynomial of period <= 2 and bounded degree reproduces the data."""


@dataclass
class QuasiPolynomial:
    period: int
    components: list[list[Fraction]]  # components[r][k]: coefficient of p^k when p = r mod period
    degree: int
    start: int = 1

    def __call__(self, p: int) -> Fraction:
        coeffs = self.components[p % self.period]
        return sum((c * Fraction(p) ** k for k, c in enumerate(coeffs)), Fraction(0))

    @property
    def leading_coefficients(self) -> list[Fraction]:
        return [c[self.degree] if len(c) > self.degree else Fraction(0) for c in self.components]

    @property
    def leading_coefficient(self) -> Fraction:
        lead = set(self.leading_coefficients)
        if len(lead) != 1:
            raise ValueError(f"residue classes disagree on the leading coefficient: {sorted(lead)}")
        return lead.pop()

    def coefficient(self, k: int) -> Fraction:
        """Coefficient of ``p^k`` (period 1 only)."""
        if self.period != 1:
            raise ValueError("coefficient() needs a polynomial")
        c = self.components[0]
        return c[k] if k < len(c) else Fraction(0)

    def to_json(self) -> dict:
        return {
            "period": self.period,
            "degree": self.degree,
            "components": [[format_rational(c) for c in comp] for comp in self.components],
        }

    def __str__(self) -> str:
        parts = []
        for r, comp in enumerate(self.components):
            terms = [f"{format_rational(c)}*p^{k}" for k, c in enumerate(comp) if c != 0] or ["0"]
            tag = "" if self.period == 1 else f"[p={r} mod {self.period}] "
            parts.append(tag + " + ".join(terms))
        return "; ".join(parts)


def _fit_polynomial(points: list[tuple[int, int]], max_degree: int) -> list[Fraction] | None:
    """Lowest-degree exact interpolant that also predicts the remaining points."""
    for d in range(0, max_degree + 1):
        if len(points) < d + 1 + HELD_OUT:
            return None
        head = points[: d + 1]
        coeffs = solve_square([[Fraction(p) ** k for k in range(d + 1)] for p, _ in head], [Fraction(v) for _, v in head])
        if all(sum(c * Fraction(p) ** k for k, c in enumerate(coeffs)) == v for p, v in points[d + 1 :]):
            return coeffs
    return None


def fit_quasipolynomial(sequence: Sequence[int], start: int = 1, max_degree: int | None = None, periods=(1, 2)) -> QuasiPolynomial:
    """Fit ``sequence[i]`` (the value at ``p = start + i``) by period 1, then period 2.

    The degree is the smallest one consistent with every term; at least
    ``HELD_OUT`` terms per residue class are never used to solve for the
    coefficients.
    """
    seq = list(sequence)
    if max_degree is None:
        max_degree = len(seq)
    for period in periods:
        comps = []
        for r in range(period):
            pts = [(start + i, v) for i, v in enumerate(seq) if (start + i) % period == r]
            c = _fit_polynomial(pts, max_degree)
            if c is None:
                break
            comps.append(c)
        else:
            deg = max(len(c) - 1 for c in comps)
            if all(all(x == 0 for x in c) for c in comps):
                deg = 0
            width = deg + 1
            comps = [c + [Fraction(0)] * (width - len(c)) for c in comps]
            # trim a zero top row that every component shares
            while deg > 0 and all(c[deg] == 0 for c in comps):
                deg -= 1
                comps = [c[: deg + 1] for c in comps]
            return QuasiPolynomial(period, comps, deg, start)
    raise FitError(f"no quasi-polynomial with period in {tuple(periods)} and degree <= {max_degree} fits {seq}")


def generic_degree(alg) -> int:
    alg = algebra(alg)
    if alg.tag == "B2":
        return 2
    n = alg.n
    return (n - 1) * (n - 2) // 2


def _map(fn: Callable, args: list, workers: int | None) -> list:
    if workers and workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as ex:
            return list(ex.map(fn, args))
    return [fn(a) for a in args]


# ---------------------------------------------------------------------------
# LR -> Kostka stabilisation


@dataclass
class StabilizationReport:
    lam: Weight
    delta: Weight
    sequence: list[int]  # values for s = 1 .. s_max
    s_c: int | None
    limit: int | None
    mult: int
    s_max: int
    bound: int | None = None
    stabilized: bool = False

    def value(self, s: int) -> int:
        return self.sequence[s - 1]

    @property
    def ok(self) -> bool:
        return self.stabilized and self.limit == self.mult

    def to_json(self) -> dict:
        return {
            "lambda": str(self.lam),
            "delta": str(self.delta),
            "sequence": self.sequence,
            "s_c": self.s_c,
            "limit": self.limit,
            "mult": self.mult,
            "s_max": self.s_max,
            "bound": self.bound,
            "stabilized": self.stabilized,
            "limit_equals_mult": self.limit == self.mult,
        }


def default_s_max(lam: Weight) -> int:
    total = int(sum(lam.dynkin))
    return 4 * total + 8 if lam.algebra.tag == "B2" else 2 * total + 8


def lr_shift_sequence(lam: Weight, delta: Weight, s_values, workers: int | None = None) -> list[int]:
    r = rho(lam.algebra)

    def one(s):
        return lr_steinberg(lam, r.scale(s), r.scale(s) + delta)

    return _map(one, list(s_values), workers)


def sc_threshold(lam: Weight, delta: Weight, s_max: int | None = None, workers: int | None = None) -> StabilizationReport:
    """Smallest ``s`` from which ``C_{lam, s rho}^{s rho + delta}`` stays at its final value.

    ``stabilized`` is False when the final value has not been seen at least
    twice, or when it differs from ``mult_lam(delta)``; for B2 no proven
    bound exists, so the default ``s_max`` is a heuristic margin.
    """
    s_max = default_s_max(lam) if s_max is None else int(s_max)
    if s_max < 2:
        raise ValueError("s_max must be at least 2")
    seq = lr_shift_sequence(lam, delta, range(1, s_max + 1), workers)
    mult = mult_kostant(lam, delta)
    limit = seq[-1]
    s_c = s_max
    while s_c > 1 and seq[s_c - 2] == limit:
        s_c -= 1
    stabilized = s_c < s_max and limit == mult
    bound = 2 * int(sum(lam.dynkin)) if lam.algebra.is_a_type else None
    return StabilizationReport(lam, delta, seq, s_c, limit, mult, s_max, bound, stabilized)


@dataclass
class BoundCheck:
    lam: Weight
    delta: Weight
    X: tuple[int, int, int]
    bound: int
    s_c: int | None
    stationary: bool
    inequality: bool  # 4(s_c + 1) < max(X1, 2 X2, X3) + 1, informational

    def __bool__(self) -> bool:
        return self.stationary

    def to_json(self) -> dict:
        return {
            "lambda": str(self.lam),
            "delta": str(self.delta),
            "X": list(self.X),
            "bound": self.bound,
            "s_c": self.s_c,
            "stationary_from_bound": self.stationary,
            "x_inequality": self.inequality,
        }


def a3_x_values(lam: Weight, delta: Weight) -> tuple[int, int, int]:
    l1, l2, l3 = (int(x) for x in lam.dynkin)
    d1, d2, d3 = (int(x) for x in delta.dynkin)
    return (
        (l1 + 2 * l2 + 3 * l3) - (d1 + 2 * d2 + 3 * d3),
        (l1 + 2 * l2 + l3) - (d1 + 2 * d2 + d3),
        (3 * l1 + 2 * l2 + l3) - (3 * d1 + 2 * d2 + d3),
    )


def sc_bound_check_a3(lam: Weight, delta: Weight, margin: int = 4) -> BoundCheck:
    """Stationarity of ``C_{lam, s rho}^{s rho + delta}`` for ``2 sum(lam) <= s <= 2 sum(lam) + margin``.

    The result is truthy when stationary and the stationary value is the
    multiplicity.  ``s_c`` is also located exactly (scanning up from 1).
    """
    if lam.algebra.tag != "A3":
        raise ValueError("the s_c bound is for A3")
    bound = 2 * int(sum(lam.dynkin))
    X = a3_x_values(lam, delta)
    mult = mult_kostant(lam, delta)
    if bound == 0:
        seq = lr_shift_sequence(lam, delta, range(1, margin + 2))
        ok = all(v == mult for v in seq)
        return BoundCheck(lam, delta, X, bound, 1 if ok else None, ok, True)
    seq = lr_shift_sequence(lam, delta, range(1, bound + margin + 1))
    tail = seq[bound - 1 :]
    stationary = all(v == mult for v in tail)
    s_c = None
    if stationary:
        s_c = bound
        while s_c > 1 and seq[s_c - 2] == mult:
            s_c -= 1
    ineq = s_c is not None and 4 * (s_c + 1) < max(X[0], 2 * X[1], X[2]) + 1
    return BoundCheck(lam, delta, X, bound, s_c, stationary, ineq)


# ---------------------------------------------------------------------------
# stretching


def stretch_sequence(lam: Weight, delta: Weight, p_max: int, workers: int | None = None) -> list[int]:
    """``mult_{p lam}(p delta)`` for ``p = 1 .. p_max``."""
    return _map(lambda p: mult_kostant(lam.scale(p), delta.scale(p)), list(range(1, p_max + 1)), workers)


def volume_of(lam: Weight, delta: Weight) -> Fraction:
    """``I(lam; delta)`` from the closed forms (A2, A3) or the B2 jump model."""
    from .volumes.b2 import vol_b2
    from .volumes.su import vol_su

    if lam.algebra.tag == "B2":
        return vol_b2(lam.orthogonal(), delta.orthogonal())
    return vol_su(weight_to_partition(lam).parts, weight_pair_to_xi(lam, delta).parts)


@dataclass
class StretchReport:
    lam: Weight
    delta: Weight
    sequence: list[int]
    fit: QuasiPolynomial | None
    volume: Fraction | None = None
    error: str | None = None

    def to_json(self) -> dict:
        return {
            "lambda": str(self.lam),
            "delta": str(self.delta),
            "sequence": self.sequence,
            "fit": None if self.fit is None else self.fit.to_json(),
            "polynomial": None if self.fit is None else str(self.fit),
            "volume": None if self.volume is None else format_rational(self.volume),
            "error": self.error,
        }


def stretch_report(lam: Weight, delta: Weight, p_max: int = 10, workers: int | None = None) -> StretchReport:
    seq = stretch_sequence(lam, delta, p_max, workers)
    try:
        fit = fit_quasipolynomial(seq, max_degree=generic_degree(lam.algebra))
        err = None
    except FitError as e:
        fit, err = None, str(e)
    try:
        vol = volume_of(lam, delta)
    except ValueError:
        vol = None
    return StretchReport(lam, delta, seq, fit, vol, err)


@dataclass
class HornJ:
    value: Fraction  # coefficient of p^d with d the generic degree
    degree: int
    generic_degree: int
    leading: Fraction  # leading coefficient at the actual degree
    sequence: list[int]
    fit: QuasiPolynomial

    @property
    def degenerate(self) -> bool:
        return self.degree < self.generic_degree

    def to_json(self) -> dict:
        return {
            "J": format_rational(self.value),
            "degree": self.degree,
            "generic_degree": self.generic_degree,
            "leading": format_rational(self.leading),
            "degenerate": self.degenerate,
            "sequence": self.sequence,
            "fit": self.fit.to_json(),
        }


def horn_j_via_stretch(lam: Weight, mu: Weight, nu: Weight, p_max: int | None = None, workers: int | None = None) -> HornJ:
    """Leading coefficient of ``p -> C_{p lam, p mu}^{p nu}``."""
    if lam.algebra.tag == "B2":
        raise ValueError("Horn volumes are implemented for A-type algebras")
    d = generic_degree(lam.algebra)
    p_max = d + 1 + HELD_OUT if p_max is None else int(p_max)
    if lr_steinberg(lam, mu, nu) == 0:
        raise ValueError(f"C_{{{lam},{mu}}}^{{{nu}}} vanishes")
    seq = _map(lambda p: lr_steinberg(lam.scale(p), mu.scale(p), nu.scale(p)), list(range(1, p_max + 1)), workers)
    fit = fit_quasipolynomial(seq, max_degree=d, periods=(1,))
    value = fit.coefficient(d)
    return HornJ(value, fit.degree, d, fit.leading_coefficient, seq, fit)


# ---------------------------------------------------------------------------
# B2 conjectures


@dataclass
class Conjecture1Record:
    lam1: int
    delta: tuple[int, int]
    a3_mult: int
    b2_mult: int
    is_square: bool
    matches: bool
    skipped: bool = False

    def to_json(self) -> dict:
        return dict(self.__dict__, delta=list(self.delta))


def conjecture1_check(lam1: int, d1: int, d2: int) -> Conjecture1Record:
    """``mult_{lam1,1,lam1}(d1,d2,d1) = m^2`` together with ``mult_{lam1,1}(d1,d2) = m``.

    Pairs where the A3 weight is not in the weight system are marked skipped.
    """
    lam_a = weight("A3", (lam1, 1, lam1))
    del_a = weight("A3", (d1, d2, d1))
    lam_b = weight(B2, (lam1, 1))
    del_b = weight(B2, (d1, d2))
    a3 = mult_kostant(lam_a, del_a)
    b2 = mult_kostant(lam_b, del_b)
    root = math.isqrt(a3)
    square = root * root == a3
    return Conjecture1Record(int(lam1), (int(d1), int(d2)), a3, b2, square, square and b2 == root, a3 == 0)


def conjecture1_scan(lam1: int) -> list[Conjecture1Record]:
    """All ``(d1, d2)`` with ``{d1, d2, d1}`` a weight of ``{lam1, 1, lam1}``."""
    lam_a = weight("A3", (lam1, 1, lam1))
    out = []
    for w in sorted(weight_system(lam_a), key=lambda w: w.dynkin):
        d1, d2, d3 = (int(x) for x in w.dynkin)
        if d1 == d3:
            out.append(conjecture1_check(lam1, d1, d2))
    return out


@dataclass
class Conjecture2Record:
    lam: Weight
    delta: Weight
    parity_class: str  # "even", "odd" or "mixed"
    kappa1_parity: int
    fit_period: int | None
    twice_volume_integral: bool | None
    expected_period: int | None
    verdict: str  # consistent | exception | violation | not_applicable
    sequence: list[int] = field(default_factory=list)
    fit: QuasiPolynomial | None = None
    volume: Fraction | None = None

    def to_json(self) -> dict:
        return {
            "lambda": str(self.lam),
            "delta": str(self.delta),
            "parity_class": self.parity_class,
            "kappa1_parity": self.kappa1_parity,
            "fit_period": self.fit_period,
            "twice_volume_integral": self.twice_volume_integral,
            "expected_period": self.expected_period,
            "verdict": self.verdict,
            "sequence": self.sequence,
            "fit": None if self.fit is None else self.fit.to_json(),
            "volume": None if self.volume is None else format_rational(self.volume),
        }


def conjecture2_check(lam: Weight, delta: Weight, p_max: int = 12) -> Conjecture2Record:
    """Classify ``p -> mult_{p lam}(p delta)`` against the B2 parity conjecture.

    Case (i), both second labels even: polynomial iff ``kappa_1`` even, with
    finitely many polynomial exceptions allowed for odd ``kappa_1``.  Case
    (ii), both odd: polynomial iff ``2 I`` is an integer, generically.
    Anything the conjecture tolerates is an "exception", anything it rules
    out is a "violation".
    """
    if lam.algebra.tag != "B2":
        raise ValueError("conjecture 2 concerns B2")
    l2, d2 = int(lam.dynkin[1]), int(delta.dynkin[1])
    kappa = lam - delta
    k1 = int(kappa.dynkin[0]) % 2
    if l2 % 2 != d2 % 2:
        return Conjecture2Record(lam, delta, "mixed", k1, None, None, None, "not_applicable")
    seq = stretch_sequence(lam, delta, p_max)
    try:
        fit = fit_quasipolynomial(seq, max_degree=2)
        period = fit.period
    except FitError:
        fit, period = None, None
    try:
        vol = volume_of(lam, delta)
        twice = (2 * vol).denominator == 1
    except ValueError:
        vol, twice = None, None
    if l2 % 2 == 0:
        cls = "even"
        expected = 1 if k1 == 0 else 2
        if period == expected:
            verdict = "consistent"
        elif expected == 2 and period == 1:
            verdict = "exception"
        else:
            verdict = "violation"
    else:
        cls = "odd"
        expected = None if twice is None else (1 if twice else 2)
        if expected is None:
            verdict = "not_applicable"
        elif period == expected:
            verdict = "consistent"
        elif expected == 2 and period == 1:
            verdict = "exception"
        else:
            verdict = "violation"
    return Conjecture2Record(lam, delta, cls, k1, period, twice, expected, verdict, seq, fit, vol)


def in_weight_system(lam: Weight, delta: Weight) -> bool:
    return in_root_lattice(lam - delta) and mult_kostant(lam, delta) > 0
