"""Probability densities and the exact relations between I and multiplicities."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Sequence

from ..core_weights import (
    Weight,
    algebra,
    delta as delta_product,
    delta_rho,
    format_rational,
    fractions,
    in_root_lattice,
    rho,
    weight,
    weight_pair_to_xi,
    weight_to_partition,
)
from ..kostant import mult_kostant, tensor_decompose
from .b2 import in_octagon, vol_b2
from .su import in_permutahedron, vol_su


def pdf(alpha: Sequence, xi: Sequence, alg=None) -> Fraction:
    """Density of the diagonal ``xi`` for the orbit of ``alpha``.

    A-type: ``alpha``/``xi`` are Young components and the density is taken
    with respect to ``d xi_1 ... d xi_{n-1}``.  B2: orthogonal coordinates,
    density in ``d xi_1 d xi_2``.  For su(2) the density ``1/(alpha_1 -
    alpha_2)`` on the segment is returned directly.
    """
    a = fractions(alpha)
    x = fractions(xi)
    if alg is None:
        alg = {2: "A1", 3: "A2", 4: "A3"}[len(a)]
    alg = algebra(alg)
    d = delta_product(alg, a)
    if d == 0:
        raise ValueError("pdf needs a regular alpha")
    if alg.tag == "A1":
        return Fraction(1) / d if a[1] <= x[0] <= a[0] else Fraction(0)
    if alg.tag == "B2":
        return Fraction(3, 2) / d * vol_b2(a, x)
    return delta_rho(alg) / d * vol_su(a, x)


def b2_prefactor(alpha: Sequence) -> Fraction:
    a1, a2 = fractions(alpha)
    return Fraction(3) / (2 * a1 * a2 * (a1 * a1 - a2 * a2))


def pdf_grid(alpha: Sequence, alg, n: int = 60) -> Iterator[tuple[tuple[Fraction, ...], Fraction]]:
    """Cell-centred grid over the bounding box of the support, for 2-d supports.

    Yields ``(xi, pdf)`` pairs; A2 points carry all three Young components.
    """
    alg = algebra(alg)
    a = fractions(alpha)
    if alg.tag == "B2":
        lo, hi = -a[0], a[0]
    elif alg.tag == "A2":
        lo, hi = min(a), max(a)
    else:
        raise ValueError("pdf grids are two dimensional (A2 or B2)")
    h = (hi - lo) / n
    S = sum(a)
    for i in range(n):
        for j in range(n):
            p = (lo + (i + Fraction(1, 2)) * h, lo + (j + Fraction(1, 2)) * h)
            if alg.tag == "B2":
                yield p, pdf(a, p, alg)
            else:
                x = (p[0], p[1], S - p[0] - p[1])
                yield x, pdf(a, x, alg) if in_permutahedron(a, x) else Fraction(0)


def normalization(alpha: Sequence, alg, n: int = 40) -> Fraction:
    """Midpoint-rule approximation of the integral of the pdf (close to 1)."""
    alg = algebra(alg)
    a = fractions(alpha)
    if alg.tag in ("A2", "B2"):
        span = 2 * a[0] if alg.tag == "B2" else max(a) - min(a)
        h = span / n
        return sum((v for _, v in pdf_grid(a, alg, n)), Fraction(0)) * h * h
    if alg.tag != "A3":
        raise ValueError(f"no normalization check for {alg}")
    lo = min(a)
    h = (max(a) - lo) / n
    c = [lo + (i + Fraction(1, 2)) * h for i in range(n)]
    S = sum(a)
    total = Fraction(0)
    for x1, x2, x3 in itertools.product(c, repeat=3):
        x = (x1, x2, x3, S - x1 - x2 - x3)
        if in_permutahedron(a, x):
            total += pdf(a, x, alg)
    return total * h**3


# ---------------------------------------------------------------------------
# I <-> multiplicities


@dataclass
class RelationResult:
    lam: Weight
    delta: Weight
    branch: str  # "Q" (lam - delta in Q) or "Q+rho"
    lhs: Fraction
    rhs: Fraction

    @property
    def holds(self) -> bool:
        return self.lhs == self.rhs

    def __iter__(self):
        return iter((self.lhs, self.rhs))

    def to_json(self) -> dict:
        return {
            "lambda": str(self.lam),
            "delta": str(self.delta),
            "branch": self.branch,
            "lhs": format_rational(self.lhs),
            "rhs": format_rational(self.rhs),
            "holds": self.holds,
        }


def shifted_volume(lam: Weight, delta: Weight) -> Fraction:
    """``I(lam + rho; delta)``."""
    lp = lam + rho(lam.algebra)
    if lam.algebra.tag == "B2":
        return vol_b2(lp.orthogonal(), delta.orthogonal())
    alpha = weight_to_partition(lp).parts
    xi = weight_pair_to_xi(lp, delta).parts
    return vol_su(alpha, xi)


def _twisted_sum(lam: Weight, kappa: Weight, delta: Weight) -> int:
    return sum(c * mult_kostant(tau, delta) for tau, c in tensor_decompose(lam, kappa).items())


def i_mult_relation(lam: Weight, delta: Weight) -> RelationResult:
    """Both sides of the exact I-multiplicity relation for su(3), su(4) and B2."""
    alg = lam.algebra
    if not (lam.is_integral and lam.is_dominant):
        raise ValueError(f"lambda = {lam} must be dominant integral")
    if not delta.is_integral:
        raise ValueError(f"delta = {delta} must be integral")
    r = rho(alg)
    if in_root_lattice(lam - delta):
        branch = "Q"
    elif in_root_lattice(lam - delta - r):
        branch = "Q+rho"
    else:
        raise ValueError("lambda - delta lies in neither Q nor rho + Q")
    lhs = shifted_volume(lam, delta)
    if alg.tag == "A2":
        rhs = Fraction(mult_kostant(lam, delta))
    elif alg.tag == "A3":
        if branch == "Q":
            rhs = Fraction(9 * mult_kostant(lam, delta) + _twisted_sum(lam, weight(alg, (1, 0, 1)), delta), 24)
        else:
            rhs = Fraction(_twisted_sum(lam, weight(alg, (0, 1, 0)), delta), 6)
    elif alg.tag == "B2":
        if branch == "Q":
            rhs = Fraction(3 * mult_kostant(lam, delta) + _twisted_sum(lam, weight(alg, (1, 0)), delta), 8)
        else:
            rhs = Fraction(_twisted_sum(lam, weight(alg, (0, 1)), delta), 4)
    else:
        raise ValueError(f"no I-multiplicity relation for {alg}")
    return RelationResult(lam, delta, branch, lhs, rhs)


def support_contains(lam: Weight, delta: Weight) -> bool:
    """Whether ``delta`` lies in the closed support of ``I(lam + rho; .)``."""
    lp = lam + rho(lam.algebra)
    if lam.algebra.tag == "B2":
        return in_octagon(lp.orthogonal(), delta.orthogonal())
    return in_permutahedron(weight_to_partition(lp).parts, weight_pair_to_xi(lp, delta).parts)
