"""Kostant partition functions and the multiplicity / tensor-product formulas built on them."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

import numpy as np

from . import _kernels
from .core_weights import (
    AlgebraId,
    Weight,
    _kac_matrix,
    algebra,
    dominant_representative,
    in_root_lattice,
    positive_roots_kac,
    rho,
    weyl_group,
    weyl_orbit,
)

SUPPORTED = ("A1", "A2", "A3", "B2")


@dataclass(frozen=True)
class RootCoordinates:
    """An integral vector written in the basis of simple roots (Kac labels)."""

    algebra: AlgebraId
    kac: tuple[int, ...]

    def __post_init__(self):
        alg = algebra(self.algebra)
        object.__setattr__(self, "algebra", alg)
        kac = tuple(self.kac)
        for k in kac:
            if isinstance(k, Fraction):
                if k.denominator != 1:
                    raise ValueError(f"Kac labels must be integers, got {k}")
            elif not isinstance(k, (int, np.integer)) or isinstance(k, bool):
                raise TypeError(f"Kac labels must be integers, got {k!r}")
        object.__setattr__(self, "kac", tuple(int(k) for k in kac))
        if len(self.kac) != alg.rank:
            raise ValueError(f"{alg} needs {alg.rank} Kac labels, got {len(self.kac)}")


def root_coordinates(alg, kac: Sequence) -> RootCoordinates:
    return RootCoordinates(algebra(alg), tuple(kac))


def _coerce(kappa, alg=None) -> RootCoordinates:
    if isinstance(kappa, RootCoordinates):
        return kappa
    if isinstance(kappa, Weight):
        k = kappa.kac()
        if any(x.denominator != 1 for x in k):
            raise ValueError(f"{kappa} is not in the root lattice")
        return RootCoordinates(kappa.algebra, tuple(int(x) for x in k))
    if alg is None:
        raise ValueError("an algebra is needed when passing a bare sequence")
    return root_coordinates(alg, kappa)


def _check_supported(alg: AlgebraId) -> None:
    if alg.tag not in SUPPORTED:
        raise ValueError(f"no partition function for {alg}")


def _b(x: int) -> int:
    # guarded: the printed case bounds keep x >= 0, see the decisions notes
    if x < 0:
        return 0
    h = (x + 1) // 2
    return (-h + x + 1) * (h + 1)


def _binom3(m: int) -> int:
    return m * (m - 1) * (m - 2) // 6


def partition_fn(kappa, alg=None) -> int:
    """Number of ways to write ``kappa`` as a sum of positive roots.

    Piecewise polynomial formulas, first matching case wins.
    """
    kappa = _coerce(kappa, alg)
    _check_supported(kappa.algebra)
    k = kappa.kac
    if any(x < 0 for x in k):
        return 0
    tag = kappa.algebra.tag
    if tag == "A1":
        return 1
    if tag == "A2":
        return min(k[0], k[1]) + 1
    if tag == "A3":
        k1, k2, k3 = k
        if k2 <= k1 and k2 <= k3:
            return (k2 + 1) * (k2 + 2) * (k2 + 3) // 6
        if k1 <= k2 <= k3:
            return (k1 + 1) * (k1 + 2) * (-2 * k1 + 3 * k2 + 3) // 6
        if k1 <= k3 <= k1 + k3 <= k2:
            return (k1 + 1) * (k1 + 2) * (-k1 + 3 * k3 + 3) // 6
        if k1 <= k3 <= k2 <= k1 + k3:
            return (k1 + 1) * (k1 + 2) * (-k1 + 3 * k3 + 3) // 6 - _binom3(k1 - k2 + k3 + 2)
        if k3 <= k2 <= k1:
            return (k3 + 1) * (k3 + 2) * (3 * k2 - 2 * k3 + 3) // 6
        if k3 <= k1 <= k1 + k3 <= k2:
            return (k3 + 1) * (k3 + 2) * (3 * k1 - k3 + 3) // 6
        if k3 <= k1 <= k2 <= k1 + k3:
            return (k3 + 1) * (k3 + 2) * (3 * k1 - k3 + 3) // 6 - _binom3(k1 - k2 + k3 + 2)
        raise AssertionError(f"no A3 case matched {k}")
    # B2
    k1, k2 = k
    if k2 <= k1:
        return _b(k2)
    if 2 * k1 <= k2:
        return (k1 + 1) * (k1 + 2) // 2
    x = 2 * k1 - k2 - 1
    assert x >= 0
    return (k1 + 1) * (k1 + 2) // 2 - _b(x)


def partition_fn_bruteforce(kappa, alg=None) -> int:
    """Count decompositions by exhaustive enumeration of root multiplicities."""
    kappa = _coerce(kappa, alg)
    _check_supported(kappa.algebra)
    if any(x < 0 for x in kappa.kac):
        return 0
    roots = positive_roots_kac(kappa.algebra)

    @lru_cache(maxsize=None)
    def count(i: int, rem: tuple[int, ...]) -> int:
        if i == len(roots):
            return int(all(x == 0 for x in rem))
        r = roots[i]
        total = 0
        cur = rem
        while all(x >= 0 for x in cur):
            total += count(i + 1, cur)
            cur = tuple(a - b for a, b in zip(cur, r))
        return total

    return count(0, kappa.kac)


# ---------------------------------------------------------------------------
# Weyl-alternating sums


@lru_cache(maxsize=None)
def _scale(alg: AlgebraId) -> tuple[int, tuple[tuple[int, ...], ...]]:
    """Integer ``D`` and matrix ``D * K`` with ``K`` the Dynkin -> Kac map."""
    k = _kac_matrix(alg)
    d = 1
    for row in k:
        for x in row:
            d = d * x.denominator // math.gcd(d, x.denominator)
    return d, tuple(tuple(int(x * d) for x in row) for row in k)


def _scaled_kac(w: Weight) -> list[int]:
    d, m = _scale(w.algebra)
    vals = [sum((row[j] * w.dynkin[j] for j in range(len(row))), Fraction(0)) for row in m]
    for v in vals:
        if v.denominator != 1:
            raise ValueError(f"{w} is not integral")
    return [int(v) for v in vals]


@lru_cache(maxsize=4096)
def _orbit_table(v: Weight) -> tuple[np.ndarray, np.ndarray]:
    """Scaled Kac labels of ``w(v)`` for every Weyl element, with signatures."""
    rows, signs = [], []
    for w in weyl_group(v.algebra):
        rows.append(_scaled_kac(w.act(v)))
        signs.append(w.signature)
    return np.array(rows, dtype=np.int64), np.array(signs, dtype=np.int64)


def _python_alt_sum(terms, signs, denom, alg) -> int:
    total = 0
    for row, s in zip(terms.tolist(), signs.tolist()):
        if any(x % denom for x in row):
            continue
        total += s * partition_fn(RootCoordinates(alg, tuple(x // denom for x in row)))
    return total


def _fits(*arrays) -> bool:
    return all(a.size == 0 or int(np.abs(a).max()) < _kernels.SAFE_KAC_BOUND for a in arrays)


def _require_dominant_integral(w: Weight, name: str) -> None:
    if not w.is_integral:
        raise ValueError(f"{name} = {w} is not integral")
    if not w.is_dominant:
        raise ValueError(f"{name} = {w} is not dominant")


def _backend(backend):
    if backend is None:
        return _kernels.active()
    if isinstance(backend, str):
        if backend == "python":
            return None
        b = _kernels.backends().get(backend)
        if b is None:
            raise ValueError(f"backend {backend!r} unavailable")
        return b
    return backend


def mult_kostant(lam: Weight, delta: Weight, backend=None) -> int:
    """Multiplicity of the weight ``delta`` in the irreducible module of highest weight ``lam``."""
    _check_supported(lam.algebra)
    if lam.algebra != delta.algebra:
        raise ValueError("algebra mismatch")
    _require_dominant_integral(lam, "lambda")
    if not delta.is_integral:
        raise ValueError(f"delta = {delta} is not integral")
    if not in_root_lattice(lam - delta):
        return 0
    alg = lam.algebra
    r = rho(alg)
    terms, signs = _orbit_table(lam + r)
    target = np.array(_scaled_kac(delta + r), dtype=np.int64)
    terms = terms - target
    d, _ = _scale(alg)
    be = _backend(backend)
    if be is None or not _fits(terms):
        return _python_alt_sum(terms, signs, d, alg)
    return be.alt_sum(terms, signs, d, _kernels.CODES[alg.tag])


def lr_steinberg(lam: Weight, mu: Weight, nu: Weight, backend=None) -> int:
    """Tensor-product multiplicity of ``nu`` in ``lam (x) mu`` by the double Weyl sum."""
    alg = lam.algebra
    _check_supported(alg)
    if not (alg == mu.algebra == nu.algebra):
        raise ValueError("algebra mismatch")
    _require_dominant_integral(lam, "lambda")
    _require_dominant_integral(mu, "mu")
    if not nu.is_integral:
        raise ValueError(f"nu = {nu} is not integral")
    if not nu.is_dominant or not in_root_lattice(lam + mu - nu):
        return 0
    r = rho(alg)
    a, sa = _orbit_table(lam + r)
    b, sb = _orbit_table(mu + r)
    target = np.array(_scaled_kac(nu + r + r), dtype=np.int64)
    d, _ = _scale(alg)
    be = _backend(backend)
    if be is None or not _fits(a, b, target):
        terms = (a[:, None, :] + b[None, :, :] - target).reshape(-1, alg.rank)
        s = (sa[:, None] * sb[None, :]).ravel()
        return _python_alt_sum(terms, s, d, alg)
    return be.double_alt_sum(a, sa, b, sb, target, d, _kernels.CODES[alg.tag])


# ---------------------------------------------------------------------------
# Weight systems and the Racah-Speiser (Klimyk) route


def dominant_weights(lam: Weight) -> list[Weight]:
    """Dominant weights ``lam - sum k_i alpha_i`` with ``k_i`` nonnegative integers."""
    _require_dominant_integral(lam, "lambda")
    alg = lam.algebra
    bound = [int(math.floor(x)) for x in lam.kac()]
    from .core_weights import simple_roots

    roots = simple_roots(alg)
    out = []

    def rec(i, cur):
        if i == alg.rank:
            if cur.is_dominant:
                out.append(cur)
            return
        for k in range(bound[i] + 1):
            rec(i + 1, cur - roots[i].scale(k))

    rec(0, lam)
    return out


@lru_cache(maxsize=512)
def weight_system(lam: Weight) -> dict[Weight, int]:
    """All weights of the irreducible module with their multiplicities."""
    out: dict[Weight, int] = {}
    for mu in dominant_weights(lam):
        m = mult_kostant(lam, mu)
        if m == 0:
            continue
        for v in weyl_orbit(mu):
            out[v] = m
    return out


def tensor_decompose(lam: Weight, mu: Weight) -> dict[Weight, int]:
    """Racah-Speiser reflection of ``lam + (weights of mu)`` into the dominant chamber."""
    _require_dominant_integral(lam, "lambda")
    _require_dominant_integral(mu, "mu")
    alg = lam.algebra
    r = rho(alg)
    group = weyl_group(alg)
    acc: dict[Weight, int] = {}
    for wt, m in weight_system(mu).items():
        v = lam + wt + r
        for w in group:
            u = w.act(v)
            if u.is_dominant:
                break
        if any(x == 0 for x in u.dynkin):
            continue  # v lies on a reflecting wall
        tau = u - r
        acc[tau] = acc.get(tau, 0) + w.signature * m
    return {k: v for k, v in acc.items() if v != 0}


def lr_klimyk(lam: Weight, mu: Weight, nu: Weight) -> int:
    alg = lam.algebra
    if not (alg == mu.algebra == nu.algebra):
        raise ValueError("algebra mismatch")
    _require_dominant_integral(lam, "lambda")
    _require_dominant_integral(mu, "mu")
    if not nu.is_integral:
        raise ValueError(f"nu = {nu} is not integral")
    if not nu.is_dominant:
        return 0
    # smaller module supplies the weights
    if len(weight_system(mu)) > len(weight_system(lam)):
        lam, mu = mu, lam
    return tensor_decompose(lam, mu).get(nu, 0)


def orbit_multiplicity_check(lam: Weight, delta: Weight) -> bool:
    """Weyl invariance of weight multiplicities at one weight."""
    m = mult_kostant(lam, delta)
    return all(mult_kostant(lam, v) == m for v in weyl_orbit(delta)) and m == mult_kostant(
        lam, dominant_representative(delta)
    )
