"""Monte Carlo sampling of diagonal entries over a coadjoint orbit.

SU(n): ``xi_i = (U diag(alpha) U^dagger)_ii = sum_j |U_ij|^2 alpha_j`` with
``U`` Haar distributed.  SO(5): the seed is the block diagonal skew matrix
``alpha_1 J (+) alpha_2 J (+) 0`` with ``J = [[0, 1], [-1, 0]]``; after
conjugation ``M = O A O^T`` we record ``xi_1 = (M_12 - M_21)/2`` and
``xi_2 = (M_34 - M_43)/2``, a normalization under which the seed itself
projects to ``(alpha_1, alpha_2)``.

Samples are generated in fixed-size shards, each with its own stream
spawned from the master seed, so the histogram does not depend on the
number of threads.
"""

from __future__ import annotations

import csv
import json
import math
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from . import _kernels
from .core_weights import fractions, format_rational

SHARD = 1 << 15
MARGIN = 0.02
CARTAN_NORMALIZATION = "X_1 = (E_12 - E_21)/2, X_2 = (E_34 - E_43)/2; the seed projects to (alpha_1, alpha_2)"


@dataclass(frozen=True)
class OrbitSpec:
    group: str  # "SU2", "SU3", "SU4" or "SO5"
    alpha: tuple[Fraction, ...]

    def __post_init__(self):
        g = self.group.upper().replace("(", "").replace(")", "")
        object.__setattr__(self, "group", g)
        a = fractions(self.alpha)
        object.__setattr__(self, "alpha", a)
        if g == "SO5":
            if len(a) != 2 or not a[0] > a[1] > 0:
                raise ValueError("SO(5) orbits need alpha_1 > alpha_2 > 0")
        elif g in ("SU2", "SU3", "SU4"):
            if len(a) != int(g[2]):
                raise ValueError(f"{g} needs {g[2]} eigenvalues")
            if any(a[i] < a[i + 1] for i in range(len(a) - 1)):
                raise ValueError("alpha must be weakly decreasing")
        else:
            raise ValueError(f"unsupported group {self.group}")

    @property
    def n(self) -> int:
        return 5 if self.group == "SO5" else int(self.group[2])

    @property
    def algebra_tag(self) -> str:
        return {"SU2": "A1", "SU3": "A2", "SU4": "A3", "SO5": "B2"}[self.group]

    def box(self) -> tuple[float, float]:
        """Square window covering the support of the recorded coordinates, with margin."""
        a = [float(x) for x in self.alpha]
        lo, hi = (-a[0], a[0]) if self.group == "SO5" else (min(a), max(a))
        pad = MARGIN * (hi - lo)
        return lo - pad, hi + pad


def haar_unitary(rng: np.random.Generator, n: int, size: int) -> np.ndarray:
    z = (rng.standard_normal((size, n, n)) + 1j * rng.standard_normal((size, n, n))) / math.sqrt(2)
    q, r = np.linalg.qr(z)
    d = np.diagonal(r, axis1=1, axis2=2)
    return q * (d / np.abs(d))[:, None, :]


def haar_special_orthogonal(rng: np.random.Generator, n: int, size: int) -> np.ndarray:
    z = rng.standard_normal((size, n, n))
    q, r = np.linalg.qr(z)
    d = np.sign(np.diagonal(r, axis1=1, axis2=2))
    d[d == 0] = 1
    q = q * d[:, None, :]
    neg = np.linalg.det(q) < 0
    q[neg, :, 0] *= -1
    return q


def _shard(spec: OrbitSpec, seed: np.random.SeedSequence, size: int) -> np.ndarray:
    """Recorded coordinates for one shard, shape (size, k)."""
    rng = np.random.default_rng(seed)
    if spec.group == "SO5":
        a1, a2 = (float(x) for x in spec.alpha)
        o = haar_special_orthogonal(rng, 5, size)

        def proj(i, j):
            # (O A O^T)_ij for the block seed
            return a1 * (o[:, i, 0] * o[:, j, 1] - o[:, i, 1] * o[:, j, 0]) + a2 * (o[:, i, 2] * o[:, j, 3] - o[:, i, 3] * o[:, j, 2])

        x1 = (proj(0, 1) - proj(1, 0)) / 2
        x2 = (proj(2, 3) - proj(3, 2)) / 2
        return np.stack([x1, x2], axis=1)
    u = haar_unitary(rng, spec.n, size)
    a = np.array([float(x) for x in spec.alpha])
    return (np.abs(u) ** 2) @ a


def _shard_sizes(N: int) -> list[int]:
    full, rest = divmod(N, SHARD)
    return [SHARD] * full + ([rest] if rest else [])


def _outside(spec: OrbitSpec, x: np.ndarray, tol: float = 1e-9) -> int:
    a = np.array(sorted((float(t) for t in spec.alpha), reverse=True))
    scale = float(np.max(np.abs(a))) or 1.0
    eps = tol * scale
    if spec.group == "SO5":
        a1, a2 = a
        bad = (
            (np.abs(x[:, 0]) > a1 + eps)
            | (np.abs(x[:, 1]) > a1 + eps)
            | (np.abs(x[:, 0] + x[:, 1]) > a1 + a2 + eps)
            | (np.abs(x[:, 0] - x[:, 1]) > a1 + a2 + eps)
        )
        return int(bad.sum())
    srt = -np.sort(-x, axis=1)
    bad = np.any(np.cumsum(srt, axis=1)[:, :-1] > np.cumsum(a)[:-1] + eps, axis=1)
    bad |= np.abs(x.sum(axis=1) - a.sum()) > eps * len(a)
    return int(bad.sum())


@dataclass
class Histogram:
    spec: OrbitSpec
    dimension: int
    lo: float
    width: float
    nbins: int
    counts: np.ndarray
    N: int
    seed: int
    outside_support: int = 0
    mean: list[float] = field(default_factory=list)
    mean_se: list[float] = field(default_factory=list)

    @property
    def edges(self) -> np.ndarray:
        return self.lo + self.width * np.arange(self.nbins + 1)

    @property
    def centers(self) -> np.ndarray:
        return self.lo + self.width * (np.arange(self.nbins) + 0.5)


def sample_diagonals(spec: OrbitSpec, N: int, seed: int = 0, bins: int = 80, threads: int | None = None, backend=None) -> Histogram:
    """Histogram of ``N`` Haar-random diagonal projections.

    SU(2) gives a 1-d histogram of ``xi_1``; SU(3) and SO(5) a 2-d histogram
    of ``(xi_1, xi_2)``; SU(4) the 2-d marginal of ``(xi_1, xi_2)``.
    """
    N = int(N)
    if N < 0:
        raise ValueError("N must be nonnegative")
    lo, hi = spec.box()
    width = (hi - lo) / bins
    be = backend or _kernels.active()
    sizes = _shard_sizes(N)
    seeds = np.random.SeedSequence(seed).spawn(len(sizes))
    dim = 1 if spec.group == "SU2" else 2
    k = 2 if spec.group == "SO5" else spec.n

    def work(args):
        ss, size = args
        x = _shard(spec, ss, size)
        yv = x[:, 1] if dim == 2 else np.full(size, lo + width / 2)
        h = be.hist2d(x[:, 0], yv, lo, lo, width, bins)
        return h, _outside(spec, x), x.sum(axis=0), (x * x).sum(axis=0)

    threads = threads or os.cpu_count() or 1
    jobs = list(zip(seeds, sizes))
    if threads > 1 and len(jobs) > 1:
        with ThreadPoolExecutor(max_workers=threads) as ex:
            parts = list(ex.map(work, jobs))
    else:
        parts = [work(j) for j in jobs]
    counts = np.zeros((bins, bins), dtype=np.int64)
    s1 = np.zeros(k)
    s2 = np.zeros(k)
    out = 0
    for h, o, a, b in parts:
        counts += h
        out += o
        s1 += a
        s2 += b
    if dim == 1:
        counts = counts[:, 0].copy()
    if N:
        mean = s1 / N
        var = np.maximum(s2 / N - mean**2, 0)
        se = np.sqrt(var / N)
    else:
        mean = se = np.full(k, np.nan)
    return Histogram(spec, dim, lo, width, bins, counts, N, seed, out, mean.tolist(), se.tolist())


# ---------------------------------------------------------------------------
# comparison with the exact density


def _density(spec: OrbitSpec):
    from .volumes.relations import pdf

    a = spec.alpha
    if spec.group == "SO5":
        return lambda p: pdf(a, p, "B2")
    if spec.group == "SU2":
        return lambda p: pdf(a, (p[0], sum(a) - p[0]), "A1")
    if spec.group == "SU3":
        S = sum(a)

        def f(p):
            from .volumes.su import in_permutahedron

            x = (p[0], p[1], S - p[0] - p[1])
            return pdf(a, x, "A2") if in_permutahedron(a, x) else Fraction(0)

        return f
    raise ValueError("exact density comparison is available for SU(2), SU(3) and SO(5)")


def _wall_lines(spec: OrbitSpec) -> list[tuple[float, float, float]]:
    """Lines ``a x + b y = c`` where the density changes determination."""
    a = [float(t) for t in spec.alpha]
    if spec.group == "SO5":
        from .volumes.b2 import b2_lines

        return [(float(ln.a), float(ln.b), float(ln.c)) for ln in b2_lines(spec.alpha)]
    if spec.group == "SU3":
        S = sum(a)
        out = []
        for aj in a:
            out += [(1.0, 0.0, aj), (0.0, 1.0, aj), (1.0, 1.0, S - aj)]
        return out
    return [(1.0, 0.0, aj) for aj in a]


def _crossed(lines, x0, x1, y0, y1) -> bool:
    for a, b, c in lines:
        vals = [a * x + b * y - c for x in (x0, x1) for y in (y0, y1)]
        if min(vals) <= 0 <= max(vals):
            return True
    return False


def _to_fraction(x: float) -> Fraction:
    return Fraction(x).limit_denominator(10**9)


@dataclass
class FitReport:
    N: int
    bins_compared: int
    interior_bins: int
    beyond_5sigma: int
    fraction_beyond: float
    max_abs_deviation: float
    max_abs_z: float
    chi2: float
    dof: int
    outside_support: int
    insufficient_data: bool
    expected: np.ndarray = field(repr=False, default=None)

    @property
    def passed(self) -> bool:
        return not self.insufficient_data and self.fraction_beyond <= 0.01 and self.outside_support == 0

    def to_json(self) -> dict:
        d = {k: v for k, v in self.__dict__.items() if k != "expected"}
        d["passed"] = self.passed
        return d


def expected_counts(h: Histogram) -> tuple[np.ndarray, np.ndarray]:
    """Expected counts per bin and a mask of bins lying inside the support.

    Each bin mass is the midpoint value of the exact pdf times the bin
    area, refined to a 3x3 subgrid when a singular line crosses the bin.
    """
    spec = h.spec
    f = _density(spec)
    walls = _wall_lines(spec)
    w = h.width
    edges = h.edges
    nb = h.nbins
    if h.dimension == 1:
        # the density is constant on its segment, so bin masses are exact overlaps
        a = [float(t) for t in spec.alpha]
        dens = float(f((spec.alpha[0],)))
        lo, hi = a[-1], a[0]
        overlap = np.clip(np.minimum(edges[1:], hi) - np.maximum(edges[:-1], lo), 0, None)
        inside = (edges[:-1] >= lo) & (edges[1:] <= hi)
        return overlap * dens * h.N, inside
    exp = np.zeros((nb, nb))
    inside = np.zeros((nb, nb), dtype=bool)
    fe = [_to_fraction(x) for x in edges]
    positive = np.array([[f((x, y)) > 0 for y in fe] for x in fe])
    for i in range(nb):
        for j in range(nb):
            x0, x1, y0, y1 = edges[i], edges[i + 1], edges[j], edges[j + 1]
            sub = 3 if _crossed(walls, x0, x1, y0, y1) else 1
            m = 0.0
            for s in range(sub):
                for t in range(sub):
                    p = (_to_fraction(x0 + (s + 0.5) * w / sub), _to_fraction(y0 + (t + 0.5) * w / sub))
                    m += float(f(p))
            exp[i, j] = m * (w / sub) ** 2 * h.N
            inside[i, j] = bool(positive[i : i + 2, j : j + 2].all())
    return exp, inside


def compare_histogram_pdf(h: Histogram) -> FitReport:
    if h.N == 0:
        return FitReport(0, 0, 0, 0, 0.0, 0.0, 0.0, 0.0, 0, h.outside_support, True)
    exp, inside = expected_counts(h)
    obs = h.counts.astype(float)
    pos = exp > 0
    z = np.zeros_like(exp)
    z[pos] = (obs[pos] - exp[pos]) / np.sqrt(exp[pos])
    chi2 = float(np.sum(z[pos] ** 2))
    interior = inside & pos
    n_int = int(interior.sum())
    beyond = int(np.sum(np.abs(z[interior]) > 5))
    frac = beyond / n_int if n_int else 0.0
    # counts in bins where the exact pdf vanishes identically are support violations
    return FitReport(
        h.N,
        int(pos.sum()),
        n_int,
        beyond,
        frac,
        float(np.max(np.abs(obs - exp))),
        float(np.max(np.abs(z[pos]))) if pos.any() else 0.0,
        chi2,
        int(pos.sum()) - 1,
        h.outside_support,
        n_int == 0,
        exp,
    )


def write_histogram_csv(h: Histogram, path, expected: np.ndarray | None = None) -> None:
    c = h.centers
    with open(path, "w", newline="") as fh:
        wr = csv.writer(fh)
        if h.dimension == 1:
            wr.writerow(["xi1", "count", "expected"])
            for i in range(h.nbins):
                wr.writerow([f"{c[i]:.6g}", int(h.counts[i]), "" if expected is None else f"{expected[i]:.6g}"])
            return
        wr.writerow(["xi1", "xi2", "count", "expected"])
        for i in range(h.nbins):
            for j in range(h.nbins):
                e = "" if expected is None else f"{expected[i, j]:.6g}"
                wr.writerow([f"{c[i]:.6g}", f"{c[j]:.6g}", int(h.counts[i, j]), e])


def summary(h: Histogram, report: FitReport | None = None) -> dict:
    out = {
        "group": h.spec.group,
        "alpha": [format_rational(a) for a in h.spec.alpha],
        "N": h.N,
        "seed": h.seed,
        "bins": h.nbins,
        "window": [h.lo, h.lo + h.width * h.nbins],
        "outside_support": h.outside_support,
        "mean": h.mean,
        "mean_standard_error": h.mean_se,
    }
    if h.spec.group == "SO5":
        out["cartan_normalization"] = CARTAN_NORMALIZATION
    if report is not None:
        out["comparison"] = report.to_json()
    return out


def write_summary_json(h: Histogram, path, report: FitReport | None = None) -> None:
    with open(path, "w") as fh:
        json.dump(summary(h, report), fh, indent=2)
