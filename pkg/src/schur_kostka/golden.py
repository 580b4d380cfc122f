"""Golden values and property scans, runnable as one table (``schur-kostka paper-check``)."""

from __future__ import annotations

import random
import time
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from .asymptotics import (
    conjecture1_scan,
    conjecture2_check,
    fit_quasipolynomial,
    horn_j_via_stretch,
    lr_shift_sequence,
    sc_bound_check_a3,
    sc_threshold,
    stretch_sequence,
)
from .core_weights import rho, weight, weight_pair_to_xi, weight_to_partition
from .kostant import mult_kostant, weight_system
from .pictographs import forest_count, forest_readout, lianas_to_forest, tableau_to_lianas
from .polytopes import Tableau, gt_count, ssyt_count
from .volumes import (
    b2_cell_types,
    cells_crosssection,
    i_mult_relation,
    jump_su4,
    observed_jump_su4,
    su4_walls,
    vol_b2,
    vol_su3,
    vol_su4,
    wall_smoothness_probe,
)
from .volumes.walls import generic_wall_point

A3, B2 = "A3", "B2"
LAM, DEL = (4, 5, 3), (-4, -2, 5)
B2_LR = [0, 0, 0, 0, 0, 3, 8, 14, 20, 26, 31, 36, 40, 44, 47, 50, 52, 54, 55, 56, 56, 56, 56, 56, 56]
STRETCH = [26, 120, 329, 699, 1276, 2106, 3235, 4709, 6574, 8876]
LEFT_SETS = [{3}, {3}, {3}, {3}, {3, 4}, {2, 4}, {2, 3}, {2, 3}, {2, 3}, {1, 2, 4}, {1, 2, 4}, {1, 2, 3}]
EXAMPLE_TABLEAU = ((1, 1, 1, 2, 2, 2, 2, 3, 3, 3, 3, 3), (2, 2, 2, 3, 3, 3, 4, 4), (3, 4, 4))


@dataclass
class CheckResult:
    number: int
    name: str
    passed: bool
    detail: str
    seconds: float = 0.0

    def line(self) -> str:
        return f"[{'PASS' if self.passed else 'FAIL'}] {self.number:2d} {self.name}: {self.detail} ({self.seconds:.1f}s)"


def _random_weight(rng, tag, rank, total):
    while True:
        w = [rng.randint(0, total) for _ in range(rank)]
        if 0 < sum(w) <= total:
            return weight(tag, w)


def check_kostka() -> tuple[bool, str]:
    lam, d = weight(A3, LAM), weight(A3, DEL)
    alpha = weight_to_partition(lam).parts
    xi = weight_pair_to_xi(lam, d, integral=True).parts
    vals = (mult_kostant(lam, d), gt_count(alpha, xi), ssyt_count(alpha, xi))
    return vals == (26, 26, 26), f"kostant/gt/ssyt = {vals}"


def check_lr_stabilization() -> tuple[bool, str]:
    rep = sc_threshold(weight(A3, LAM), weight(A3, DEL))
    seq = rep.sequence[3:9]
    return seq == [6, 19, 24, 26, 26, 26] and rep.s_c == 7, f"s=4..9: {seq}, s_c={rep.s_c}"


def check_a3_bound(samples: int = 500, seed: int = 11) -> tuple[bool, str]:
    rng = random.Random(seed)
    bad = 0
    for _ in range(samples):
        lam = _random_weight(rng, A3, 3, 8)
        d = rng.choice(sorted(weight_system(lam), key=lambda w: w.dynkin))
        if not sc_bound_check_a3(lam, d):
            bad += 1
    return bad == 0, f"{samples} pairs, {bad} violations"


def check_stretch() -> tuple[bool, str]:
    lam, d = weight(A3, LAM), weight(A3, DEL)
    seq = stretch_sequence(lam, d, 10)
    fit = fit_quasipolynomial(seq, max_degree=3)
    want = [Fraction(1), Fraction(35, 6), Fraction(23, 2), Fraction(23, 3)]
    vol = vol_su4(weight_to_partition(lam).parts, weight_pair_to_xi(lam, d).parts)
    ok = seq == STRETCH and fit.period == 1 and fit.components[0] == want and vol == Fraction(23, 3) == fit.leading_coefficient
    return ok, f"fit {fit}, I = {vol}"


def check_horn() -> tuple[bool, str]:
    lam = weight(A3, LAM)
    vals = []
    for s in (5, 6, 7, 8):
        mu = weight(A3, (s, s, s))
        nu = weight(A3, (s - 4, s - 2, s + 5))
        vals.append(horn_j_via_stretch(lam, mu, nu).value)
    want = [Fraction(13, 3), Fraction(7), Fraction(23, 3), Fraction(23, 3)]
    return vals == want, "J = " + ", ".join(map(str, vals))


def check_su4_special() -> tuple[bool, str]:
    r = weight_to_partition(rho(A3)).parts
    vals = []
    for d in ((0, 0, 0), (1, 0, 1), (0, 1, 0)):
        vals.append(vol_su4(r, weight_pair_to_xi(rho(A3), weight(A3, d)).parts))
    return vals == [Fraction(1, 2), Fraction(1, 24), Fraction(1, 6)], "I = " + ", ".join(map(str, vals))


def check_su3(limit: int = 12) -> tuple[bool, str]:
    bad_mult = bad_shift = n = 0
    for a1 in range(limit + 1):
        for a2 in range(a1 + 1):
            if a1 + a2 > limit:
                continue
            alpha = (a1, a2, 0)
            for x1 in range(a1 + 1):
                for x2 in range(a1 + 1):
                    x3 = a1 + a2 - x1 - x2
                    if x3 < 0 or x3 > a1:
                        continue
                    xi = (x1, x2, x3)
                    v = vol_su3(alpha, xi)
                    g = gt_count(alpha, xi)
                    if g == 0:
                        continue
                    n += 1
                    if g != v + 1:
                        bad_mult += 1
                    if vol_su3((a1 + 2, a2 + 1, 0), (x1 + 1, x2 + 1, x3 + 1)) != v + 1:
                        bad_shift += 1
    return bad_mult == bad_shift == 0, f"{n} pairs; mult=I+1 failures {bad_mult}, shift failures {bad_shift}"


def _relation_scan(tag, rank, total, samples, seed):
    rng = random.Random(seed)
    n = bad = 0
    branches = {"Q": 0, "Q+rho": 0}
    while n < samples:
        lam = _random_weight(rng, tag, rank, total)
        d = weight(tag, [rng.randint(-total - 2, total + 2) for _ in range(rank)])
        try:
            r = i_mult_relation(lam, d)
        except ValueError:
            continue
        n += 1
        branches[r.branch] += 1
        bad += not r.holds
    return n, bad, branches


def check_su4_relation(samples: int = 300) -> tuple[bool, str]:
    n, bad, br = _relation_scan(A3, 3, 10, samples, 5)
    return bad == 0 and min(br.values()) > 0, f"{n} pairs {br}, {bad} failures"


def check_b2() -> tuple[bool, str]:
    lam, d = weight(B2, (20, 12)), weight(B2, (18, -6))
    m = mult_kostant(lam, d)
    seq = lr_shift_sequence(lam, d, range(1, 26))
    rep = sc_threshold(lam, d)
    v = vol_b2(rho(B2).orthogonal(), weight(B2, (-1, 2)).orthogonal())
    n, bad, br = _relation_scan(B2, 2, 10, 200, 9)
    ok = m == 56 and seq == B2_LR and rep.s_c == 20 and v == Fraction(1, 8) and bad == 0
    return ok, f"mult={m}, seq ok={seq == B2_LR}, s_c={rep.s_c}, I(rho;short root)={v}, relation {n} pairs {br} failures {bad}"


def check_cells() -> tuple[bool, str]:
    alpha = (5, 4, 2, -11)
    arr = cells_crosssection(A3, alpha, (3, Fraction(9, 2)))
    b2 = [cells_crosssection(B2, a).F for a in ((4, 1), (4, Fraction(3, 2)), (4, 3))]
    types = len(b2_cell_types([(4, 1), (4, Fraction(3, 2)), (4, 3)]))
    return arr.F == 37 and b2 == [25, 25, 25] and types == 33, f"su(4) {arr.F} cells, B2 {b2}, {types} cell types"


def check_smoothness(points: int = 100, seed: int = 13) -> tuple[bool, str]:
    rng = random.Random(seed)
    alpha = (Fraction(7), Fraction(4), Fraction(2), Fraction(-6))
    S = sum(alpha)
    walls = su4_walls()
    n = bad_jump = bad_class = probes = 0
    guard = 0
    while n < points and guard < 50 * points:
        guard += 1
        w = rng.choice(walls)
        x = generic_wall_point(alpha, w, rng)
        if x is None:
            continue
        rec = jump_su4(alpha, w, x)
        y = [x[k] + Fraction(rng.randint(-9, 9), 7) for k in range(3)]
        y = tuple(y) + (S - sum(y),)
        for probe in (x, y):
            if rec(probe) != observed_jump_su4(alpha, w, x, probe):
                bad_jump += 1
        n += 1
        if rec.coefficient != 0 and (probes < 40):
            pr = wall_smoothness_probe(A3, alpha, w, x)
            want = 1 if w.kind == "single" else 2
            probes += 1
            if pr.continuity_class != want or not pr.stable:
                bad_class += 1
    ok = n >= points and bad_jump == 0 and bad_class == 0
    return ok, f"{n} wall points, jump mismatches {bad_jump}; {probes} probes, class mismatches {bad_class}"


def check_montecarlo(N: int = 10**6, seed: int = 2024) -> tuple[bool, str]:
    from .schur_mc import OrbitSpec, compare_histogram_pdf, sample_diagonals

    h = sample_diagonals(OrbitSpec("SO5", (4, 3)), N, seed=seed)
    rep = compare_histogram_pdf(h)
    return rep.passed, f"{rep.beyond_5sigma}/{rep.interior_bins} interior bins beyond 5 sigma, chi2/dof = {rep.chi2 / max(rep.dof, 1):.3f}"


def check_appendix() -> tuple[bool, str]:
    t = Tableau(EXAMPLE_TABLEAU, 4)
    ls = tableau_to_lianas(t)
    sets = [set(li.entries) for li in ls]
    alpha, xi = forest_readout(lianas_to_forest(ls))
    cnt = forest_count((12, 8, 3, 0), (3, 7, 9, 4))
    ok = sets == LEFT_SETS and alpha == (12, 8, 3, 0) and xi == (3, 7, 9, 4) and cnt == 26
    return ok, f"left-sets ok={sets == LEFT_SETS}, readout {alpha}/{xi}, forest_count={cnt}"


def check_conjectures(samples: int = 100, seed: int = 17) -> tuple[bool, str]:
    c1_bad = c1_n = 0
    for l1 in range(0, 5):
        for rec in conjecture1_scan(l1):
            c1_n += 1
            c1_bad += not rec.matches
    rng = random.Random(seed)
    counts = {"consistent": 0, "exception": 0, "violation": 0}
    odd_nonint_exceptions = 0
    n = 0
    while n < samples:
        lam = _random_weight(rng, B2, 2, 12)
        ws = [w for w in weight_system(lam) if w.is_dominant]
        d = rng.choice(sorted(ws, key=lambda w: w.dynkin))
        rec = conjecture2_check(lam, d)
        if rec.verdict not in counts:
            continue
        n += 1
        counts[rec.verdict] += 1
        if rec.parity_class == "odd" and rec.twice_volume_integral is False and rec.verdict != "consistent":
            odd_nonint_exceptions += 1
    ok = c1_bad == 0 and counts["violation"] == 0 and odd_nonint_exceptions == 0
    return ok, f"conjecture 1: {c1_n} cases, {c1_bad} failures; conjecture 2: {counts}, case (ii) 2I not integral exceptions {odd_nonint_exceptions}"


CHECKS: list[tuple[int, str, Callable]] = [
    (1, "Kostka golden value", check_kostka),
    (2, "LR stabilization", check_lr_stabilization),
    (3, "A3 s_c bound", check_a3_bound),
    (4, "stretching polynomial", check_stretch),
    (5, "Horn J stabilization", check_horn),
    (6, "su(4) special values", check_su4_special),
    (7, "su(3) relations", check_su3),
    (8, "su(4) I-mult relation", check_su4_relation),
    (9, "B2 values and relation", check_b2),
    (10, "cell counts", check_cells),
    (11, "wall jumps and smoothness", check_smoothness),
    (12, "Monte Carlo B2", check_montecarlo),
    (13, "liana forests", check_appendix),
    (14, "conjecture suites", check_conjectures),
]


def run_all(skip: set[int] | None = None, echo: Callable[[str], None] | None = None) -> list[CheckResult]:
    out = []
    for num, name, fn in CHECKS:
        if skip and num in skip:
            continue
        t = time.perf_counter()
        try:
            ok, detail = fn()
        except Exception as e:  # a crash is a failed check, reported in the table
            ok, detail = False, f"error: {type(e).__name__}: {e}"
        res = CheckResult(num, name, bool(ok), detail, time.perf_counter() - t)
        out.append(res)
        if echo:
            echo(res.line())
    return out
