"""Acceptance criteria 1-14, each reported as one PASS/FAIL line.

Where practical a criterion is checked along a second route (Freudenthal
oracle, Heckman alternating sum) in addition to the main implementation.
"""

import random
import time
from fractions import Fraction

import pytest

import oracles
from schur_kostka.asymptotics import conjecture2_check, fit_quasipolynomial, horn_j_via_stretch, stretch_sequence
from schur_kostka.core_weights import rho, weight, weight_pair_to_xi, weight_to_partition
from schur_kostka.kostant import lr_steinberg, mult_kostant, weight_system
from schur_kostka.pictographs import forest_count, forest_readout, lianas_to_forest, tableau_to_lianas
from schur_kostka.polytopes import Tableau, gt_count, ssyt_count
from schur_kostka.volumes import (
    b2_cell_types,
    cells_crosssection,
    heckman_b2,
    heckman_su,
    i_mult_relation,
    jump_su4,
    observed_jump_su4,
    su4_walls,
    vol_b2,
    vol_su,
    vol_su3,
    wall_smoothness_probe,
)
from schur_kostka.volumes.walls import generic_wall_point

LAM, DEL = weight("A3", (4, 5, 3)), weight("A3", (-4, -2, 5))


@pytest.fixture
def report(request):
    tr = request.config.pluginmanager.getplugin("terminalreporter")
    state = {"t0": time.perf_counter()}

    def set_(number, name, detail=""):
        state.update(number=number, name=name, detail=detail)

    yield set_
    rep = getattr(request.node, "rep_call", None)
    ok = rep is not None and rep.passed
    line = f"[{'PASS' if ok else 'FAIL'}] criterion {state.get('number', '?'):>2} {state.get('name', '')}: {state.get('detail', '')} ({time.perf_counter() - state['t0']:.1f}s)"
    if tr is not None:
        tr.write_line(line)
    else:
        print(line)


def _rand_dominant(rng, tag, rank, total):
    while True:
        w = [rng.randint(0, total) for _ in range(rank)]
        if 0 < sum(w) <= total:
            return weight(tag, w)


def test_criterion_01_kostka(report):
    t = time.perf_counter()
    alpha = weight_to_partition(LAM).parts
    xi = weight_pair_to_xi(LAM, DEL).parts
    vals = (mult_kostant(LAM, DEL), gt_count(alpha, xi), ssyt_count(alpha, xi))
    dt = time.perf_counter() - t
    report(1, "Kostka golden value", f"kostant/gt/ssyt = {vals}, oracle {oracles.mult('A3', (4, 5, 3), (-4, -2, 5))}, {dt:.2f}s")
    assert vals == (26, 26, 26)
    assert oracles.mult("A3", (4, 5, 3), (-4, -2, 5)) == 26
    assert dt < 5


def test_criterion_02_lr_stabilization(report):
    seq = [lr_steinberg(LAM, rho("A3").scale(s), rho("A3").scale(s) + DEL) for s in range(1, 13)]
    limit = mult_kostant(LAM, DEL)
    s_c = next(s for s in range(1, 13) if all(v == limit for v in seq[s - 1 :]))
    report(2, "LR stabilization", f"s=4..9 {seq[3:9]}, s_c={s_c}")
    assert seq[3:9] == [6, 19, 24, 26, 26, 26]
    assert s_c == 7


def test_criterion_03_a3_bound(report):
    rng = random.Random(303)
    r = rho("A3")
    bad = 0
    for _ in range(500):
        lam = _rand_dominant(rng, "A3", 3, 8)
        d = rng.choice(sorted(weight_system(lam), key=lambda w: w.dynkin))
        m = mult_kostant(lam, d)
        b = 2 * int(sum(lam.dynkin))
        if any(lr_steinberg(lam, r.scale(s), r.scale(s) + d) != m for s in range(b, b + 4)):
            bad += 1
    report(3, "A3 s_c bound", f"500 pairs, {bad} violations (checked s = B..B+3, B = 2 sum lambda)")
    assert bad == 0


def test_criterion_04_stretching(report):
    seq = stretch_sequence(LAM, DEL, 10)
    fit = fit_quasipolynomial(seq)
    closed = [Fraction(6 + 35 * p + 69 * p * p + 46 * p**3, 6) for p in range(1, 11)]
    vol = vol_su(weight_to_partition(LAM).parts, weight_pair_to_xi(LAM, DEL).parts)
    report(4, "stretching polynomial", f"{fit}, I = {vol}")
    assert seq == [26, 120, 329, 699, 1276, 2106, 3235, 4709, 6574, 8876] == closed
    assert fit.period == 1 and fit.degree == 3
    assert fit.leading_coefficient == vol == Fraction(23, 3)


def test_criterion_05_horn(report):
    vals = []
    for s in (5, 6, 7, 8):
        vals.append(horn_j_via_stretch(LAM, weight("A3", (s, s, s)), weight("A3", (s - 4, s - 2, s + 5))).value)
    report(5, "Horn J stabilization", ", ".join(map(str, vals)))
    assert vals == [Fraction(13, 3), 7, Fraction(23, 3), Fraction(23, 3)]


def test_criterion_06_su4_special(report):
    r = rho("A3")
    alpha = weight_to_partition(r).parts
    got = []
    for d in ((0, 0, 0), (1, 0, 1), (0, 1, 0)):
        xi = weight_pair_to_xi(r, weight("A3", d)).parts
        got.append((vol_su(alpha, xi), heckman_su(alpha, xi)))
    report(6, "su(4) special values", ", ".join(str(a) for a, _ in got))
    assert got == [(Fraction(1, 2),) * 2, (Fraction(1, 24),) * 2, (Fraction(1, 6),) * 2]


def test_criterion_07_su3(report):
    n = bad_mult = bad_shift = 0
    r = rho("A2")
    for a in range(13):
        for b in range(13 - a):
            lam = weight("A2", (a, b))
            for d in weight_system(lam):
                alpha = weight_to_partition(lam).parts
                xi = weight_pair_to_xi(lam, d).parts
                v = vol_su3(alpha, xi)
                n += 1
                bad_mult += mult_kostant(lam, d) != v + 1
                lr_ = lam + r
                bad_shift += vol_su3(weight_to_partition(lr_).parts, weight_pair_to_xi(lr_, d).parts) != v + 1
    report(7, "su(3) relations", f"{n} weights, mult=I+1 failures {bad_mult}, shift failures {bad_shift}")
    assert n > 1000 and bad_mult == 0 and bad_shift == 0


def _relation_scan(tag, rank, samples, seed, second_route):
    rng = random.Random(seed)
    n = bad = 0
    branches = {"Q": 0, "Q+rho": 0}
    while n < samples:
        lam = _rand_dominant(rng, tag, rank, 10)
        d = weight(tag, [rng.randint(-12, 12) for _ in range(rank)])
        try:
            res = i_mult_relation(lam, d)
        except ValueError:
            continue
        n += 1
        branches[res.branch] += 1
        bad += not res.holds or second_route(lam, d) != res.lhs
    return n, bad, branches


def test_criterion_08_su4_relation(report):
    def heck(lam, d):
        lp = lam + rho("A3")
        return heckman_su(weight_to_partition(lp).parts, weight_pair_to_xi(lp, d).parts)

    n, bad, br = _relation_scan("A3", 3, 300, 808, heck)
    report(8, "su(4) I-mult relation", f"{n} pairs {br}, {bad} failures")
    assert n >= 300 and bad == 0 and min(br.values()) > 0


def test_criterion_09_b2(report):
    lam, d = weight("B2", (20, 12)), weight("B2", (18, -6))
    m = mult_kostant(lam, d)
    r = rho("B2")
    seq = [lr_steinberg(lam, r.scale(s), r.scale(s) + d) for s in range(1, 26)]
    printed = [0, 0, 0, 0, 0, 3, 8, 14, 20, 26, 31, 36, 40, 44, 47, 50, 52, 54, 55, 56, 56, 56, 56, 56, 56]
    s_c = next(s for s in range(1, 26) if all(v == m for v in seq[s - 1 :]))
    ro, sr = r.orthogonal(), weight("B2", (-1, 2)).orthogonal()
    v = vol_b2(ro, sr)

    def heck(lam, d):
        lp = lam + r
        return heckman_b2(lp.orthogonal(), d.orthogonal())

    n, bad, br = _relation_scan("B2", 2, 200, 909, heck)
    report(9, "B2 values and relation", f"mult={m}, s_c={s_c}, I(rho;{{-1,2}})={v}, relation {n} pairs {br}, {bad} failures")
    assert m == 56 == oracles.mult("B2", (20, 12), (18, -6))
    assert seq == printed and s_c == 20
    assert v == heckman_b2(ro, sr) == Fraction(1, 8)
    assert bad == 0 and min(br.values()) > 0


def test_criterion_10_cells(report):
    a = (5, 4, 2, -11)
    su4 = cells_crosssection("A3", a, (3, Fraction(a[0] + a[1], 2))).F
    alphas = [(4, 1), (4, Fraction(3, 2)), (4, 3)]
    b2 = [cells_crosssection("B2", x).F for x in alphas]
    types = len(b2_cell_types(alphas))
    report(10, "cell counts", f"su(4) {su4}, B2 {b2}, {types} cell types")
    assert su4 == 37 and b2 == [25, 25, 25] and types == 33


def test_criterion_11_smoothness(report):
    rng = random.Random(1111)
    n = bad_jump = probes = bad_class = 0
    for alpha in ((7, 4, 2, -6), (9, 5, 1, -4)):
        alpha = tuple(map(Fraction, alpha))
        S = sum(alpha)
        walls = su4_walls()
        guard = 0
        target = n + 60
        while n < target and guard < 2000:
            guard += 1
            w = rng.choice(walls)
            x = generic_wall_point(alpha, w, rng)
            if x is None:
                continue
            rec = jump_su4(alpha, w, x)
            y = [x[k] + Fraction(rng.randint(-11, 11), 13) for k in range(3)]
            y = tuple(y) + (S - sum(y),)
            bad_jump += rec(x) != observed_jump_su4(alpha, w, x, x)
            bad_jump += rec(y) != observed_jump_su4(alpha, w, x, y)
            n += 1
            if rec.coefficient != 0 and probes < 30:
                pr = wall_smoothness_probe("A3", alpha, w, x)
                probes += 1
                bad_class += not pr.stable or pr.continuity_class != (1 if w.kind == "single" else 2)
    report(11, "wall jumps and smoothness", f"{n} wall points, {bad_jump} jump mismatches, {probes} probes, {bad_class} class mismatches")
    assert n >= 100 and bad_jump == 0 and bad_class == 0 and probes >= 20


def test_criterion_12_montecarlo(report):
    from schur_kostka.schur_mc import OrbitSpec, compare_histogram_pdf, sample_diagonals
    from schur_kostka.volumes import b2_prefactor

    t = time.perf_counter()
    h = sample_diagonals(OrbitSpec("SO5", (4, 3)), 10**6, seed=12)
    rep = compare_histogram_pdf(h)
    dt = time.perf_counter() - t
    report(12, "Monte Carlo B2", f"{rep.beyond_5sigma}/{rep.interior_bins} bins beyond 5 sigma ({rep.fraction_beyond:.4f}), chi2/dof {rep.chi2 / rep.dof:.3f}, {dt:.1f}s")
    assert b2_prefactor((4, 3)) == Fraction(3, 2 * 4 * 3 * (16 - 9))
    assert rep.outside_support == 0
    assert rep.fraction_beyond <= 0.01
    assert dt < 120


def test_criterion_13_appendix(report):
    t = Tableau(((1, 1, 1, 2, 2, 2, 2, 3, 3, 3, 3, 3), (2, 2, 2, 3, 3, 3, 4, 4), (3, 4, 4)), 4)
    ls = tableau_to_lianas(t)
    printed = [{3}, {3}, {3}, {3}, {3, 4}, {2, 4}, {2, 3}, {2, 3}, {2, 3}, {1, 2, 4}, {1, 2, 4}, {1, 2, 3}]
    alpha, xi = forest_readout(lianas_to_forest(ls))
    cnt = forest_count((12, 8, 3, 0), (3, 7, 9, 4))
    report(13, "liana forests", f"readout {alpha}/{xi}, forest_count {cnt}")
    assert [set(li.entries) for li in ls] == printed
    assert (alpha, xi) == ((12, 8, 3, 0), (3, 7, 9, 4))
    assert cnt == 26


def test_criterion_14_conjectures(report):
    c1 = c1_bad = 0
    for l1 in range(5):
        lam_a = weight("A3", (l1, 1, l1))
        for w in weight_system(lam_a):
            d1, d2, d3 = (int(x) for x in w.dynkin)
            if d1 != d3:
                continue
            a3 = oracles.mult("A3", (l1, 1, l1), (d1, d2, d1))
            b2 = mult_kostant(weight("B2", (l1, 1)), weight("B2", (d1, d2)))
            c1 += 1
            c1_bad += a3 != b2 * b2
    rng = random.Random(1414)
    tally = {"consistent": 0, "exception": 0, "violation": 0}
    case_ii_exceptions = 0
    n = 0
    while n < 100:
        lam = _rand_dominant(rng, "B2", 2, 12)
        d = rng.choice(sorted(weight_system(lam), key=lambda w: w.dynkin))
        rec = conjecture2_check(lam, d)
        if rec.verdict == "not_applicable":
            continue
        n += 1
        tally[rec.verdict] += 1
        if rec.parity_class == "odd" and rec.twice_volume_integral is False and rec.verdict != "consistent":
            case_ii_exceptions += 1
    report(14, "conjecture suites", f"conjecture 1: {c1} cases, {c1_bad} failures; conjecture 2: {tally}, case (ii) exceptions {case_ii_exceptions}")
    assert c1 > 0 and c1_bad == 0
    assert tally["violation"] == 0 and case_ii_exceptions == 0
