import json

import numpy as np
import pytest

from schur_kostka import _kernels
from schur_kostka.schur_mc import (
    OrbitSpec,
    compare_histogram_pdf,
    haar_special_orthogonal,
    haar_unitary,
    sample_diagonals,
    write_histogram_csv,
    write_summary_json,
)


def test_haar_matrices():
    rng = np.random.default_rng(0)
    u = haar_unitary(rng, 3, 50)
    eye = np.eye(3)
    assert np.allclose(u @ np.conj(np.swapaxes(u, 1, 2)), eye)
    o = haar_special_orthogonal(rng, 5, 50)
    assert np.allclose(o @ np.swapaxes(o, 1, 2), np.eye(5))
    assert np.allclose(np.linalg.det(o), 1)


def test_deterministic_given_seed():
    spec = OrbitSpec("SO5", (4, 3))
    a = sample_diagonals(spec, 40_000, seed=5, bins=30)
    b = sample_diagonals(spec, 40_000, seed=5, bins=30, threads=1)
    c = sample_diagonals(spec, 40_000, seed=6, bins=30)
    assert np.array_equal(a.counts, b.counts)
    assert not np.array_equal(a.counts, c.counts)


@pytest.mark.parametrize("group,alpha", [("SU2", (3, 1)), ("SU3", (5, 3, 1)), ("SU4", (4, 2, 1, 0)), ("SO5", (4, 3))])
def test_support_and_counts(group, alpha):
    h = sample_diagonals(OrbitSpec(group, alpha), 20_000, seed=1, bins=20)
    assert h.outside_support == 0
    assert h.counts.sum() == 20_000


def test_su3_histogram_matches_pdf():
    h = sample_diagonals(OrbitSpec("SU3", (5, 3, 1)), 200_000, seed=3, bins=40)
    rep = compare_histogram_pdf(h)
    assert rep.passed and rep.interior_bins > 100


def test_su2_histogram_matches_pdf():
    rep = compare_histogram_pdf(sample_diagonals(OrbitSpec("SU2", (3, 1)), 200_000, seed=3, bins=40))
    assert rep.passed


def test_mean_of_diagonal():
    # the diagonal averages to the centre of the permutahedron
    h = sample_diagonals(OrbitSpec("SU3", (5, 3, 1)), 100_000, seed=2, bins=20)
    assert abs(h.mean[0] - 3) < 5 * h.mean_se[0]


def test_backends_give_identical_histograms():
    bes = _kernels.backends()
    spec = OrbitSpec("SO5", (4, 3))
    hs = [sample_diagonals(spec, 30_000, seed=9, bins=25, backend=be).counts for be in bes.values()]
    assert all(np.array_equal(hs[0], h) for h in hs[1:])


def test_outputs(tmp_path):
    h = sample_diagonals(OrbitSpec("SU3", (5, 3, 1)), 10_000, seed=0, bins=10)
    rep = compare_histogram_pdf(h)
    write_histogram_csv(h, tmp_path / "h.csv", rep.expected)
    write_summary_json(h, tmp_path / "h.json", rep)
    assert (tmp_path / "h.csv").read_text().count("\n") > 10
    assert json.loads((tmp_path / "h.json").read_text())["N"] == 10_000


def test_spec_validation():
    with pytest.raises(ValueError):
        OrbitSpec("SO5", (3, 4))
    with pytest.raises(ValueError):
        OrbitSpec("SU3", (1, 2, 3))
    with pytest.raises(ValueError):
        OrbitSpec("G2", (1, 2))
