"""Smoke tests for the python extension module."""

import math

import pytest

import dpflmd


def test_version():
    assert dpflmd.__version__


def test_noise_factor():
    eta = dpflmd.noise_factor(3.0)
    assert math.isclose(eta.eta, 1.0 / (1.0 + math.exp(3.0)), rel_tol=0, abs_tol=1e-12)
    with pytest.raises(ValueError):
        dpflmd.noise_factor(0.0)


def test_randomize_bit_determinism():
    eta = dpflmd.noise_factor(1.0)
    a = [dpflmd.randomize_bit(True, eta, r) for r in [dpflmd.Rng(5)] for _ in range(50)]
    b = [dpflmd.randomize_bit(True, eta, r) for r in [dpflmd.Rng(5)] for _ in range(50)]
    assert a == b


def test_hamming_and_neighbors():
    assert dpflmd.hamming("AGTCA", "ATTCG") == 2
    assert dpflmd.is_approximate("AGTCA", "ATTCG", 3)
    assert not dpflmd.is_approximate("AGTCA", "AGTCA", 3)


def test_split_and_generate():
    assert dpflmd.split_merged("ABCABC", 4) == ["ABCA", "ABCB", "ABCC"]
    candidates, merged = dpflmd.generate_candidates(["A", "C"], 1, 2, "ACGT")
    assert merged == ["AACGT", "CACGT"]
    assert candidates == ["AA", "AC", "AG", "AT", "CA", "CC", "CG", "CT"]


def test_corrected_threshold():
    eta = dpflmd.noise_factor(3.0).eta
    theta = dpflmd.corrected_threshold(0.5, eta, 0.01, 261)
    assert math.isclose(theta, 0.59392638131673593, abs_tol=1e-9)


def test_dataset_and_support():
    d = dpflmd.Dataset(["ACGT", "TTAC", "GGGG", "CCCC"])
    assert len(d) == 4
    assert dpflmd.support("AC", d) == 0.5
    with pytest.raises(ValueError):
        dpflmd.Dataset(["ACGN"])


def test_degenerate_mining_matches_oracle():
    d = dpflmd.generate_synthetic(100, 30, motif="ACGTA", plant_rate=0.5, seed=3)
    params = dpflmd.MiningParams(
        f=0.3, delta=1, l_min=1, l_max=3, top_n=20, epsilon=50.0, xi=1.0, x=100, seed=8
    )
    ncfm, budget = dpflmd.run_mining(d, params)
    truth = dpflmd.exact_mine(d, params)
    assert budget > 0
    assert {m.pattern for m in ncfm} == {m.pattern for m in truth}
    mined_cf = {m.pattern: m.cf for m in ncfm}
    for m in truth:
        assert math.isclose(mined_cf[m.pattern], m.cf, abs_tol=1e-9)


def test_brute_force_cf():
    cf = dpflmd.brute_force_cf({"AA": 0.6, "AT": 0.5, "TT": 0.4}, 1)
    assert math.isclose(cf["AT"], 1.5)
    assert math.isclose(cf["AA"], 1.1)
    assert math.isclose(cf["TT"], 0.9)


def test_f1_score():
    assert dpflmd.f1_score({"A", "C"}, {"A", "C"}) == 1.0
    assert dpflmd.f1_score({"A", "G"}, {"A", "C"}) == 0.5
    assert dpflmd.f1_score(set(), {"A"}) == 0.0


def test_load_dataset(tmp_path):
    p = tmp_path / "d.txt"
    p.write_text("ACGT\nTTTT\n")
    d = dpflmd.load_dataset(str(p), "plain")
    assert d.sequences == ["ACGT", "TTTT"]
