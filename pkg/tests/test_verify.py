import math

import numpy as np
import pytest

from bohrkit.functionals import AnalyticInstance
from bohrkit.radii import generalized_residual, solve_min_root
from bohrkit.seqcore import blaschke_point, blaschke_product, coeff_table
from bohrkit.verify import (
    SampleSet,
    blaschke_oracle,
    check_area_bound,
    check_generalized_validity,
    check_growth_bounds,
    check_p_inequality,
    check_refined_lemma,
    check_schwarz_pick,
    fbeta_value,
    make_sample_set,
    p_ratio,
    refined_lemma_lhs,
    refined_lemma_rhs,
    run_suite,
)


@pytest.fixture(scope="module")
def samples():
    return make_sample_set(42, 100)


def test_sample_set_deterministic(samples):
    again = make_sample_set(42, 100)
    assert again.samples == samples.samples and again.labels == samples.labels
    other = make_sample_set(7, 100)
    assert other.samples != samples.samples
    assert len(samples) == 100


def test_samples_are_self_maps(samples):
    # sup |f| on a fine circle grid near the boundary stays below 1
    z = 0.999 * np.exp(2j * np.pi * np.arange(256) / 256)
    for f in samples.samples:
        if f.kind != "blaschke_product":
            continue
        p = f.params
        val = np.full(z.shape, np.exp(1j * p["theta"]))
        for a in p["zeros"]:
            val = val * (z - a) / (1 - np.conj(a) * z)
        val = p["mix"] * val + (1 - p["mix"]) * p["const"]
        assert np.max(np.abs(val)) < 1.0


def test_schwarz_pick(samples):
    rep = check_schwarz_pick(samples)
    assert rep.violations == 0 and rep.passed
    assert rep.equality_gap <= 1e-15
    ident = check_schwarz_pick(SampleSet(0, (blaschke_product([0.0]),), ("identity",)))
    assert ident.worst_margin == pytest.approx(0.0, abs=1e-15)


def test_p_inequality_examples():
    assert p_ratio(2.0, 0.3) == pytest.approx(1.0)
    assert p_ratio(1.0, 0.0) == 1.0
    assert p_ratio(1.0, 0.999) == pytest.approx(1 / 1.999, rel=1e-12)
    assert p_ratio(1.0, 0.999) == pytest.approx(0.50025, abs=1e-6)
    for p in (0.1, 0.5, 1.0, 1.7, 2.0):
        rep = check_p_inequality(p)
        assert rep.passed and rep.checks == 1001
    assert check_p_inequality(2.0).equality_gap <= 1e-15


def test_p_inequality_fails_beyond_two():
    # the reason p is capped at 2: at x = 0 the ratio is 1 < p/2
    assert p_ratio(3.0, 0.0) < 1.5
    with pytest.raises(ValueError):
        check_p_inequality(3.0)


def test_refined_lemma_examples():
    ident = blaschke_product([0.0])
    assert refined_lemma_lhs(ident, 1, 0.5) == pytest.approx(1.0)
    assert refined_lemma_rhs(ident, 1, 0.5) == pytest.approx(1.0)
    const = blaschke_product([], mix=0.0, const=0.4)
    for N in (1, 3):
        assert refined_lemma_lhs(const, N, 0.6) == 0.0
        assert refined_lemma_rhs(const, N, 0.6) == pytest.approx(0.84 * 0.6**N / 0.4)


@pytest.mark.parametrize("N", [1, 2, 3, 4, 5])
def test_refined_lemma_sweep(samples, N):
    rep = check_refined_lemma(samples, N)
    assert rep.violations == 0
    if N == 1:
        assert rep.equality_gap <= 1e-10


def test_refined_lemma_oracle():
    f = blaschke_point(0.4)
    N, r = 5, 0.6  # t = 2
    c = [f.coeff(k) for k in range(3000)]
    lhs = (
        math.fsum(c[n] * r**n for n in range(N, 3000))
        + (c[1] ** 2 + c[2] ** 2) * r**N / (1 - r)
        + (1 / 1.4 + r / 0.4) * math.fsum(c[n] ** 2 * r ** (2 * n) for n in range(3, 3000))
    )
    assert refined_lemma_lhs(f, N, r) == pytest.approx(lhs, abs=1e-13)


def test_area_bound(samples):
    rep = check_area_bound(samples)
    assert rep.violations == 0 and rep.equality_gap <= 1e-10
    with pytest.raises(ValueError):
        check_area_bound(samples, [0.8])


def test_growth_bounds():
    rep = check_growth_bounds()
    assert rep.passed
    assert fbeta_value(0.5, 0.5) == pytest.approx(1.0)


def test_generalized_validity(samples):
    inst = AnalyticInstance(1.0)
    R = solve_min_root(generalized_residual(inst)).value
    assert check_generalized_validity(samples, inst, R).passed
    # well above the radius the bound fails for near-extremal samples
    loose = check_generalized_validity(samples, inst, 0.6)
    assert loose.violations > 0 and not loose.passed


def test_blaschke_oracle_matches_closed_factor():
    a = 0.3 + 0.4j
    coeffs = blaschke_oracle([a], 6)
    assert coeffs[0] == pytest.approx(-a)
    assert coeffs[2] == pytest.approx((1 - abs(a) ** 2) * np.conj(a))


@pytest.mark.parametrize("seed", [42, 7])
def test_run_suite_passes(seed):
    rep = run_suite(seed)
    assert rep.passed, rep.to_text()
    ok, bad = rep.counts
    assert bad == 0 and ok == len(rep.checks)
    assert rep.to_json()["pass"] == ok


def test_run_suite_empty_set_is_vacuous():
    with pytest.warns(UserWarning, match="vacuous"):
        rep = run_suite(1, sample_set=SampleSet(1, (), ()))
    assert rep.passed
    assert any("vacuous" in w for c in rep.checks for w in c.warnings)


def test_violation_is_reported():
    # a coefficient table that is not a self-map breaks Schwarz-Pick
    bad = SampleSet(0, (coeff_table([0.5, 0.9]),), ("table",))
    rep = check_schwarz_pick(bad)
    assert rep.violations == 1 and not rep.passed and rep.failures
