import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from bohrkit.errors import ConfigurationError, DomainError, NonConvergentError, UnsupportedError
from bohrkit.seqcore import (
    CoeffSeq,
    WeightSeq,
    blaschke_coefficients,
    blaschke_point,
    blaschke_product,
    closed_sum_power,
    coeff_table,
    coeffs_from_json,
    eval_weight,
    harmonic_extremal,
    paper_printed_sum,
    square_weighted,
    sum_coeff_weights,
    sum_weights,
    weight_from_json,
    weight_to_json,
)

R_GRID = [round(0.1 * i, 1) for i in range(1, 10)]


def partial(f, first, last):
    """Brute-force oracle: fsum of f(k) for k in [first, last]."""
    return math.fsum(f(k) for k in range(first, last + 1))


# -- eval_weight ------------------------------------------------------------


def test_eval_weight_examples():
    assert eval_weight(WeightSeq("monomial"), 3, 0.5) == 0.125
    assert eval_weight(WeightSeq("refined_weight", {"a": 0.0}, 1), 4, 0.5) == pytest.approx(2.0, abs=1e-15)
    assert eval_weight(WeightSeq("lacunary", {"q": 2}), 1, 0.3) == pytest.approx(0.09, abs=1e-15)


def test_eval_weight_kinds():
    r = 0.4
    assert eval_weight(WeightSeq("shifted"), 3, r) == pytest.approx(4 * r**3)
    assert eval_weight(WeightSeq("power_weighted", {"alpha": 2}), 3, r) == pytest.approx(9 * r**3)
    assert eval_weight(WeightSeq("linear_k", {"c": 16 / 9}, 1), 3, r) == pytest.approx(16 / 3)
    assert eval_weight(WeightSeq("zero", start=1), 5, r) == 0.0
    u = WeightSeq("unit_then_monomial")
    assert [eval_weight(u, k, r) for k in range(4)] == pytest.approx([1.0, 1.0, r**2, r**3])


def test_eval_weight_errors():
    with pytest.raises(DomainError):
        eval_weight(WeightSeq("monomial"), 1, 1.0)
    with pytest.raises(DomainError):
        eval_weight(WeightSeq("monomial"), 1, -0.1)
    with pytest.raises(ConfigurationError):
        WeightSeq("no_such_kind")
    with pytest.raises(ConfigurationError):
        WeightSeq("lacunary", {"q": 0})


def test_head_override():
    w = WeightSeq("shifted", head={1: 1.0})
    assert eval_weight(w, 1, 0.3) == 1.0
    assert eval_weight(w, 2, 0.3) == pytest.approx(3 * 0.09)


# -- sum_weights ------------------------------------------------------------


def test_sum_weights_examples():
    res = sum_weights(WeightSeq("monomial"), 0.5, 1)
    assert res.value == pytest.approx(1.0, abs=1e-15) and res.tail_bound == 0 and res.rigorous
    assert sum_weights(WeightSeq("power_weighted", {"alpha": 2}), 0.5, 2, 1e-12).value == pytest.approx(5.5, abs=1e-12)
    shifted = sum_weights(WeightSeq("shifted"), 0.5, 2, 1e-12).value
    assert shifted == pytest.approx(2.0, abs=1e-12)
    assert shifted == pytest.approx(partial(lambda n: (n + 1) * 0.5**n, 2, 100_000), abs=1e-12)


@pytest.mark.parametrize("kind,params", [
    ("monomial", {}),
    ("shifted", {}),
    ("power_weighted", {"alpha": 1}),
    ("power_weighted", {"alpha": 2}),
    ("power_weighted", {"alpha": 3}),
    ("lacunary", {"q": 3}),
    ("unit_then_monomial", {}),
])
@pytest.mark.parametrize("K", [100, 1000, 10_000])
def test_closed_forms_vs_partial_sums(kind, params, K):
    w = WeightSeq(kind, params)
    for r in R_GRID:
        closed = sum_weights(w, r, 1).value
        head = math.fsum(w.values(np.arange(1, K + 1), r).tolist())
        # remainder after K terms is non-negative and bounded by a ratio tail
        q = w.ratio_bound(K + 1, r)
        last = w.value(K + 1, r)
        tail = last / (1 - q) if q < 1 else math.inf
        assert -1e-12 * max(1, closed) <= closed - head <= tail + 1e-12 * max(1, closed)


def test_numeric_sum_matches_oracle():
    # k r^(2k) as a product weight has no closed form; the ratio tail certifies it
    w = square_weighted(WeightSeq("monomial"), WeightSeq("linear_k", {"c": 1.0}, 1))
    coeffs = blaschke_point(0.6)
    r = 0.7
    got = sum_coeff_weights(coeffs, w, r, 1, 2, 1e-14)
    oracle = partial(lambda k: k * coeffs.coeff(k) ** 2 * r ** (2 * k), 1, 3000)
    assert got.rigorous
    assert got.tail_bound <= 1e-14
    assert got.value == pytest.approx(oracle, abs=1e-13)


def test_divergence_raises():
    w = WeightSeq("linear_k", {"c": 1.0}, 1)
    with pytest.raises(NonConvergentError):
        sum_weights(w, 0.5, 1)


def test_custom_table():
    w = WeightSeq("custom_table", {"values": [0.5, 0.25, 0.125]})
    assert sum_weights(w, 0.3, 0).value == pytest.approx(0.875)
    assert w.rigorous
    infinite = WeightSeq("custom_table", {"values": [1.0, 1.0], "finite": False})
    assert not infinite.rigorous


@settings(max_examples=60, deadline=None)
@given(st.floats(0.0, 0.95), st.floats(0.0, 0.95))
def test_sum_monotone_in_r(r1, r2):
    lo, hi = sorted((r1, r2))
    for w in (WeightSeq("shifted"), WeightSeq("power_weighted", {"alpha": 3}), WeightSeq("lacunary", {"q": 2})):
        assert sum_weights(w, lo, 1).value <= sum_weights(w, hi, 1).value + 1e-12


# -- closed_sum_power and the printed variant -------------------------------


def test_closed_sum_power_examples():
    assert closed_sum_power(1, 0.5) == pytest.approx(1.5, abs=1e-14)
    assert closed_sum_power(2, 0.5) == pytest.approx(5.5, abs=1e-14)
    # brute-force partial sums are the authority here
    assert closed_sum_power(3, 0.5) == pytest.approx(partial(lambda n: n**3 / 2**n, 2, 200), abs=1e-12)
    assert closed_sum_power(3, 0.5) == pytest.approx(25.5, abs=1e-12)


def test_closed_sum_power_unsupported():
    with pytest.raises(UnsupportedError):
        closed_sum_power(4, 0.5)
    with pytest.raises(DomainError):
        closed_sum_power(1, 1.0)


def test_paper_printed_sum_examples():
    assert paper_printed_sum(1, 0.5) == pytest.approx(3.0, abs=1e-14)
    assert paper_printed_sum(2, 0.5) == pytest.approx(5.5, abs=1e-14)
    assert paper_printed_sum(1, 0.0) == 0.0


def test_printed_minus_true():
    for r in np.linspace(0.01, 0.95, 40):
        diff = paper_printed_sum(1, r) - closed_sum_power(1, r)
        assert diff == pytest.approx((1 - r) * r * (2 - r) / (1 - r) ** 2, rel=1e-12)
        assert diff > 0
    for a in (2, 3):
        assert paper_printed_sum(a, 0.4) == closed_sum_power(a, 0.4)


# -- coefficient sequences --------------------------------------------------


def test_blaschke_point_moduli():
    f = blaschke_point(0.5)
    assert f.c0 == 0.5
    assert f.values([1, 2, 3]).tolist() == pytest.approx([0.75, 0.375, 0.1875])
    for a in np.linspace(0, 0.99, 12):
        f = blaschke_point(a)
        assert np.all(f.values(np.arange(1, 60)) <= 1 - f.c0**2 + 1e-15)


def test_harmonic_extremal_moduli():
    f = harmonic_extremal(0.3)
    assert f.values([0, 1, 2, 9]).tolist() == pytest.approx([0.0, 1.0, 1.4, 1.4])
    assert f.harmonic


def convolution_oracle(zeros, n, theta=0.0):
    out = np.zeros(n, dtype=complex)
    out[0] = np.exp(1j * theta)
    for a in zeros:
        fac = np.array([-a] + [(1 - abs(a) ** 2) * np.conj(a) ** (k - 1) for k in range(1, n)])
        out = np.convolve(out, fac)[:n]
    return out


@settings(max_examples=40, deadline=None)
@given(st.lists(st.tuples(st.floats(0, 0.95), st.floats(0, 2 * math.pi)), min_size=1, max_size=8),
       st.floats(0, 2 * math.pi))
def test_blaschke_coefficients_vs_convolution(polar, theta):
    zeros = [r * complex(math.cos(t), math.sin(t)) for r, t in polar]
    got = blaschke_coefficients(zeros, 40, theta)
    assert np.max(np.abs(got - convolution_oracle(zeros, 40, theta))) <= 1e-12


def test_blaschke_product_schwarz_pick_tail_sum():
    f = blaschke_product([0.5, -0.3j, 0.7 + 0.1j], theta=0.4)
    res = sum_coeff_weights(f, WeightSeq("monomial"), 0.9, 1)
    assert res.rigorous
    direct = math.fsum(f.values(np.arange(1, 4000)) * 0.9 ** np.arange(1, 4000))
    assert res.value == pytest.approx(direct, abs=1e-12)


def test_convex_combination_and_constant():
    f = blaschke_product([0.2], mix=0.5, const=0.4)
    c = f.complex_coefficients(3)
    assert c[0] == pytest.approx(0.5 * -0.2 + 0.5 * 0.4)
    const = blaschke_product([], mix=0.0, const=0.6)
    assert const.c0 == pytest.approx(0.6)
    assert const.values([1, 5]).tolist() == [0.0, 0.0]


def test_coeff_errors():
    with pytest.raises(DomainError):
        blaschke_point(1.0)
    with pytest.raises(DomainError):
        blaschke_product([1.2])
    with pytest.raises(ConfigurationError):
        coeff_table([-1.0])
    with pytest.raises(ConfigurationError):
        CoeffSeq("weird")


def test_json_roundtrip():
    w = weight_from_json({"kind": "shifted", "head": {"1": 1.0}})
    assert w.head == {1: 1.0}
    assert weight_from_json(weight_to_json(w)) == w
    assert weight_from_json({"kind": "power", "alpha": 1}).kind == "power_weighted"
    f = coeffs_from_json({"kind": "blaschke_point", "a": 0.5})
    assert f == blaschke_point(0.5)
    g = coeffs_from_json({"kind": "blaschke_product", "zeros": [[0.1, 0.2], 0.3], "const": [0.1, 0.0], "mix": 0.5})
    assert g.params["zeros"] == (0.1 + 0.2j, 0.3 + 0j)
    assert coeffs_from_json(f.to_json()) == f
