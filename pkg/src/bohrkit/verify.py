"""Seeded property suites for the auxiliary inequalities behind the radii.

Samples of the class of analytic self-maps are finite Blaschke products,
their convex combinations with constants, and the ``f_a`` grid.  Harmonic
samples are ``f_beta`` and its truncations.  Every check returns a
:class:`CheckReport`; margins are ``bound - lhs`` so a negative margin is a
violation.
"""
from __future__ import annotations

import json
import math
import warnings
from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

from .functionals import (
    AnalyticInstance,
    HarmonicInstance,
    area_upper_bound,
    eval_area_ratio,
    eval_Cf,
    eval_harmonic_S,
    growth_bounds_harmonic,
    sample_value,
    MONOMIAL,
    sgn,
)
from .radii import harmonic_residual, solve_min_root
from .seqcore import (
    CoeffSeq,
    blaschke_coefficients,
    blaschke_point,
    blaschke_product,
    closed_sum_power,
    coeff_table,
    harmonic_extremal,
    sum_coeff_weights,
)

SCHWARZ_PICK_TOL = 1e-12
P_INEQ_TOL = 1e-12
LEMMA_TOL = 1e-10
AREA_TOL = 1e-10
EQUALITY_TOL = 1e-10
COEFF_HORIZON = 40

FA_GRID = (0.0, 0.25, 0.5, 0.75, 0.9, 0.99)
BETA_GRID = tuple(round(0.1 * i, 1) for i in range(10))
R_GRID = tuple(round(0.1 * i, 1) for i in range(1, 10))
AREA_R_GRID = tuple(round(0.1 * i, 1) for i in range(1, 8))


@dataclass(frozen=True)
class SampleSet:
    seed: int
    samples: tuple[CoeffSeq, ...]
    labels: tuple[str, ...]
    harmonic: tuple[CoeffSeq, ...] = ()

    def __len__(self) -> int:
        return len(self.samples)

    def by_label(self, prefix: str) -> list[CoeffSeq]:
        return [s for s, lab in zip(self.samples, self.labels) if lab.startswith(prefix)]


def _random_zero(rng: np.random.Generator, rmax: float = 0.95) -> complex:
    # uniform in area on the disk of radius rmax
    rho = rmax * math.sqrt(rng.random())
    ang = 2 * math.pi * rng.random()
    return complex(rho * math.cos(ang), rho * math.sin(ang))


def make_sample_set(seed: int = 42, n: int = 100, max_degree: int = 8) -> SampleSet:
    """Deterministic samples: fixed extremal cases first, then random Blaschke products."""
    rng = np.random.default_rng(seed)
    fixed: list[tuple[CoeffSeq, str]] = [(blaschke_point(a), f"f_a:{a:g}") for a in FA_GRID]
    fixed.append((blaschke_product([0.0]), "identity"))
    fixed += [(blaschke_product([], mix=0.0, const=c), f"constant:{c:g}") for c in (0.0, 0.5, 0.9)]
    out = fixed[:n]
    i = 0
    while len(out) < n:
        deg = int(rng.integers(1, max_degree + 1))
        zeros = [_random_zero(rng) for _ in range(deg)]
        theta = float(2 * math.pi * rng.random())
        if i % 3 == 2:
            mix = float(rng.uniform(0.2, 1.0))
            const = _random_zero(rng, 1.0)
            out.append((blaschke_product(zeros, theta, mix, const), f"convex:{deg}"))
        else:
            out.append((blaschke_product(zeros, theta), f"blaschke:{deg}"))
        i += 1
    harmonic = [harmonic_extremal(b) for b in BETA_GRID]
    harmonic += [coeff_table([0.0, 1.0] + [2.0 * (1.0 - b)] * 8, harmonic=True) for b in (0.1, 0.3)]
    return SampleSet(seed, tuple(s for s, _ in out), tuple(lab for _, lab in out), tuple(harmonic))


@dataclass
class CheckReport:
    name: str
    samples: int = 0
    checks: int = 0
    violations: int = 0
    worst_margin: float = math.inf
    equality_gap: float | None = None
    failures: list[str] = field(default_factory=list)
    warnings: list[str] = field(default_factory=list)

    def record(self, margin: float, tol: float, where: str) -> None:
        self.checks += 1
        self.worst_margin = min(self.worst_margin, margin)
        if margin < -tol:
            self.violations += 1
            if len(self.failures) < 20:
                self.failures.append(f"{where}: margin {margin:.3e}")

    def record_equality(self, gap: float) -> None:
        gap = abs(gap)
        self.equality_gap = gap if self.equality_gap is None else max(self.equality_gap, gap)

    @property
    def passed(self) -> bool:
        tight = self.equality_gap is None or self.equality_gap <= EQUALITY_TOL
        return bool(self.violations == 0 and tight)

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "samples": self.samples,
            "checks": self.checks,
            "violations": self.violations,
            "worst_margin": None if math.isinf(self.worst_margin) else self.worst_margin,
            "equality_gap": self.equality_gap,
            "passed": self.passed,
            "failures": list(self.failures),
            "warnings": list(self.warnings),
        }


def _vacuous(rep: CheckReport, set_: SampleSet) -> bool:
    if len(set_) == 0:
        rep.warnings.append("empty sample set: vacuous pass")
        warnings.warn(f"{rep.name}: empty sample set, check is vacuous", stacklevel=3)
        return True
    return False


def check_schwarz_pick(set_: SampleSet, horizon: int = COEFF_HORIZON) -> CheckReport:
    """``c_k <= 1 - c_0^2`` for ``k = 1..horizon``; ``f_a`` attains it at ``k = 1``."""
    rep = CheckReport("schwarz_pick", len(set_))
    if _vacuous(rep, set_):
        return rep
    ks = np.arange(1, horizon + 1)
    for f, lab in zip(set_.samples, set_.labels):
        bound = 1.0 - f.c0**2
        c = f.values(ks)
        for k, ck in zip(ks, c):
            rep.record(bound - ck, SCHWARZ_PICK_TOL, f"{lab} k={k}")
        if lab.startswith(("f_a", "identity")):
            rep.record_equality(bound - c[0])
    return rep


def p_ratio(p: float, x: float) -> float:
    """``(1 - x^p) / (1 - x^2)`` with its limit ``p/2`` at ``x = 1``."""
    if x == 1.0:
        return p / 2.0
    if x == 0.0:
        return 1.0
    lx = math.log(x)
    return math.expm1(p * lx) / math.expm1(2.0 * lx)


def check_p_inequality(p: float, grid: Iterable[float] | None = None) -> CheckReport:
    """``(1 - x^p)/(1 - x^2) >= p/2`` on ``[0, 1]``; equality everywhere at ``p = 2``."""
    p = float(p)
    if not 0.0 < p <= 2.0:
        raise ValueError(f"p must lie in (0, 2], got {p!r}")
    grid = np.linspace(0.0, 1.0, 1001) if grid is None else grid
    rep = CheckReport(f"p_inequality(p={p:g})")
    for x in grid:
        margin = p_ratio(p, float(x)) - p / 2.0
        rep.record(margin, P_INEQ_TOL, f"x={float(x):g}")
        if p == 2.0:
            rep.record_equality(margin)
    return rep


def refined_lemma_lhs(f: CoeffSeq, N: int, r: float) -> float:
    t = (N - 1) // 2
    total = sum_coeff_weights(f, MONOMIAL, r, N).value
    if sgn(t):
        total += math.fsum((f.values(range(1, t + 1)) ** 2).tolist()) * r**N / (1.0 - r)
    sq = sum_coeff_weights(f, MONOMIAL, r * r, t + 1, 2).value
    return total + (1.0 / (1.0 + f.c0) + r / (1.0 - r)) * sq


def refined_lemma_rhs(f: CoeffSeq, N: int, r: float) -> float:
    return (1.0 - f.c0**2) * r**N / (1.0 - r)


def check_refined_lemma(set_: SampleSet, N: int, r_grid: Sequence[float] = R_GRID) -> CheckReport:
    """The refined majorant tail bound ``<= (1 - c_0^2) r^N / (1 - r)``; equality for ``z`` at ``N = 1``."""
    if N < 1:
        raise ValueError("N must be >= 1")
    if any(not 0.0 <= r <= 0.95 for r in r_grid):
        raise ValueError("r_grid must lie in [0, 0.95]")
    rep = CheckReport(f"refined_lemma(N={N})", len(set_))
    if _vacuous(rep, set_):
        return rep
    for f, lab in zip(set_.samples, set_.labels):
        for r in r_grid:
            margin = refined_lemma_rhs(f, N, r) - refined_lemma_lhs(f, N, r)
            rep.record(margin, LEMMA_TOL, f"{lab} r={r:g}")
            if lab == "identity" and N == 1:
                rep.record_equality(margin)
    return rep


def check_area_bound(set_: SampleSet, r_grid: Sequence[float] = AREA_R_GRID) -> CheckReport:
    """``S_r / pi <= r^2 (1 - c_0^2)^2 / (1 - c_0^2 r^2)^2`` for ``r <= 1/sqrt(2)``; equality for ``f_a``."""
    if any(not 0.0 < r <= 1.0 / math.sqrt(2.0) + 1e-15 for r in r_grid):
        raise ValueError("r_grid must lie in (0, 1/sqrt(2)]")
    rep = CheckReport("area_bound", len(set_))
    if _vacuous(rep, set_):
        return rep
    for f, lab in zip(set_.samples, set_.labels):
        for r in r_grid:
            margin = area_upper_bound(min(f.c0, 1.0), r) - eval_area_ratio(f, r)
            rep.record(margin, AREA_TOL, f"{lab} r={r:g}")
            if lab.startswith("f_a"):
                rep.record_equality(margin)
    return rep


def fbeta_value(beta: float, r: float) -> float:
    """``f_beta(r) = r + 2 (1 - beta) r^2 / (1 - r)``."""
    return r + 2.0 * (1.0 - beta) * r * r / (1.0 - r)


def check_growth_bounds(beta_grid: Sequence[float] = BETA_GRID, r_grid: Sequence[float] = (0.0,) + R_GRID) -> CheckReport:
    """``L(r) <= f_beta(r) <= R(r)``, equality on the upper side, strict on the lower side for ``r > 0``."""
    rep = CheckReport("growth_bounds", len(beta_grid))
    for beta in beta_grid:
        f = harmonic_extremal(beta)
        for r in r_grid:
            lo, hi = growth_bounds_harmonic(beta, r)
            series = sample_value(f, r)
            closed = fbeta_value(beta, r)
            where = f"beta={beta:g} r={r:g}"
            rep.record(series - lo, 0.0, where + " lower")
            rep.record(hi - series, 1e-12 * max(1.0, hi), where + " upper")
            rep.record_equality(hi - closed)
            rep.record_equality((series - closed) / max(1.0, closed))
            if r > 0.0 and not series > lo:
                rep.violations += 1
                rep.failures.append(where + ": lower bound not strict")
    return rep


def check_harmonic_inequality(set_: SampleSet, beta: float = 0.3, N: int = 1, m: int = 1) -> CheckReport:
    """The harmonic functional stays below ``beta`` at the computed radius for harmonic samples in the class."""
    inst = HarmonicInstance(beta, m, N)
    radius = solve_min_root(harmonic_residual(inst)).value
    rep = CheckReport(f"harmonic_inequality(beta={beta:g},N={N},m={m})", 0)
    for f in set_.harmonic:
        # f_beta' lies in the class for beta'>= beta; truncations are taken on trust
        if f.kind == "harmonic_extremal" and f.params["beta"] < beta:
            continue
        rep.samples += 1
        rep.record(beta - eval_harmonic_S(f, inst, radius), 1e-12, f"{f.to_json()}")
    if any(f.kind == "coeff_table" for f in set_.harmonic):
        rep.warnings.append("coefficient-table harmonic samples have unverified class membership")
    return rep


def check_generalized_validity(set_: SampleSet, inst: AnalyticInstance, radius: float, tol: float = 1e-9) -> CheckReport:
    """``C_f(R) <= phi_0(R) + tol`` at a computed radius for every sample."""
    rep = CheckReport(f"generalized_validity({inst.name or 'instance'})", len(set_))
    if _vacuous(rep, set_):
        return rep
    bound = inst.phi.value(0, radius)
    for f, lab in zip(set_.samples, set_.labels):
        rep.record(bound - eval_Cf(f, inst, radius), tol, lab)
    return rep


# ---------------------------------------------------------------------------
# oracle equivalences for the series engine
# ---------------------------------------------------------------------------


def blaschke_oracle(zeros: Sequence[complex], n: int, theta: float = 0.0) -> np.ndarray:
    """Taylor coefficients by multiplying the expansions ``-a + sum (1-|a|^2) conj(a)^(k-1) z^k``."""
    out = np.zeros(n, dtype=complex)
    out[0] = np.exp(1j * theta)
    k = np.arange(1, n)
    for a in zeros:
        a = complex(a)
        factor = np.empty(n, dtype=complex)
        factor[0] = -a
        factor[1:] = (1.0 - abs(a) ** 2) * np.conj(a) ** (k - 1)
        out = np.convolve(out, factor)[:n]
    return out


def check_blaschke_oracle(set_: SampleSet, n: int = COEFF_HORIZON) -> CheckReport:
    rep = CheckReport("blaschke_oracle", 0)
    for f, lab in zip(set_.samples, set_.labels):
        if f.kind != "blaschke_product" or not f.params["zeros"]:
            continue
        rep.samples += 1
        zs, th = f.params["zeros"], f.params["theta"]
        diff = np.max(np.abs(blaschke_coefficients(zs, n, th) - blaschke_oracle(zs, n, th)))
        rep.record(-diff, 1e-12, lab)
    return rep


def check_power_sums(r_grid: Sequence[float] = R_GRID, terms: int = 100_000) -> CheckReport:
    """Closed forms of ``sum_{n>=2} n^alpha r^n`` against direct partial sums."""
    rep = CheckReport("power_sum_oracle")
    n = np.arange(2, terms + 2, dtype=float)
    for alpha in (1, 2, 3):
        for r in r_grid:
            direct = math.fsum((n**alpha * np.power(r, n)).tolist())
            rep.record(-abs(closed_sum_power(alpha, r) - direct), 1e-10 * max(1.0, direct), f"alpha={alpha} r={r:g}")
    return rep


@dataclass
class SuiteReport:
    seed: int
    checks: list[CheckReport]

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def counts(self) -> tuple[int, int]:
        ok = int(sum(c.passed for c in self.checks))
        return ok, len(self.checks) - ok

    def to_json(self) -> dict:
        ok, bad = self.counts
        return {"seed": self.seed, "passed": self.passed, "pass": ok, "fail": bad,
                "checks": [c.to_json() for c in self.checks]}

    def to_text(self) -> str:
        lines = [f"seed {self.seed}: {self.counts[0]} passed, {self.counts[1]} failed"]
        for c in self.checks:
            worst = "n/a" if math.isinf(c.worst_margin) else f"{c.worst_margin:.3e}"
            eq = "" if c.equality_gap is None else f" equality_gap={c.equality_gap:.1e}"
            lines.append(
                f"  {'PASS' if c.passed else 'FAIL'} {c.name}: {c.checks} checks, "
                f"{c.violations} violations, worst margin {worst}{eq}"
            )
            lines += [f"      {w}" for w in c.warnings]
            lines += [f"      {m}" for m in c.failures]
        return "\n".join(lines)


def run_suite(seed: int = 42, n: int = 100, sample_set: SampleSet | None = None) -> SuiteReport:
    set_ = make_sample_set(seed, n) if sample_set is None else sample_set
    checks = [check_schwarz_pick(set_)]
    checks += [check_p_inequality(p) for p in (0.25, 0.5, 1.0, 1.5, 2.0)]
    checks += [check_refined_lemma(set_, N) for N in range(1, 6)]
    checks += [check_area_bound(set_), check_growth_bounds(), check_harmonic_inequality(set_)]
    checks += [check_blaschke_oracle(set_), check_power_sums()]
    return SuiteReport(set_.seed, checks)


def dumps(report: SuiteReport) -> str:
    return json.dumps(report.to_json(), indent=2)
