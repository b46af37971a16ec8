"""Bohr-type functionals for analytic self-maps of the disk and harmonic samples."""
from __future__ import annotations

import math
from dataclasses import dataclass, field

from .errors import ConfigurationError, DomainError
from .seqcore import (
    DEFAULT_ABS_TOL,
    CoeffSeq,
    WeightSeq,
    check_radius,
    square_weighted,
    sum_coeff_weights,
)

MONOMIAL = WeightSeq("monomial")
ZERO = WeightSeq("zero", start=1)


def sgn(t: int) -> int:
    return 1 if t > 0 else 0


@dataclass(frozen=True)
class AnalyticInstance:
    """Exponent ``p`` on ``|a_0|`` plus the weights ``phi_k`` (k >= 0) and ``Phi_k`` (k >= 1)."""

    p: float = 1.0
    phi: WeightSeq = MONOMIAL
    Phi: WeightSeq = ZERO
    name: str = ""

    def __post_init__(self):
        p = float(self.p)
        if not 0.0 < p <= 2.0:
            raise ConfigurationError(f"p must lie in (0, 2], got {p!r}")
        object.__setattr__(self, "p", p)
        if self.phi.start != 0:
            raise ConfigurationError("phi must be defined from index 0")
        if self.Phi.start > 1:
            raise ConfigurationError("Phi must be defined from index 1")

    @property
    def has_square_term(self) -> bool:
        return self.Phi.kind != "zero"


@dataclass(frozen=True)
class HarmonicInstance:
    """Parameters of the harmonic functional ``S^f_{mu, lambda, m, N}``."""

    beta: float | None = None
    m: int = 1
    N: int = 1
    mu: float = 1.0
    lam: float = 1.0
    t: int = field(init=False)

    def __post_init__(self):
        if int(self.m) != self.m or self.m < 1:
            raise ConfigurationError("m must be a positive integer")
        if int(self.N) != self.N or self.N < 1:
            raise ConfigurationError("N must be a positive integer")
        if self.beta is not None and not 0.0 <= float(self.beta) < 1.0:
            raise ConfigurationError(f"beta must lie in [0, 1), got {self.beta!r}")
        object.__setattr__(self, "m", int(self.m))
        object.__setattr__(self, "N", int(self.N))
        object.__setattr__(self, "t", (self.N - 1) // 2)


def _phi0(inst: AnalyticInstance, r: float) -> float:
    return inst.phi.value(0, r)


def eval_Cf(coeffs: CoeffSeq, inst: AnalyticInstance, r: float, abs_tol: float = DEFAULT_ABS_TOL) -> float:
    """``|a_0|^p phi_0 + sum |a_k| phi_k + sum Phi_k |a_k|^2 phi_k^2`` at radius ``r``."""
    r = check_radius(r)
    lead = coeffs.c0**inst.p * _phi0(inst, r)
    linear = sum_coeff_weights(coeffs, inst.phi, r, 1, 1, abs_tol / 2)
    total = lead + linear.value
    if inst.has_square_term:
        sq = sum_coeff_weights(coeffs, square_weighted(inst.phi, inst.Phi), r, 1, 2, abs_tol / 2)
        total += sq.value
    return total


def eval_area_ratio(coeffs: CoeffSeq, r: float, abs_tol: float = DEFAULT_ABS_TOL) -> float:
    """Normalized area ``S_r / pi = sum_{n>=1} n |a_n|^2 r^{2n}``."""
    r = check_radius(r)
    # n (r^2)^n is the power weight with alpha = 1 evaluated at r^2
    w = WeightSeq("power_weighted", {"alpha": 1})
    return sum_coeff_weights(coeffs, w, r * r, 1, 2, abs_tol).value


def area_upper_bound(a0: float, r: float) -> float:
    """Area bound ``r^2 (1 - a0^2)^2 / (1 - a0^2 r^2)^2``; sharp for ``r <= 1/sqrt(2)``."""
    r = check_radius(r)
    a0 = float(a0)
    if not 0.0 <= a0 <= 1.0:
        raise DomainError(f"|a_0| must lie in [0, 1], got {a0!r}")
    s = 1.0 - a0 * a0
    return r * r * s * s / (1.0 - a0 * a0 * r * r) ** 2


def growth_bounds_harmonic(beta: float, r: float) -> tuple[float, float]:
    """Lower and upper growth bounds ``L(r) <= |f(z)| <= R(r)`` on ``|z| = r``.

    ``r = 1`` is allowed; the upper bound is then infinite.
    """
    beta, r = float(beta), float(r)
    if not 0.0 <= beta < 1.0:
        raise DomainError(f"beta must lie in [0, 1), got {beta!r}")
    if not 0.0 <= r <= 1.0:
        raise DomainError(f"r must lie in [0, 1], got {r!r}")
    lower = beta * r + (1.0 - beta) * r * (1.0 - r) / (1.0 + r)
    upper = math.inf if r == 1.0 else beta * r + (1.0 - beta) * r * (1.0 + r) / (1.0 - r)
    return lower, upper


def sample_value(coeffs: CoeffSeq, r: float, abs_tol: float = DEFAULT_ABS_TOL) -> float:
    """``sum_{n>=1} c_n r^n``: the value ``f(r)`` of a harmonic sample on the positive axis.

    This is exact for samples with non-negative real coefficients (such as
    ``f_beta``) and an upper bound for ``|f(r)|`` otherwise.
    """
    return sum_coeff_weights(coeffs, MONOMIAL, r, 1, 1, abs_tol).value


def eval_harmonic_S(
    coeffs: CoeffSeq,
    inst: HarmonicInstance,
    r: float,
    abs_tol: float = DEFAULT_ABS_TOL,
    mode: str = "sample",
) -> float:
    """The harmonic functional ``S^f_{mu, lambda, m, N}(r)``.

    ``mode="sample"`` uses ``|f(r)|^m`` of the sample itself;
    ``mode="worst-case"`` substitutes the class growth bound ``R(r)^m``.
    """
    r = check_radius(r)
    if mode == "sample":
        lead = sample_value(coeffs, r, abs_tol / 4) ** inst.m
    elif mode in ("worst-case", "worst_case"):
        if inst.beta is None:
            raise ConfigurationError("worst-case mode needs beta")
        lead = growth_bounds_harmonic(inst.beta, r)[1] ** inst.m
    else:
        raise ConfigurationError(f"unknown mode {mode!r}")
    majorant = sum_coeff_weights(coeffs, MONOMIAL, r, inst.N, 1, abs_tol / 4).value
    total = lead + majorant
    if inst.mu and sgn(inst.t):
        head_sq = math.fsum((coeffs.values(range(1, inst.t + 1)) ** 2).tolist())
        total += inst.mu * head_sq * r**inst.N / (1.0 - r)
    if inst.lam:
        sq = sum_coeff_weights(coeffs, MONOMIAL, r * r, inst.t + 1, 2, abs_tol / 4).value
        total += inst.lam * (1.0 + r / (1.0 - r)) * sq
    return total


def eval_Fbeta_lhs(coeffs: CoeffSeq, phi: WeightSeq, r: float, abs_tol: float = DEFAULT_ABS_TOL) -> float:
    """``r phi_1(r) + sum_{n>=2} c_n phi_n(r)``."""
    r = check_radius(r)
    if phi.start > 1:
        raise ConfigurationError("phi must be defined from index 1")
    return r * phi.value(1, r) + sum_coeff_weights(coeffs, phi, r, 2, 1, abs_tol).value


def eval_Af(coeffs: CoeffSeq, phi: WeightSeq, p: float, r: float, abs_tol: float = DEFAULT_ABS_TOL) -> float:
    """Two-term functional ``|a_0|^p phi_0 + sum |a_k| phi_k`` (no squared term)."""
    r = check_radius(r)
    return coeffs.c0**p * phi.value(0, r) + sum_coeff_weights(coeffs, phi, r, 1, 1, abs_tol).value


# ---------------------------------------------------------------------------
# named instances from the applications of the generalized inequality
# ---------------------------------------------------------------------------


def refined_weight(a: float, q: int = 1) -> WeightSeq:
    return WeightSeq("refined_weight", {"a": a, "q": q}, start=1)


def analytic_instance(name: str, a: float = 0.0, p: float | None = None, q: int = 1) -> AnalyticInstance:
    """Build one of the named weight configurations.

    ``a`` is ``|f(0)|`` for the refined variants, whose ``Phi`` depends on it.
    """
    key = name.strip()
    mono = MONOMIAL
    table = {
        "classical": lambda: AnalyticInstance(1.0, mono, ZERO, key),
        "p-exponent": lambda: AnalyticInstance(1.0 if p is None else p, mono, ZERO, key),
        "refined-I(i)(a)": lambda: AnalyticInstance(1.0, mono, refined_weight(a), key),
        "refined-I(i)(b)": lambda: AnalyticInstance(2.0, mono, refined_weight(a), key),
        "lacunary-I(iv)(a)": lambda: AnalyticInstance(
            1.0, WeightSeq("lacunary", {"q": q}), refined_weight(a, q), key
        ),
        "lacunary-I(iv)(b)": lambda: AnalyticInstance(
            2.0, WeightSeq("lacunary", {"q": q}), refined_weight(a, q), key
        ),
        "improved-II(i)(a)": lambda: AnalyticInstance(1.0, mono, WeightSeq("linear_k", {"c": 16 / 9}, 1), key),
        "improved-II(i)(b)": lambda: AnalyticInstance(2.0, mono, WeightSeq("linear_k", {"c": 9 / 8}, 1), key),
        "improved-II(ii)": lambda: AnalyticInstance(1.0, mono, WeightSeq("inverse_monomial", {"c": 0.5}, 1), key),
        "improved-II(iii)(a)": lambda: AnalyticInstance(
            1.0, mono, WeightSeq("sum", {"terms": [refined_weight(a), WeightSeq("linear_k", {"c": 8 / 9}, 1)]}, 1), key
        ),
        "improved-II(iii)(b)": lambda: AnalyticInstance(
            2.0, mono, WeightSeq("sum", {"terms": [refined_weight(a), WeightSeq("linear_k", {"c": 9 / 8}, 1)]}, 1), key
        ),
    }
    if key not in table:
        raise ConfigurationError(f"unknown analytic instance {name!r}; choose from {sorted(table)}")
    return table[key]()


ANALYTIC_INSTANCE_NAMES = (
    "classical",
    "p-exponent",
    "refined-I(i)(a)",
    "refined-I(i)(b)",
    "lacunary-I(iv)(a)",
    "lacunary-I(iv)(b)",
    "improved-II(i)(a)",
    "improved-II(i)(b)",
    "improved-II(ii)",
    "improved-II(iii)(a)",
    "improved-II(iii)(b)",
)

# instances whose Phi depends on |f(0)|; evaluation plugs in the sample's own c_0
SELF_REFERENTIAL = {
    "refined-I(i)(a)",
    "refined-I(i)(b)",
    "lacunary-I(iv)(a)",
    "lacunary-I(iv)(b)",
    "improved-II(iii)(a)",
    "improved-II(iii)(b)",
}


def eval_named(coeffs: CoeffSeq, name: str, r: float, p: float | None = None, q: int = 1, abs_tol: float = DEFAULT_ABS_TOL) -> float:
    """Evaluate a named functional on a sample, using ``a = c_0`` where ``Phi`` needs it."""
    a = coeffs.c0 if name in SELF_REFERENTIAL else 0.0
    return eval_Cf(coeffs, analytic_instance(name, a=a, p=p, q=q), r, abs_tol)
