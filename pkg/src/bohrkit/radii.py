"""Residual equations for Bohr-type radii and their minimal roots in (0, 1).

Every residual follows the same sign convention: negative just above
``r = 0`` and positive beyond the radius.  :func:`solve_min_root` scans a
uniform grid for the first sign change and then bisects.
"""
from __future__ import annotations

import json
import math
import warnings
from dataclasses import dataclass, field
from importlib import resources
from typing import Any, Callable, Mapping

import numpy as np
from scipy.optimize import bisect

from .errors import ConfigurationError, DegenerateError, DomainError, NoRootError, PreconditionError
from .functionals import AnalyticInstance, HarmonicInstance, sgn
from .seqcore import (
    DEFAULT_ABS_TOL,
    WeightSeq,
    closed_sum_power,
    paper_printed_sum,
    square_weighted,
    sum_weights,
)

GRID_STEP = 1e-3
ETA = 1e-6
ROOT_TOL = 1e-13

MODES = ("verified-series", "paper-printed")


def canon_mode(mode: str) -> str:
    m = str(mode).strip().lower().replace("_", "-")
    if m not in MODES:
        raise ConfigurationError(f"mode must be one of {MODES}, got {mode!r}")
    return m


@dataclass(frozen=True)
class ResidualSpec:
    """A named residual ``r -> value`` encoding one radius equation."""

    name: str
    func: Callable[[float], float]
    params: Mapping[str, Any] = field(default_factory=dict)
    mode: str = "verified-series"

    def __call__(self, r: float) -> float:
        return float(self.func(r))


@dataclass(frozen=True)
class RadiusResult:
    value: float
    bracket: tuple[float, float]
    residual_at_root: float
    iterations: int
    mode: str
    name: str = ""

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "value": self.value,
            "bracket": list(self.bracket),
            "residual": self.residual_at_root,
            "iterations": self.iterations,
            "mode": self.mode,
        }


# ---------------------------------------------------------------------------
# root search
# ---------------------------------------------------------------------------


def solve_min_root(
    res: ResidualSpec,
    root_tol: float = ROOT_TOL,
    grid_step: float = GRID_STEP,
    eta: float = ETA,
) -> RadiusResult:
    """Smallest root of ``res`` in ``(0, 1 - eta]``: first sign change on the grid, then bisection."""
    r0 = res(0.0)
    if r0 == 0.0:
        raise DegenerateError(f"{res.name}: residual vanishes at r = 0; the radius is 0")
    if not r0 < 0.0:
        raise NoRootError(f"{res.name}: residual is positive at r = 0")
    grid = np.append(np.arange(grid_step, 1.0 - eta, grid_step), 1.0 - eta)
    lo = 0.0
    for hi in grid:
        hi = float(hi)
        v = res(hi)
        if math.isnan(v):
            raise NoRootError(f"{res.name}: residual is NaN at r = {hi}")
        if v >= 0.0:
            root, info = bisect(res, lo, hi, xtol=root_tol, full_output=True)
            return RadiusResult(float(root), (lo, hi), res(root), info.iterations, res.mode, res.name)
        lo = hi
    raise NoRootError(f"{res.name}: no sign change on [0, {1.0 - eta}]")


# ---------------------------------------------------------------------------
# generalized analytic inequality
# ---------------------------------------------------------------------------


def residual_generalized(inst: AnalyticInstance, r: float, abs_tol: float = DEFAULT_ABS_TOL) -> float:
    """``(2/p) sum_{k>=1} (phi_k + Phi_k phi_k^2) - phi_0``."""
    total = sum_weights(inst.phi, r, 1, abs_tol / 2).value
    if inst.has_square_term:
        total += sum_weights(square_weighted(inst.phi, inst.Phi), r, 1, abs_tol / 2).value
    return 2.0 / inst.p * total - inst.phi.value(0, r)


def generalized_residual(inst: AnalyticInstance, abs_tol: float = DEFAULT_ABS_TOL) -> ResidualSpec:
    return ResidualSpec(
        "generalized" + (f":{inst.name}" if inst.name else ""),
        lambda r: residual_generalized(inst, r, abs_tol),
        {"p": inst.p, "phi": inst.phi.kind, "Phi": inst.Phi.kind},
    )


# ---------------------------------------------------------------------------
# harmonic class
# ---------------------------------------------------------------------------


def _check_harmonic_beta(beta, allow_extended: bool) -> float:
    if beta is None:
        raise ConfigurationError("harmonic residual needs beta")
    beta = float(beta)
    if 0.0 < beta < 0.5:
        return beta
    if allow_extended and 0.0 < beta < 1.0:
        warnings.warn(
            f"beta = {beta} lies outside (0, 1/2), where the harmonic radius is established",
            stacklevel=3,
        )
        return beta
    if beta == 0.0:
        raise DegenerateError("beta = 0 gives residual 0 at r = 0; the radius is 0")
    raise DomainError(f"beta must lie in (0, 1/2), got {beta!r}")


def residual_harmonic(inst: HarmonicInstance, r: float, allow_extended: bool = False) -> float:
    """Residual of the harmonic radius equation; equals ``-beta`` at ``r = 0``."""
    beta = _check_harmonic_beta(inst.beta, allow_extended)
    r = float(r)
    if not 0.0 <= r < 1.0:
        raise DomainError(f"radius must lie in [0, 1), got {r!r}")
    return _residual_harmonic(inst, beta, r)


def _residual_harmonic(inst: HarmonicInstance, beta: float, r: float) -> float:
    one_m = 1.0 - r
    lead = (beta * r + (1.0 - beta) * r * (1.0 + r) / one_m) ** inst.m
    majorant = 2.0 * (1.0 - beta) * r**inst.N / one_m
    head = 4.0 * inst.mu * sgn(inst.t) * (1.0 - beta) ** 2 * r**inst.N * inst.t / one_m
    tail = (1.0 + r / one_m) * 4.0 * inst.lam * (1.0 - beta) ** 2 * r ** (2 * inst.t + 2) / (1.0 - r * r)
    return lead + majorant + head + tail - beta


def harmonic_residual(inst: HarmonicInstance, allow_extended: bool = False) -> ResidualSpec:
    beta = _check_harmonic_beta(inst.beta, allow_extended)
    return ResidualSpec(
        f"harmonic(m={inst.m},N={inst.N},t={inst.t})",
        lambda r: _residual_harmonic(inst, beta, float(r)),
        {"beta": inst.beta, "m": inst.m, "N": inst.N, "mu": inst.mu, "lambda": inst.lam},
    )


# ---------------------------------------------------------------------------
# F_beta: the generalized harmonic majorant
# ---------------------------------------------------------------------------


def _fbeta_series(phi: WeightSeq, r: float, mode: str, abs_tol: float) -> float:
    if mode == "paper-printed" and phi.kind == "power_weighted" and phi.params["alpha"] in (1, 2, 3):
        total = paper_printed_sum(int(phi.params["alpha"]), r)
        for k, v in phi.head.items():
            if k >= 2:
                total += v - float(phi._base(np.array([k]), r)[0])
        return total
    return sum_weights(phi, r, 2, abs_tol).value


def check_fbeta_condition(beta: float, phi: WeightSeq) -> None:
    """Raise unless ``sum_{n>=2} phi_n(0) < beta / (2 (1 - beta))``."""
    beta = float(beta)
    if beta == 0.0:
        raise DegenerateError("beta = 0: F_beta(0) = 0, so the radius collapses to 0")
    if not 0.0 < beta < 1.0:
        raise DomainError(f"beta must lie in (0, 1), got {beta!r}")
    s0 = sum_weights(phi, 0.0, 2).value
    limit = beta / (2.0 * (1.0 - beta))
    if not s0 < limit:
        raise PreconditionError(
            f"condition sum_(n>=2) phi_n(0) < beta/(2(1-beta)) fails: {s0:.6g} >= {limit:.6g}"
        )


def residual_fbeta(
    beta: float, phi: WeightSeq, r: float, mode: str = "verified-series", abs_tol: float = DEFAULT_ABS_TOL
) -> float:
    """``r phi_1(r) + 2 (1 - beta) sum_{n>=2} phi_n(r) - beta``."""
    mode = canon_mode(mode)
    check_fbeta_condition(beta, phi)
    return _residual_fbeta_unchecked(float(beta), phi, float(r), mode, abs_tol)


def _residual_fbeta_unchecked(beta, phi, r, mode, abs_tol):
    return r * phi.value(1, r) + 2.0 * (1.0 - beta) * _fbeta_series(phi, r, mode, abs_tol) - beta


def fbeta_residual(
    beta: float, phi: WeightSeq, mode: str = "verified-series", abs_tol: float = DEFAULT_ABS_TOL
) -> ResidualSpec:
    mode = canon_mode(mode)
    check_fbeta_condition(beta, phi)
    beta = float(beta)
    return ResidualSpec(
        f"fbeta({phi.kind})",
        lambda r: _residual_fbeta_unchecked(beta, phi, r, mode, abs_tol),
        {"beta": beta, "phi": phi.kind},
        mode,
    )


# ---------------------------------------------------------------------------
# earlier radii and published constants
# ---------------------------------------------------------------------------


def r_a0(a0: float) -> float:
    a0 = float(a0)
    return 2.0 / (3.0 + a0 + math.sqrt(5.0) * (1.0 + a0))


def r_f_closed(beta: float) -> float:
    """Closed-form root of ``(1 - 2 beta) r^2 + (1 + beta) r - beta = 0``."""
    beta = float(beta)
    return (-1.0 - beta + math.sqrt(1.0 + 6.0 * beta - 7.0 * beta * beta)) / (2.0 * (1.0 - 2.0 * beta))


def _need(params: Mapping, key: str, lo: float, hi: float, closed_hi: bool = False, integer=False):
    if key not in params:
        raise ConfigurationError(f"missing parameter {key!r}")
    v = params[key]
    if integer:
        if int(v) != v or int(v) < lo:
            raise DomainError(f"{key} must be an integer >= {lo:g}, got {v!r}")
        return int(v)
    v = float(v)
    ok = lo <= v <= hi if closed_hi else lo <= v < hi
    if not ok:
        raise DomainError(f"{key} = {v!r} is outside its domain")
    return v


def prior_residual(name: str, **params) -> ResidualSpec:
    """Residuals of the earlier radius equations (Bohr-Rogosinski, cubic, quadratic)."""
    if name == "R_N":
        N = _need(params, "N", 1, math.inf, integer=True)
        f = lambda r: 2.0 * (1.0 + r) * r**N - (1.0 - r) ** 2  # noqa: E731
    elif name in ("R_prime_N", "R'_N"):
        N = _need(params, "N", 1, math.inf, integer=True)
        f = lambda r: (1.0 + r) * r**N - (1.0 - r) ** 2  # noqa: E731
    elif name in ("r_prime_a0", "r'_a0"):
        a = _need(params, "a0", 0.0, 1.0)
        f = lambda r: -((1.0 - a**3) * r**3 - (1.0 + 2.0 * a) * r**2 - 2.0 * r + 1.0)  # noqa: E731
    elif name == "r_f":
        beta = _need(params, "beta", 0.0, 0.5)
        if beta == 0.0:
            raise DegenerateError("beta = 0: the radius r_f collapses to 0")
        f = lambda r: (1.0 - 2.0 * beta) * r * r + (1.0 + beta) * r - beta  # noqa: E731
    else:
        raise ConfigurationError(f"{name!r} has no residual equation")
    return ResidualSpec(name, f, dict(params))


_PUBLISHED: dict[str, tuple[Callable[..., float], str]] = {
    "classical": (lambda **k: 1.0 / 3.0, "Bohr radius 1/3"),
    "p-exponent": (lambda p=1.0, **k: p / (p + 2.0), "p/(p+2) with |a_0|^p"),
    "bohr-rogosinski": (lambda **k: math.sqrt(5.0) - 2.0, "sqrt(5) - 2 with |f(z)|"),
    "refined-I(i)(a)": (lambda a=0.0, **k: 1.0 / (2.0 + a), "1/(2+a)"),
    "refined-I(i)(b)": (lambda **k: 0.5, "1/2"),
    "refined-I(ii)": (lambda **k: 0.6, "3/5"),
    "refined-I(iii)": (lambda **k: (5.0 - math.sqrt(17.0)) / 2.0, "(5 - sqrt(17))/2"),
    "lacunary-I(iv)(a)": (lambda a=0.0, q=1, **k: (2.0 + a) ** (-1.0 / q), "(2+a)^(-1/q)"),
    "lacunary-I(iv)(b)": (lambda q=1, **k: 2.0 ** (-1.0 / q), "2^(-1/q)"),
    "improved-II(i)(a)": (lambda **k: 1.0 / 3.0, "1/3 with 16/9 S_r/pi"),
    "improved-II(i)(b)": (lambda **k: 0.5, "1/2 with 9/8 S_r/pi"),
    "improved-II(ii)": (lambda **k: 1.0 / 3.0, "1/3 with |a_k|^2/2"),
    "improved-II(iii)(a)": (lambda **k: 1.0 / 3.0, "1/3 with refined term and 8/9 S_r/pi"),
    "improved-II(iii)(b)": (lambda a=0.0, **k: 1.0 / (3.0 - a), "1/(3-a) with refined term and 9/8 S_r/pi"),
    "r_a0": (lambda a0=0.0, **k: r_a0(a0), "2/(3+|a0|+sqrt(5)(1+|a0|))"),
}

PUBLISHED_RADII = tuple(_PUBLISHED)
NUMERIC_PRIOR = ("R_N", "R_prime_N", "r_prime_a0", "r_f")


def published_radius(name: str, **params) -> float:
    if name not in _PUBLISHED:
        raise ConfigurationError(f"unknown published radius {name!r}")
    return float(_PUBLISHED[name][0](**params))


def prior_radius(name: str, root_tol: float = ROOT_TOL, **params) -> float:
    """Closed-form radius, or the root of its low-degree equation."""
    if name in _PUBLISHED:
        return published_radius(name, **params)
    return solve_min_root(prior_residual(name, **params), root_tol).value


# ---------------------------------------------------------------------------
# Table 1
# ---------------------------------------------------------------------------

TABLE1_ROWS = ("R1", "R2", "R3", "R4")
TABLE1_BETAS = tuple(round(0.1 * i, 1) for i in range(1, 10))


def table1_weights() -> dict[str, WeightSeq]:
    """The four weight choices, all with ``phi_1 = 1``."""
    return {
        "R1": WeightSeq("shifted", head={1: 1.0}),
        "R2": WeightSeq("power_weighted", {"alpha": 1}, head={1: 1.0}),
        "R3": WeightSeq("power_weighted", {"alpha": 2}, head={1: 1.0}),
        "R4": WeightSeq("power_weighted", {"alpha": 3}, head={1: 1.0}),
    }


def _table1_sum(row: str, r: float, mode: str) -> float:
    if row == "R1":
        return r * r * (3.0 - 2.0 * r) / (1.0 - r) ** 2
    alpha = int(row[1]) - 1
    return paper_printed_sum(alpha, r) if mode == "paper-printed" else closed_sum_power(alpha, r)


def table1_residual(row: str, beta: float, mode: str = "paper-printed") -> ResidualSpec:
    """Closed-form residual ``r + 2 (1 - beta) S(r) - beta`` of one Table 1 row."""
    mode = canon_mode(mode)
    if row not in TABLE1_ROWS:
        raise ConfigurationError(f"row must be one of {TABLE1_ROWS}")
    check_fbeta_condition(beta, table1_weights()[row])
    beta = float(beta)
    return ResidualSpec(
        f"{row}({beta:g})",
        lambda r: r + 2.0 * (1.0 - beta) * _table1_sum(row, r, mode) - beta,
        {"row": row, "beta": beta},
        mode,
    )


def load_table1_reference() -> dict:
    with resources.files("bohrkit").joinpath("data/table1.json").open() as fh:
        return json.load(fh)


@dataclass(frozen=True)
class Table1Result:
    mode: str
    rows: tuple[str, ...]
    betas: tuple[float, ...]
    computed: np.ndarray
    reference: np.ndarray
    reference_version: str

    @property
    def delta(self) -> np.ndarray:
        return self.computed - self.reference

    @property
    def max_abs_delta(self) -> float:
        return float(np.max(np.abs(self.delta)))

    def within(self, tol: float) -> np.ndarray:
        return np.abs(self.delta) <= tol

    def records(self) -> list[dict]:
        out = []
        for i, row in enumerate(self.rows):
            for j, beta in enumerate(self.betas):
                out.append(
                    {
                        "row": row,
                        "beta": beta,
                        "computed": float(self.computed[i, j]),
                        "paper": float(self.reference[i, j]),
                        "delta": float(self.delta[i, j]),
                        "mode": self.mode,
                    }
                )
        return out


def table1(mode: str = "paper-printed", root_tol: float = ROOT_TOL) -> Table1Result:
    """Radii ``R_1 .. R_4`` for ``beta = 0.1 .. 0.9`` next to the published values."""
    mode = canon_mode(mode)
    ref = load_table1_reference()
    computed = np.empty((len(TABLE1_ROWS), len(TABLE1_BETAS)))
    for i, row in enumerate(TABLE1_ROWS):
        for j, beta in enumerate(TABLE1_BETAS):
            computed[i, j] = solve_min_root(table1_residual(row, beta, mode), root_tol).value
    reference = np.array([ref["rows"][row] for row in TABLE1_ROWS], dtype=float)
    return Table1Result(mode, TABLE1_ROWS, TABLE1_BETAS, computed, reference, str(ref["version"]))
