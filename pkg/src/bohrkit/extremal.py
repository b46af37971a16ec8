"""Extremal families and numerical sharpness probes.

A probe evaluates a functional on an extremal family just below and just
above a claimed radius.  The radius is confirmed as sharp when the bound holds
below it for every family parameter and fails above it for at least one.
"""
from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass, field
from typing import Callable, Sequence

import numpy as np

from .errors import ConfigurationError, DomainError
from .functionals import (
    ANALYTIC_INSTANCE_NAMES,
    SELF_REFERENTIAL,
    AnalyticInstance,
    HarmonicInstance,
    analytic_instance,
    eval_Cf,
    eval_Fbeta_lhs,
    eval_harmonic_S,
    growth_bounds_harmonic,
)
from .radii import (
    canon_mode,
    check_fbeta_condition,
    fbeta_residual,
    generalized_residual,
    harmonic_residual,
    published_radius,
    solve_min_root,
    table1_weights,
)
from .functionals import MONOMIAL
from .seqcore import CoeffSeq, WeightSeq, blaschke_point, coeff_table, harmonic_extremal, sum_coeff_weights

DEFAULT_EPSILON = 1e-3
DEFAULT_A_GRID = (0.9, 0.99, 0.999)
DEFAULT_TOL = 1e-12

FAMILIES = ("f_a", "f_beta", "table")
VERDICTS = ("sharp-confirmed", "inconclusive", "violated")


def fa_modulus(a: float, k: int) -> float:
    """``|k|``-th Taylor coefficient modulus of the Blaschke factor ``f_a``."""
    a = float(a)
    if not 0.0 <= a < 1.0:
        raise DomainError(f"a must lie in [0, 1), got {a!r}")
    if k < 0:
        raise DomainError("k must be >= 0")
    return a if k == 0 else (1.0 - a * a) * a ** (k - 1)


def refined_functional_closed(a: float, r: float) -> float:
    """Refined Bohr functional of ``f_a`` in closed form."""
    a, r = float(a), float(r)
    if not 0.0 <= a < 1.0:
        raise DomainError(f"a must lie in [0, 1), got {a!r}")
    if not 0.0 <= r < 1.0:
        raise DomainError(f"r must lie in [0, 1), got {r!r}")
    s = 1.0 - a * a
    return a + s * r / (1.0 - a * r) + (1.0 / (1.0 + a) + r / (1.0 - r)) * s * s * r * r / (1.0 - a * a * r * r)


def harmonic_distance(beta: float) -> float:
    """``d(f_beta(0), boundary of f_beta(D))``, which equals ``L(1) = beta``."""
    beta = float(beta)
    if not 0.0 <= beta < 1.0:
        raise DomainError(f"beta must lie in [0, 1), got {beta!r}")
    return growth_bounds_harmonic(beta, 1.0)[0]


# ---------------------------------------------------------------------------
# probe instances
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ProbeInstance:
    """A functional, its bound and the family it is probed on.

    ``functional(sample, r)`` and ``bound(param, r)`` take the family member
    built from a grid parameter; for ``family="table"`` the parameter is an
    index into ``tables``.
    """

    name: str
    kind: str  # "analytic" or "harmonic"
    family: str
    functional: Callable[[CoeffSeq, float], float]
    bound: Callable[[float, float], float]
    radius: float | None = None
    grid: tuple = ()
    tables: tuple = ()

    def __post_init__(self):
        if self.kind not in ("analytic", "harmonic"):
            raise ConfigurationError(f"kind must be analytic or harmonic, got {self.kind!r}")
        if self.family not in FAMILIES:
            raise ConfigurationError(f"family must be one of {FAMILIES}, got {self.family!r}")
        allowed = {"analytic": ("f_a", "table"), "harmonic": ("f_beta", "table")}[self.kind]
        if self.family not in allowed:
            raise ConfigurationError(
                f"{self.name}: {self.kind} functional cannot be probed on family {self.family}"
            )
        for t in self.tables:
            if t.harmonic != (self.kind == "harmonic"):
                raise ConfigurationError(f"{self.name}: table sample does not match a {self.kind} functional")

    def member(self, param) -> CoeffSeq:
        if self.family == "f_a":
            return blaschke_point(param)
        if self.family == "f_beta":
            return harmonic_extremal(param)
        return self.tables[int(param)]


@dataclass(frozen=True)
class ProbeRow:
    param: float
    value_below: float
    value_above: float
    bound_below: float
    bound_above: float

    @property
    def margin_below(self) -> float:
        return self.value_below - self.bound_below

    @property
    def margin_above(self) -> float:
        return self.value_above - self.bound_above


@dataclass(frozen=True)
class SharpnessReport:
    """Outcome of one probe.

    ``below`` and ``above`` are the largest margins ``value - bound`` over the
    grid at ``radius - epsilon`` and ``radius + epsilon``.
    """

    instance: str
    radius: float
    epsilon: float
    param_grid: tuple
    below: float
    above: float
    verdict: str
    rows: tuple[ProbeRow, ...] = field(default=())
    note: str = ""

    def to_json(self) -> dict:
        return {
            "instance": self.instance,
            "radius": self.radius,
            "epsilon": self.epsilon,
            "param_grid": list(self.param_grid),
            "below": self.below,
            "above": self.above,
            "verdict": self.verdict,
            "note": self.note,
            "rows": [
                {
                    "param": row.param,
                    "value_below": row.value_below,
                    "value_above": row.value_above,
                    "bound_below": row.bound_below,
                    "bound_above": row.bound_above,
                }
                for row in self.rows
            ],
        }

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["instance", "param", "r_below", "value_below", "bound_below", "r_above", "value_above", "bound_above"])
        for row in self.rows:
            w.writerow([
                self.instance,
                repr(row.param),
                repr(self.radius - self.epsilon),
                repr(row.value_below),
                repr(row.bound_below),
                repr(self.radius + self.epsilon),
                repr(row.value_above),
                repr(row.bound_above),
            ])
        return buf.getvalue()


def sharpness_probe(
    instance: ProbeInstance,
    radius: float | None = None,
    epsilon: float = DEFAULT_EPSILON,
    grid: Sequence | None = None,
    tol: float = DEFAULT_TOL,
) -> SharpnessReport:
    """Evaluate ``instance`` on its family at ``radius -/+ epsilon``."""
    radius = instance.radius if radius is None else float(radius)
    if radius is None:
        raise ConfigurationError(f"{instance.name}: no radius given")
    if not 0.0 < radius < 1.0:
        raise DomainError(f"radius must lie in (0, 1), got {radius!r}")
    if not 0.0 < epsilon < radius or radius + epsilon >= 1.0:
        raise DomainError(f"epsilon {epsilon!r} must keep radius +/- epsilon inside (0, 1)")
    grid = tuple(instance.grid if grid is None else grid)
    if instance.family == "table":
        for g in grid:
            if not (float(g).is_integer() and 0 <= int(g) < len(instance.tables)):
                raise ConfigurationError(f"{instance.name}: table index {g!r} out of range")
    lo, hi = radius - epsilon, radius + epsilon
    rows = []
    for param in grid:
        sample = instance.member(param)
        rows.append(ProbeRow(
            param,
            instance.functional(sample, lo),
            instance.functional(sample, hi),
            instance.bound(param, lo),
            instance.bound(param, hi),
        ))
    if not rows:
        return SharpnessReport(instance.name, radius, epsilon, grid, math.nan, math.nan, "inconclusive", (),
                               "no family members to probe")
    below = max(r.margin_below for r in rows)
    above = max(r.margin_above for r in rows)
    if below > tol:
        verdict, note = "violated", "bound fails below the radius"
    elif above > 0.0:
        verdict, note = "sharp-confirmed", ""
    else:
        verdict, note = "inconclusive", "no family member exceeds the bound above the radius"
    return SharpnessReport(instance.name, radius, epsilon, grid, below, above, verdict, tuple(rows), note)


def is_increasing(instance: ProbeInstance, param, r_grid: Sequence[float]) -> bool:
    """Strict monotonicity of the functional in ``r`` for one family member."""
    sample = instance.member(param)
    v = np.array([instance.functional(sample, float(r)) for r in r_grid])
    return bool(np.all(np.diff(v) > 0.0))


# ---------------------------------------------------------------------------
# builders
# ---------------------------------------------------------------------------


def _analytic_bound(inst: AnalyticInstance):
    return lambda param, r: inst.phi.value(0, r)


def generalized_probe(
    inst: AnalyticInstance,
    radius: float | None = None,
    grid: Sequence[float] = DEFAULT_A_GRID,
) -> ProbeInstance:
    """Probe a generalized instance with fixed weights on ``f_a``; the radius defaults to the computed root."""
    if radius is None:
        radius = solve_min_root(generalized_residual(inst)).value
    return ProbeInstance(
        inst.name or "generalized",
        "analytic",
        "f_a",
        lambda f, r: eval_Cf(f, inst, r),
        _analytic_bound(inst),
        radius,
        tuple(grid),
    )


def named_probe(name: str, a: float | None = None, p: float | None = None, q: int = 1,
                grid: Sequence[float] | None = None, tables: Sequence[CoeffSeq] = ()) -> ProbeInstance:
    """Probe one of the named analytic applications at its published radius.

    Instances whose extra weight depends on ``|f(0)|`` are probed on ``f_a``
    with that very ``a`` (default grid ``[a]``).  The two applications without
    a known extremal function use the ``table`` family and are inconclusive
    unless tables are supplied.
    """
    if name in ("refined-I(ii)", "refined-I(iii)"):
        return table_probe(name, tables, {"refined-I(ii)": 0.6, "refined-I(iii)": (5.0 - math.sqrt(17.0)) / 2.0}[name])
    if name not in ANALYTIC_INSTANCE_NAMES:
        raise ConfigurationError(f"unknown probe instance {name!r}")
    if name in SELF_REFERENTIAL:
        if a is None:
            raise ConfigurationError(f"{name} needs the parameter a = |f(0)|")
        inst = analytic_instance(name, a=a, p=p, q=q)
        grid = (float(a),) if grid is None else tuple(grid)
        if any(abs(g - a) > 0.0 for g in grid):
            raise ConfigurationError(f"{name} is defined for |f(0)| = {a}; the grid must be [a]")
    else:
        inst = analytic_instance(name, p=p, q=q)
        grid = DEFAULT_A_GRID if grid is None else tuple(grid)
    params = {"a": a if a is not None else 0.0, "q": q}
    if name == "p-exponent":
        params["p"] = inst.p
    radius = published_radius(name, **params)
    return ProbeInstance(name, "analytic", "f_a", lambda f, r: eval_Cf(f, inst, r), _analytic_bound(inst), radius, grid)


def classical_probe(p: float = 1.0, grid: Sequence[float] = DEFAULT_A_GRID) -> ProbeInstance:
    return named_probe("classical" if p == 1.0 else "p-exponent", p=p, grid=grid)


def refined_probe(a: float) -> ProbeInstance:
    """Refined inequality with the sharpness identity at ``1/(2+a)``."""
    return named_probe("refined-I(i)(a)", a=a)


def _refined_ii(f: CoeffSeq, r: float) -> float:
    # sum_{k>=1} c_k r^k + (1/(1+c_1) + r/(1-r)) sum_{k>=1} c_k^2 r^(2k-1)
    lin = sum_coeff_weights(f, MONOMIAL, r, 1).value
    sq = sum_coeff_weights(f, MONOMIAL, r * r, 1, 2).value / r
    return lin + (1.0 / (1.0 + f.coeff(1)) + r / (1.0 - r)) * sq


def _refined_iii(f: CoeffSeq, r: float) -> float:
    # sum_{k>=1} c_k r^k + (1/(r(1+c_1)) + 1/(1-r)) sum_{k>=0} c_k^2 r^(2k-1)
    lin = sum_coeff_weights(f, MONOMIAL, r, 1).value
    sq = sum_coeff_weights(f, MONOMIAL, r * r, 0, 2).value / r
    return lin + (1.0 / (r * (1.0 + f.coeff(1))) + 1.0 / (1.0 - r)) * sq


TABLE_FUNCTIONALS = {"refined-I(ii)": _refined_ii, "refined-I(iii)": _refined_iii}


def table_probe(name: str, tables: Sequence[CoeffSeq], radius: float,
                functional: Callable[[CoeffSeq, float], float] | None = None,
                bound: Callable[[float, float], float] | None = None) -> ProbeInstance:
    """User-supplied coefficient tables for instances with no named extremal function."""
    tables = tuple(t if isinstance(t, CoeffSeq) else coeff_table(t) for t in tables)
    if functional is None:
        if name not in TABLE_FUNCTIONALS:
            raise ConfigurationError(f"{name}: a table probe needs an explicit functional")
        functional = TABLE_FUNCTIONALS[name]
    if bound is None:
        bound = lambda param, r: 1.0
    return ProbeInstance(name, "analytic", "table", functional, bound, radius, tuple(range(len(tables))), tables)


def fbeta_probe(beta: float, phi: WeightSeq, mode: str = "verified-series", name: str = "") -> ProbeInstance:
    """``r phi_1 + sum c_n phi_n`` on ``f_beta`` against ``beta`` at the computed radius."""
    mode = canon_mode(mode)
    check_fbeta_condition(beta, phi)
    radius = solve_min_root(fbeta_residual(beta, phi, mode)).value
    return ProbeInstance(
        name or f"fbeta({beta:g})",
        "harmonic",
        "f_beta",
        lambda f, r: eval_Fbeta_lhs(f, phi, r),
        lambda param, r: harmonic_distance(param),
        radius,
        (float(beta),),
    )


def table1_probe(row: str, beta: float, mode: str = "verified-series") -> ProbeInstance:
    weights = table1_weights()
    if row not in weights:
        raise ConfigurationError(f"row must be one of {tuple(weights)}")
    return fbeta_probe(beta, weights[row], mode, f"{row}({beta:g},{canon_mode(mode)})")


def harmonic_probe(inst: HarmonicInstance, mode: str = "sample") -> ProbeInstance:
    """The harmonic functional on ``f_beta`` at the computed radius.

    In sample mode the leading term is the sample's own value ``f_beta(r)``,
    which coincides with the growth bound ``R(r)``.
    """
    if inst.beta is None:
        raise ConfigurationError("harmonic probe needs beta")
    radius = solve_min_root(harmonic_residual(inst)).value
    return ProbeInstance(
        f"harmonic(beta={inst.beta:g},m={inst.m},N={inst.N})",
        "harmonic",
        "f_beta",
        lambda f, r: eval_harmonic_S(f, inst, r, mode=mode),
        lambda param, r: harmonic_distance(param),
        radius,
        (float(inst.beta),),
    )


def probe_from_config(cfg: dict) -> ProbeInstance:
    """Build a probe from a JSON-style mapping (see the CLI schema)."""
    from .seqcore import coeffs_from_json, weight_from_json

    kind = cfg.get("instance") or cfg.get("name")
    if kind is None:
        raise ConfigurationError("probe config needs 'instance'")
    if kind == "fbeta":
        return fbeta_probe(cfg["beta"], weight_from_json(cfg.get("phi", "shifted")), cfg.get("mode", "verified-series"))
    if kind == "table1":
        return table1_probe(cfg["row"], cfg["beta"], cfg.get("mode", "verified-series"))
    if kind == "harmonic":
        inst = HarmonicInstance(cfg.get("beta"), cfg.get("m", 1), cfg.get("N", 1), cfg.get("mu", 1.0), cfg.get("lambda", 1.0))
        return harmonic_probe(inst, cfg.get("functional_mode", "sample"))
    tables = tuple(coeffs_from_json(t) for t in cfg.get("tables", ()))
    family = cfg.get("family")
    probe = named_probe(kind, a=cfg.get("a"), p=cfg.get("p"), q=cfg.get("q", 1), grid=cfg.get("grid"), tables=tables)
    if family is not None and family != probe.family:
        raise ConfigurationError(f"{kind} is probed on family {probe.family}, not {family}")
    return probe
