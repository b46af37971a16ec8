"""Weight sequences, coefficient sequences and certified series summation.

A *weight sequence* is a family ``phi_k(r)`` of non-negative functions on
``[0, 1)``; the Bohr-type functionals pair such weights with the moduli of
Taylor coefficients of a function sample (a *coefficient sequence*).

Every infinite sum in the package goes through :func:`certified_sum`, which
adds terms in growing chunks until an explicit tail bound drops below the
requested absolute tolerance.  Tail bounds come from a ratio bound on the
weights (``phi_{k+1} <= q * phi_k`` for all ``k >= K``) together with an upper
envelope on the remaining coefficients.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Any, Callable, Mapping, Sequence

import numpy as np
from scipy.signal import lfilter

from .errors import ConfigurationError, DomainError, NonConvergentError, UnsupportedError

DEFAULT_ABS_TOL = 1e-14
MAX_TERMS = 2_000_000
# a ratio bound still >= 1 after this many terms is treated as divergence
_DIVERGENCE_HORIZON = 1 << 14

WEIGHT_KINDS = (
    "monomial",
    "unit_then_monomial",
    "shifted",
    "power_weighted",
    "lacunary",
    "refined_weight",
    "linear_k",
    "zero",
    "custom_table",
    "inverse_monomial",
    "sum",
)

_WEIGHT_ALIASES = {
    "power": "power_weighted",
    "refined": "refined_weight",
    "linear": "linear_k",
    "custom": "custom_table",
    "table": "custom_table",
}

COEFF_KINDS = ("blaschke_point", "harmonic_extremal", "coeff_table", "blaschke_product")


def check_radius(r: float, *, allow_zero: bool = True) -> float:
    r = float(r)
    if not math.isfinite(r) or r >= 1.0 or r < 0.0 or (r == 0.0 and not allow_zero):
        raise DomainError(f"radius must lie in [0, 1), got {r!r}")
    return r


def _canon_kind(kind: str) -> str:
    k = str(kind).strip().lower().replace("-", "_")
    return _WEIGHT_ALIASES.get(k, k)


@dataclass(frozen=True)
class SumResult:
    """Partial sum plus a bound on the neglected tail."""

    value: float
    tail_bound: float
    terms_used: int
    rigorous: bool

    @property
    def interval(self) -> tuple[float, float]:
        return (self.value - self.tail_bound, self.value + self.tail_bound)


# ---------------------------------------------------------------------------
# weight sequences
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class WeightSeq:
    """A sequence ``phi_k(r)`` of non-negative weights.

    ``head`` pins individual indices to constants, e.g. ``{1: 1.0}`` for the
    ``phi_1 = 1`` convention used with shifted and power weights.
    """

    kind: str
    params: Mapping[str, Any] = field(default_factory=dict)
    start: int = 0
    head: Mapping[int, float] = field(default_factory=dict)

    def __post_init__(self):
        kind = _canon_kind(self.kind)
        if kind not in WEIGHT_KINDS:
            raise ConfigurationError(f"unknown weight kind {self.kind!r}")
        object.__setattr__(self, "kind", kind)
        object.__setattr__(self, "params", dict(self.params))
        object.__setattr__(self, "head", {int(k): float(v) for k, v in dict(self.head).items()})
        if int(self.start) < 0:
            raise ConfigurationError("start index must be >= 0")
        object.__setattr__(self, "start", int(self.start))
        for v in self.head.values():
            if not v >= 0:
                raise ConfigurationError("head values must be non-negative")
        self._validate()

    def _validate(self):
        p = self.params
        if self.kind == "power_weighted":
            alpha = p.get("alpha")
            if alpha is None or float(alpha) < 0:
                raise ConfigurationError("power_weighted needs a non-negative 'alpha'")
        elif self.kind == "lacunary":
            q = p.get("q")
            if q is None or int(q) != q or int(q) < 1:
                raise ConfigurationError("lacunary needs a positive integer 'q'")
        elif self.kind == "refined_weight":
            a = float(p.get("a", 0.0))
            if not 0.0 <= a <= 1.0:
                raise ConfigurationError("refined_weight needs 'a' in [0, 1]")
            q = p.get("q", 1)
            if int(q) != q or int(q) < 1:
                raise ConfigurationError("refined_weight 'q' must be a positive integer")
        elif self.kind in ("linear_k", "inverse_monomial"):
            if float(p.get("c", 1.0)) < 0:
                raise ConfigurationError(f"{self.kind} needs a non-negative 'c'")
        elif self.kind == "custom_table":
            vals = p.get("values")
            if not vals:
                raise ConfigurationError("custom_table needs a non-empty 'values' list")
            q = p.get("tail_ratio")
            if q is not None and not 0.0 <= float(q) < 1.0:
                raise ConfigurationError("custom_table 'tail_ratio' must lie in [0, 1)")
        elif self.kind == "sum":
            terms = p.get("terms")
            if not terms:
                raise ConfigurationError("sum needs a non-empty 'terms' list")
            parsed = tuple(t if isinstance(t, WeightSeq) else weight_from_json(t) for t in terms)
            self.params["terms"] = parsed

    # -- evaluation -------------------------------------------------------

    @property
    def rigorous(self) -> bool:
        """False when the tail beyond a custom table is unknown."""
        if self.kind == "custom_table":
            return bool(self.params.get("finite", True)) or self.params.get("tail_ratio") is not None
        if self.kind == "sum":
            return all(t.rigorous for t in self.params["terms"])
        return True

    def _base(self, ks: np.ndarray, r: float) -> np.ndarray:
        ks = np.asarray(ks)
        kf = ks.astype(float)
        p = self.params
        kind = self.kind
        if kind == "monomial":
            return r**kf
        if kind == "unit_then_monomial":
            return np.where(ks <= 1, 1.0, r**kf)
        if kind == "shifted":
            return (kf + 1.0) * r**kf
        if kind == "power_weighted":
            alpha = float(p["alpha"])
            return np.where(ks == 0, 0.0, kf**alpha * r**kf)
        if kind == "lacunary":
            return r ** (int(p["q"]) * kf)
        if kind == "refined_weight":
            q = int(p.get("q", 1))
            rq = r**q
            return np.full(ks.shape, 1.0 / (1.0 + float(p.get("a", 0.0))) + rq / (1.0 - rq))
        if kind == "linear_k":
            return float(p.get("c", 1.0)) * kf
        if kind == "zero":
            return np.zeros(ks.shape)
        if kind == "inverse_monomial":
            if r == 0.0:
                raise DomainError("inverse_monomial weights need r > 0")
            return float(p.get("c", 1.0)) * r ** (-kf)
        if kind == "custom_table":
            return self._table(ks, r)
        if kind == "sum":
            return sum(t.values(ks, r) for t in p["terms"])
        raise ConfigurationError(f"unknown weight kind {kind!r}")  # pragma: no cover

    def _table_values(self, r: float) -> np.ndarray:
        vals = [v(r) if callable(v) else v for v in self.params["values"]]
        out = np.asarray(vals, dtype=float)
        if np.any(out < 0):
            raise ConfigurationError("custom_table values must be non-negative")
        return out

    def _table(self, ks: np.ndarray, r: float) -> np.ndarray:
        vals = self._table_values(r)
        idx = ks - self.start
        n = len(vals)
        out = np.zeros(ks.shape)
        inside = (idx >= 0) & (idx < n)
        out[inside] = vals[idx[inside]]
        q = self.params.get("tail_ratio")
        if q is not None:
            beyond = idx >= n
            out[beyond] = vals[-1] * float(q) ** (idx[beyond] - n + 1)
        return out

    def values(self, ks, r: float) -> np.ndarray:
        ks = np.atleast_1d(np.asarray(ks, dtype=np.int64))
        out = np.array(self._base(ks, r), dtype=float, copy=True)
        for k, v in self.head.items():
            out[ks == k] = v
        return out

    def value(self, k: int, r: float) -> float:
        return float(self.values([k], r)[0])

    def ratio_bound(self, K: int, r: float) -> float:
        """Upper bound on ``phi_{k+1}(r) / phi_k(r)`` valid for every ``k >= K``."""
        if self.head and K <= max(self.head):
            return math.inf
        p = self.params
        kind = self.kind
        if kind in ("monomial",):
            return r
        if kind == "unit_then_monomial":
            return r if K >= 1 else 1.0
        if kind == "shifted":
            return (K + 2.0) / (K + 1.0) * r
        if kind == "power_weighted":
            if K < 1:
                return math.inf
            return ((K + 1.0) / K) ** float(p["alpha"]) * r
        if kind == "lacunary":
            return r ** int(p["q"])
        if kind == "refined_weight":
            return 1.0
        if kind == "linear_k":
            return math.inf if K < 1 else (K + 1.0) / K
        if kind == "zero":
            return 0.0
        if kind == "inverse_monomial":
            return math.inf if r == 0.0 else 1.0 / r
        if kind == "custom_table":
            n = len(p["values"])
            if K < self.start + n - 1:
                return math.inf
            q = p.get("tail_ratio")
            return float(q) if q is not None else 0.0
        if kind == "sum":
            return max(t.ratio_bound(K, r) for t in p["terms"])
        raise ConfigurationError(f"unknown weight kind {kind!r}")  # pragma: no cover

    def closed_sum(self, r: float, first: int) -> float | None:
        """Exact ``sum_{k >= first} phi_k(r)`` when a closed form exists, else ``None``."""
        base = self._base_closed(r, first)
        if base is None:
            return None
        for k, v in self.head.items():
            if k >= first:
                base += v - float(self._base(np.array([k]), r)[0])
        return base

    def _base_closed(self, r: float, m: int) -> float | None:
        p = self.params
        kind = self.kind
        if kind == "monomial":
            return r**m / (1.0 - r)
        if kind == "unit_then_monomial":
            return max(0, 2 - m) + r ** max(m, 2) / (1.0 - r)
        if kind == "shifted":
            return r**m * ((m + 1) - m * r) / (1.0 - r) ** 2
        if kind == "power_weighted":
            alpha = p["alpha"]
            if alpha not in (1, 2, 3) or m > 2:
                return None
            s2 = closed_sum_power(int(alpha), r)
            return s2 + (r if m <= 1 else 0.0)
        if kind == "lacunary":
            rq = r ** int(p["q"])
            return rq**m / (1.0 - rq)
        if kind == "zero":
            return 0.0
        if kind == "custom_table":
            if not self.rigorous:
                return None
            vals = self._table_values(r)
            lo = max(m - self.start, 0)
            total = math.fsum(vals[lo:])
            q = p.get("tail_ratio")
            if q is not None and q > 0:
                q = float(q)
                n = len(vals)
                j0 = max(m - self.start - n + 1, 1)
                total += vals[-1] * q**j0 / (1.0 - q)
            return total
        if kind == "sum":
            parts = [t.closed_sum(r, m) for t in p["terms"]]
            return None if any(x is None for x in parts) else math.fsum(parts)
        return None


@dataclass(frozen=True)
class WeightProduct:
    """Pointwise product ``prod_i w_i(k, r) ** e_i`` of weight sequences."""

    factors: tuple[tuple[WeightSeq, int], ...]
    scale: float = 1.0

    def values(self, ks, r: float) -> np.ndarray:
        out = np.full(np.atleast_1d(ks).shape, float(self.scale))
        for w, e in self.factors:
            out = out * w.values(ks, r) ** e
        return out

    def ratio_bound(self, K: int, r: float) -> float:
        q = 1.0
        for w, e in self.factors:
            q *= w.ratio_bound(K, r) ** e
        return q

    @property
    def rigorous(self) -> bool:
        return all(w.rigorous for w, _ in self.factors)


def square_weighted(phi: WeightSeq, Phi: WeightSeq) -> WeightProduct:
    """The weight ``Phi_k(r) * phi_k(r)**2`` carried by the squared-coefficient term."""
    if Phi.kind == "inverse_monomial" and phi.kind == "monomial" and not phi.head and not Phi.head:
        # (c / r^k) r^(2k) = c r^k, which stays finite at r = 0
        return WeightProduct(((WeightSeq("monomial"), 1),), float(Phi.params.get("c", 1.0)))
    return WeightProduct(((Phi, 1), (phi, 2)))


# ---------------------------------------------------------------------------
# coefficient sequences
# ---------------------------------------------------------------------------


@lru_cache(maxsize=256)
def _blaschke_series(zeros: tuple[complex, ...], theta: float, n: int) -> np.ndarray:
    num = np.array([1.0 + 0j])
    den = np.array([1.0 + 0j])
    for z in zeros:
        num = np.convolve(num, [-z, 1.0])
        den = np.convolve(den, [1.0, -np.conj(z)])
    impulse = np.zeros(n, dtype=complex)
    impulse[0] = 1.0
    out = lfilter(num, den, impulse) * np.exp(1j * theta)
    out.setflags(write=False)
    return out


def blaschke_coefficients(zeros: Sequence[complex], n: int, theta: float = 0.0) -> np.ndarray:
    """First ``n`` complex Taylor coefficients of ``e^{i theta} prod (z - z_j)/(1 - conj(z_j) z)``."""
    zs = tuple(complex(z) for z in zeros)
    if any(abs(z) >= 1 for z in zs):
        raise DomainError("Blaschke zeros must lie in the open unit disk")
    size = 1 << max(int(n) - 1, 1).bit_length()
    return np.array(_blaschke_series(zs, float(theta), size)[:n])


@dataclass(frozen=True)
class CoeffSeq:
    """Moduli ``c_k`` of the Taylor coefficients of one function sample.

    For harmonic samples ``c_n`` stands for ``|a_n| + |b_n|``.
    """

    kind: str
    params: Mapping[str, Any] = field(default_factory=dict)

    def __post_init__(self):
        kind = str(self.kind).strip().lower().replace("-", "_")
        if kind not in COEFF_KINDS:
            raise ConfigurationError(f"unknown coefficient kind {self.kind!r}")
        object.__setattr__(self, "kind", kind)
        p = dict(self.params)
        if kind == "blaschke_point":
            a = float(p.get("a", math.nan))
            if not 0.0 <= a < 1.0:
                raise DomainError(f"blaschke_point needs a in [0, 1), got {a!r}")
            p["a"] = a
        elif kind == "harmonic_extremal":
            beta = float(p.get("beta", math.nan))
            if not 0.0 <= beta < 1.0:
                raise DomainError(f"harmonic_extremal needs beta in [0, 1), got {beta!r}")
            p["beta"] = beta
        elif kind == "coeff_table":
            vals = tuple(float(v) for v in p.get("values", ()))
            if not vals or any(not (v >= 0) for v in vals):
                raise ConfigurationError("coeff_table needs non-negative 'values'")
            p["values"] = vals
        elif kind == "blaschke_product":
            zs = tuple(complex(z) if not isinstance(z, (list, tuple)) else complex(*z) for z in p.get("zeros", ()))
            if any(abs(z) >= 1 for z in zs):
                raise DomainError("Blaschke zeros must lie in the open unit disk")
            p["zeros"] = zs
            p["theta"] = float(p.get("theta", 0.0))
            mix = float(p.get("mix", 1.0))
            const = complex(p.get("const", 0.0))
            if not 0.0 <= mix <= 1.0 or abs(const) > 1.0:
                raise DomainError("convex combination needs mix in [0, 1] and |const| <= 1")
            p["mix"], p["const"] = mix, const
        object.__setattr__(self, "params", p)

    @property
    def harmonic(self) -> bool:
        return self.kind == "harmonic_extremal" or bool(self.params.get("harmonic", False))

    def complex_coefficients(self, n: int) -> np.ndarray:
        """Complex coefficients of a Blaschke-product sample (mix/const applied)."""
        p = self.params
        out = p["mix"] * blaschke_coefficients(p["zeros"], n, p["theta"])
        out[0] += (1.0 - p["mix"]) * p["const"]
        return out

    def values(self, ks) -> np.ndarray:
        ks = np.atleast_1d(np.asarray(ks, dtype=np.int64))
        p = self.params
        if self.kind == "blaschke_point":
            a = p["a"]
            return np.where(ks == 0, a, (1.0 - a * a) * a ** np.maximum(ks - 1, 0).astype(float))
        if self.kind == "harmonic_extremal":
            return np.select([ks == 0, ks == 1], [0.0, 1.0], 2.0 * (1.0 - p["beta"]))
        if self.kind == "coeff_table":
            vals = np.asarray(p["values"])
            out = np.zeros(ks.shape)
            inside = ks < len(vals)
            out[inside] = vals[ks[inside]]
            return out
        n = int(ks.max()) + 1 if ks.size else 1
        return np.abs(self.complex_coefficients(n))[ks]

    def coeff(self, k: int) -> float:
        return float(self.values([k])[0])

    @property
    def c0(self) -> float:
        return self.coeff(0)

    def sup_after(self, K: int) -> float:
        """Upper bound on ``c_k`` for every ``k > K``."""
        p = self.params
        if self.kind == "blaschke_point":
            a = p["a"]
            return (1.0 - a * a) * a ** max(K, 0)
        if self.kind == "harmonic_extremal":
            return 2.0 * (1.0 - p["beta"]) if K >= 1 else max(1.0, 2.0 * (1.0 - p["beta"]))
        if self.kind == "coeff_table":
            rest = p["values"][K + 1:]
            return max(rest) if rest else 0.0
        if not p["zeros"]:
            return 0.0
        # Schwarz-Pick: |a_k| <= 1 - |a_0|^2 for any self-map of the closed disk
        return max(1.0 - self.c0**2, 0.0)

    def to_json(self) -> dict:
        p = dict(self.params)
        if self.kind == "blaschke_product":
            p["zeros"] = [[z.real, z.imag] for z in p["zeros"]]
            p["const"] = [p["const"].real, p["const"].imag]
        if "values" in p:
            p["values"] = list(p["values"])
        return {"kind": self.kind, **p}


def blaschke_point(a: float) -> CoeffSeq:
    """Moduli of ``f_a(z) = (z - a)/(1 - a z)``."""
    return CoeffSeq("blaschke_point", {"a": a})


def harmonic_extremal(beta: float) -> CoeffSeq:
    """Moduli of ``f_beta(z) = z + sum_{n>=2} 2(1-beta) z^n``."""
    return CoeffSeq("harmonic_extremal", {"beta": beta})


def coeff_table(values: Sequence[float], harmonic: bool = False) -> CoeffSeq:
    return CoeffSeq("coeff_table", {"values": tuple(values), "harmonic": harmonic})


def blaschke_product(zeros: Sequence[complex], theta: float = 0.0, mix: float = 1.0, const: complex = 0.0) -> CoeffSeq:
    return CoeffSeq("blaschke_product", {"zeros": tuple(zeros), "theta": theta, "mix": mix, "const": const})


# ---------------------------------------------------------------------------
# summation
# ---------------------------------------------------------------------------


def certified_sum(
    terms: Callable[[np.ndarray], np.ndarray],
    tail_after: Callable[[int], float],
    first: int,
    abs_tol: float = DEFAULT_ABS_TOL,
    *,
    rigorous: bool = True,
    max_terms: int = MAX_TERMS,
) -> SumResult:
    """Sum ``terms(k)`` for ``k >= first`` until ``tail_after(K) <= abs_tol``.

    ``tail_after(K)`` must bound the sum of all terms with index ``> K``.
    """
    if not abs_tol > 0:
        raise ConfigurationError("abs_tol must be positive")
    parts: list[float] = []
    lo = first
    chunk = 64
    tail = math.inf
    while lo - first < max_terms:
        hi = lo + chunk
        t = terms(np.arange(lo, hi))
        if not np.all(np.isfinite(t)):
            raise NonConvergentError("non-finite term encountered")
        parts.extend(t.tolist())
        tail = tail_after(hi - 1)
        if tail <= abs_tol:
            return SumResult(math.fsum(parts), float(tail), hi - first, rigorous)
        if math.isinf(tail) and hi - first >= _DIVERGENCE_HORIZON:
            break
        lo = hi
        chunk = min(chunk * 2, 1 << 16)
    if math.isinf(tail):
        raise NonConvergentError("term ratio stays >= 1; the series does not converge")
    raise NonConvergentError(f"tail bound {tail:.3g} still above {abs_tol:.3g} after {max_terms} terms")


def _weight_tail(weight, r: float) -> Callable[[int], float]:
    def tail(K: int) -> float:
        q = weight.ratio_bound(K, r)
        if not q < 1.0:
            return math.inf
        wK = float(weight.values([K], r)[0])
        return wK * q / (1.0 - q)

    return tail


def sum_weights(seq, r: float, start: int | None = None, abs_tol: float = DEFAULT_ABS_TOL) -> SumResult:
    """``sum_{k >= start} phi_k(r)``, closed form when the kind admits one.

    ``seq`` may also be a :class:`WeightProduct`, which is always summed numerically.
    """
    r = check_radius(r)
    seq_start = getattr(seq, "start", 0)
    first = seq_start if start is None else int(start)
    if first < seq_start:
        raise DomainError(f"summation start {first} precedes the sequence start {seq_start}")
    if not abs_tol > 0:
        raise ConfigurationError("abs_tol must be positive")
    closed = seq.closed_sum(r, first) if isinstance(seq, WeightSeq) else None
    if closed is not None:
        return SumResult(float(closed), 0.0, 0, seq.rigorous)
    return certified_sum(
        lambda ks: seq.values(ks, r), _weight_tail(seq, r), first, abs_tol, rigorous=seq.rigorous
    )


def sum_coeff_weights(
    coeffs: CoeffSeq,
    weight,
    r: float,
    first: int,
    power: int = 1,
    abs_tol: float = DEFAULT_ABS_TOL,
    last: int | None = None,
) -> SumResult:
    """``sum_{k=first}^{last} c_k**power * w_k(r)`` with a certified tail.

    ``last=None`` means an infinite sum.
    """
    r = check_radius(r)
    if last is not None:
        if last < first:
            return SumResult(0.0, 0.0, 0, True)
        ks = np.arange(first, last + 1)
        t = coeffs.values(ks) ** power * weight.values(ks, r)
        return SumResult(math.fsum(t.tolist()), 0.0, len(ks), True)
    wtail = _weight_tail(weight, r)

    def tail(K: int) -> float:
        s = coeffs.sup_after(K)
        if s == 0.0:
            return 0.0
        return s**power * wtail(K)

    return certified_sum(
        lambda ks: coeffs.values(ks) ** power * weight.values(ks, r),
        tail,
        first,
        abs_tol,
        rigorous=getattr(weight, "rigorous", True),
    )


def eval_weight(seq: WeightSeq, k: int, r: float) -> float:
    """``phi_k(r)`` for ``k >= seq.start`` and ``r`` in ``[0, 1)``."""
    r = check_radius(r)
    if int(k) < seq.start:
        raise DomainError(f"index {k} precedes the sequence start {seq.start}")
    return seq.value(int(k), r)


def closed_sum_power(alpha: int, r: float) -> float:
    """True value of ``sum_{n>=2} n**alpha r**n`` for ``alpha`` in {1, 2, 3}."""
    r = check_radius(r)
    if alpha == 1:
        return r * r * (2.0 - r) / (1.0 - r) ** 2
    if alpha == 2:
        return r * r * (4.0 - 3.0 * r + r * r) / (1.0 - r) ** 3
    if alpha == 3:
        return r * r * (8.0 - 5.0 * r + 4.0 * r * r - r**3) / (1.0 - r) ** 4
    raise UnsupportedError(f"alpha must be 1, 2 or 3, got {alpha!r}")


def paper_printed_sum(alpha: int, r: float) -> float:
    """The published closed forms for ``sum_{n>=2} n**alpha r**n``, verbatim.

    For ``alpha = 1`` the published expression ``(2 - r) r / (1 - r)**2`` is
    missing a factor ``r``; it exceeds the true sum except at ``r = 0``.  The
    ``alpha = 2, 3`` expressions agree with :func:`closed_sum_power`.
    """
    r = check_radius(r)
    if alpha == 1:
        return (2.0 - r) * r / (1.0 - r) ** 2
    if alpha in (2, 3):
        return closed_sum_power(alpha, r)
    raise UnsupportedError(f"alpha must be 1, 2 or 3, got {alpha!r}")


# ---------------------------------------------------------------------------
# JSON forms
# ---------------------------------------------------------------------------


def weight_from_json(obj) -> WeightSeq:
    """Build a :class:`WeightSeq` from ``"kind"`` or ``{"kind", "params", "start", "head"}``."""
    if isinstance(obj, WeightSeq):
        return obj
    if isinstance(obj, str):
        return WeightSeq(obj)
    if not isinstance(obj, Mapping) or "kind" not in obj:
        raise ConfigurationError(f"cannot read a weight sequence from {obj!r}")
    params = dict(obj.get("params", {}))
    for k, v in obj.items():
        if k not in ("kind", "params", "start", "head"):
            params[k] = v
    head = {int(k): v for k, v in dict(obj.get("head", {})).items()}
    return WeightSeq(obj["kind"], params, int(obj.get("start", 0)), head)


def weight_to_json(seq: WeightSeq) -> dict:
    params = dict(seq.params)
    if seq.kind == "sum":
        params["terms"] = [weight_to_json(t) for t in params["terms"]]
    out = {"kind": seq.kind, "params": params, "start": seq.start}
    if seq.head:
        out["head"] = {str(k): v for k, v in seq.head.items()}
    return out


def coeffs_from_json(obj) -> CoeffSeq:
    """Build a :class:`CoeffSeq` from ``{"kind": "blaschke_point", "a": 0.5}`` and friends."""
    if isinstance(obj, CoeffSeq):
        return obj
    if not isinstance(obj, Mapping) or "kind" not in obj:
        raise ConfigurationError(f"cannot read a function sample from {obj!r}")
    params = dict(obj.get("params", {}))
    params.update({k: v for k, v in obj.items() if k not in ("kind", "params")})
    if "const" in params and isinstance(params["const"], (list, tuple)):
        params["const"] = complex(*params["const"])
    return CoeffSeq(obj["kind"], params)
