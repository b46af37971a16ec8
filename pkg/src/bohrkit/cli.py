"""Command-line interface: ``bohrkit <command> [config] [--param KEY=VALUE ...]``.

Exit codes: 0 success, 1 usage/config/internal error, 2 well posed but no
result (no root or a degenerate radius).
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from importlib import resources
from pathlib import Path
from typing import Any, Sequence

import numpy as np
import jsonschema

from . import extremal, radii, verify
from .errors import BohrError, NoRootError
from .functionals import (
    AnalyticInstance,
    HarmonicInstance,
    SELF_REFERENTIAL,
    ANALYTIC_INSTANCE_NAMES,
    analytic_instance,
    eval_area_ratio,
    eval_Cf,
    eval_Fbeta_lhs,
    eval_harmonic_S,
)
from .seqcore import blaschke_point, coeffs_from_json, harmonic_extremal, weight_from_json

EXIT_OK, EXIT_ERROR, EXIT_NO_RESULT = 0, 1, 2
FORMATS = ("json", "csv", "md")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse exits with 2 on bad usage; 2 is reserved for "no root" here
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_ERROR, f"{self.prog}: error: {message}\n")


# ---------------------------------------------------------------------------
# configuration
# ---------------------------------------------------------------------------


def load_schema() -> dict:
    return json.loads(resources.files("bohrkit").joinpath("data/config.schema.json").read_text())


def validate(cfg: dict, command: str) -> None:
    schema = load_schema()
    sub = dict(schema["$defs"][command])
    sub["$defs"] = schema["$defs"]
    try:
        jsonschema.validate(cfg, sub)
    except jsonschema.ValidationError as exc:
        where = "/".join(str(p) for p in exc.absolute_path) or "<root>"
        raise UsageError(f"invalid {command} config at {where}: {exc.message}") from None


def _parse_value(text: str) -> Any:
    try:
        return json.loads(text)
    except json.JSONDecodeError:
        return text


def read_config(source: str | None, params: Sequence[str]) -> dict:
    """Merge a JSON file or inline JSON object with ``KEY=VALUE`` overrides."""
    cfg: dict = {}
    if source:
        text = sys.stdin.read() if source == "-" else None
        if text is None:
            stripped = source.lstrip()
            if stripped.startswith("{"):
                text = source
            else:
                path = Path(source)
                if not path.is_file():
                    raise UsageError(f"config file not found: {source}")
                text = path.read_text()
        try:
            cfg = json.loads(text)
        except json.JSONDecodeError as exc:
            raise UsageError(f"config is not valid JSON: {exc}") from None
        if not isinstance(cfg, dict):
            raise UsageError("config must be a JSON object")
    for item in params:
        key, sep, value = item.partition("=")
        if not sep or not key:
            raise UsageError(f"--param expects KEY=VALUE, got {item!r}")
        cfg[key.strip()] = _parse_value(value)
    nested = cfg.pop("params", None)
    if isinstance(nested, dict):
        cfg = {**nested, **cfg}
    return cfg


# ---------------------------------------------------------------------------
# output
# ---------------------------------------------------------------------------


def _num(x) -> str:
    if isinstance(x, float):
        return repr(x)
    return str(x)


def render(records: list[dict], fmt: str, extra: dict | None = None) -> str:
    """Render a list of flat records as JSON, CSV or a markdown table."""
    if fmt == "json":
        obj = records[0] if extra is None and len(records) == 1 else {**(extra or {}), "records": records}
        return json.dumps(obj, indent=2, allow_nan=True)
    cols = list(records[0]) if records else []
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(cols)
        for rec in records:
            w.writerow([_num(rec[c]) for c in cols])
        return buf.getvalue().rstrip("\n")
    lines = ["| " + " | ".join(cols) + " |", "|" + "---|" * len(cols)]
    for rec in records:
        lines.append("| " + " | ".join(_num(rec[c]) for c in cols) + " |")
    if extra:
        lines.append("")
        lines += [f"- {k}: {_num(v)}" for k, v in extra.items()]
    return "\n".join(lines)


def _emit(args, text: str) -> None:
    if args.out:
        Path(args.out).write_text(text + "\n")
    else:
        print(text)


# ---------------------------------------------------------------------------
# builders shared by several commands
# ---------------------------------------------------------------------------


def _mode(args, cfg) -> str:
    return radii.canon_mode(cfg.get("mode") or args.mode or "verified-series")


def _analytic_from_cfg(cfg: dict, a: float = 0.0) -> AnalyticInstance:
    name = cfg.get("instance")
    if name and name not in ("generalized", "custom"):
        return analytic_instance(name, a=cfg.get("a", a), p=cfg.get("p"), q=cfg.get("q", 1))
    return AnalyticInstance(
        cfg.get("p", 1.0),
        weight_from_json(cfg.get("phi", "monomial")),
        weight_from_json(cfg.get("Phi", {"kind": "zero", "start": 1})),
        name or "",
    )


def _harmonic_from_cfg(cfg: dict) -> HarmonicInstance:
    return HarmonicInstance(cfg.get("beta"), cfg.get("m", 1), cfg.get("N", 1), cfg.get("mu", 1.0), cfg.get("lambda", 1.0))


def _fbeta_phi(cfg: dict):
    if "row" in cfg:
        return radii.table1_weights()[cfg["row"]]
    return weight_from_json(cfg.get("phi", {"kind": "shifted", "head": {"1": 1.0}}))


def build_residual(cfg: dict, mode: str) -> radii.ResidualSpec:
    theorem = cfg["theorem"]
    if theorem == "generalized":
        return radii.generalized_residual(_analytic_from_cfg(cfg))
    if theorem == "harmonic":
        return radii.harmonic_residual(_harmonic_from_cfg(cfg), bool(cfg.get("allow_extended", False)))
    if theorem == "fbeta":
        return radii.fbeta_residual(cfg["beta"], _fbeta_phi(cfg), mode)
    params = {k: v for k, v in cfg.items() if k not in ("theorem", "name", "mode")}
    return radii.prior_residual(cfg["name"], **params)


# ---------------------------------------------------------------------------
# commands
# ---------------------------------------------------------------------------


def cmd_radius(args, cfg) -> int:
    validate(cfg, "radius")
    mode = _mode(args, cfg)
    tol = args.tol if args.tol is not None else radii.ROOT_TOL
    theorem = cfg["theorem"]
    if theorem == "prior" and cfg["name"] not in radii.NUMERIC_PRIOR:
        params = {k: v for k, v in cfg.items() if k not in ("theorem", "name", "mode")}
        value = radii.published_radius(cfg["name"], **params)
        rec = {"name": cfg["name"], "value": value, "bracket": None, "residual": 0.0, "iterations": 0, "mode": "closed-form"}
    else:
        res = build_residual(cfg, mode)
        if theorem != "fbeta":
            res = radii.ResidualSpec(res.name, res.func, res.params, mode)
        rec = radii.solve_min_root(res, tol).to_json()
    if args.format != "json":
        rec = {**rec, "bracket": " ".join(_num(b) for b in rec["bracket"]) if rec["bracket"] else ""}
    _emit(args, render([rec], args.format))
    return EXIT_OK


def cmd_table1(args, cfg) -> int:
    validate(cfg, "table1")
    mode = _mode(args, cfg) if (cfg.get("mode") or args.mode) else "paper-printed"
    tol = args.tol if args.tol is not None else 5e-4
    result = radii.table1(mode)
    within = bool(result.within(tol).all())
    extra = {
        "mode": mode,
        "reference_version": result.reference_version,
        "max_abs_delta": result.max_abs_delta,
        "tol": tol,
        "within_tol": within,
    }
    if mode == "verified-series" and not within:
        bad = sorted({rec["row"] for rec in result.records() if abs(rec["delta"]) > tol})
        extra["discrepancy"] = f"rows {', '.join(bad)} deviate from the printed table"
    _emit(args, render(result.records(), args.format, extra))
    if mode == "paper-printed" and not within:
        print(f"table1: max |delta| = {result.max_abs_delta:.2e} exceeds tol {tol:g}", file=sys.stderr)
        return EXIT_ERROR
    return EXIT_OK


def cmd_sharpness(args, cfg) -> int:
    validate(cfg, "sharpness")
    if args.mode and "mode" not in cfg:
        cfg["mode"] = args.mode
    probe = extremal.probe_from_config(cfg)
    report = extremal.sharpness_probe(
        probe,
        cfg.get("radius"),
        cfg.get("epsilon", extremal.DEFAULT_EPSILON),
        cfg.get("grid"),
        args.tol if args.tol is not None else extremal.DEFAULT_TOL,
    )
    if args.format == "json":
        text = json.dumps(report.to_json(), indent=2, allow_nan=True)
    elif args.format == "csv":
        text = report.to_csv().rstrip("\n")
    else:
        recs = [r for r in report.to_json()["rows"]]
        text = render(recs, "md", {"instance": report.instance, "radius": report.radius, "verdict": report.verdict}) if recs \
            else f"- instance: {report.instance}\n- verdict: {report.verdict}\n- note: {report.note}"
    _emit(args, text)
    return EXIT_OK if report.verdict != "violated" else EXIT_ERROR


def cmd_verify(args, cfg) -> int:
    validate(cfg, "verify")
    seed = cfg.get("seed", args.seed if args.seed is not None else 42)
    report = verify.run_suite(seed, cfg.get("n", 100))
    if args.format == "json":
        text = json.dumps(report.to_json(), indent=2)
    elif args.format == "csv":
        recs = [{k: c.to_json()[k] for k in ("name", "samples", "checks", "violations", "worst_margin", "passed")}
                for c in report.checks]
        text = render(recs, "csv")
    else:
        text = report.to_text()
    _emit(args, text)
    return EXIT_OK if report.passed else EXIT_ERROR


def _functional(cfg: dict, mode: str):
    """``(f, r) -> value`` and ``r -> bound`` for eval and curve."""
    name = cfg.get("instance") or cfg.get("theorem") or "generalized"
    if name == "harmonic":
        inst = _harmonic_from_cfg(cfg)
        beta = extremal.harmonic_distance(inst.beta)
        fmode = cfg.get("functional_mode", "sample")
        return (lambda f, r: eval_harmonic_S(f, inst, r, mode=fmode)), (lambda r: beta), lambda: harmonic_extremal(inst.beta)
    if name == "fbeta":
        phi = _fbeta_phi(cfg)
        beta = float(cfg["beta"])
        return (lambda f, r: eval_Fbeta_lhs(f, phi, r)), (lambda r: beta), lambda: harmonic_extremal(beta)
    if name == "area":
        return (lambda f, r: eval_area_ratio(f, r)), (lambda r: math.nan), lambda: blaschke_point(cfg.get("a", 0.5))
    if name in SELF_REFERENTIAL:
        def value(f, r):
            return eval_Cf(f, analytic_instance(name, a=f.c0, p=cfg.get("p"), q=cfg.get("q", 1)), r)
        return value, (lambda r: 1.0), lambda: blaschke_point(cfg.get("a", 0.5))
    if name not in ANALYTIC_INSTANCE_NAMES and name not in ("generalized", "custom"):
        raise UsageError(f"unknown instance {name!r}")
    inst = _analytic_from_cfg({**cfg, "instance": name})
    return (lambda f, r: eval_Cf(f, inst, r)), (lambda r: inst.phi.value(0, r)), lambda: blaschke_point(cfg.get("a", 0.5))


def cmd_eval(args, cfg) -> int:
    validate(cfg, "eval")
    value, bound, _ = _functional(cfg, _mode(args, cfg))
    f = coeffs_from_json(cfg["f"])
    r = float(cfg["r"])
    rec = {"instance": cfg.get("instance") or cfg.get("theorem") or "generalized", "r": r, "value": value(f, r), "bound": bound(r)}
    _emit(args, render([rec], args.format))
    return EXIT_OK


def cmd_curve(args, cfg) -> int:
    validate(cfg, "curve")
    value, bound, default = _functional(cfg, _mode(args, cfg))
    f = coeffs_from_json(cfg["f"]) if "f" in cfg else default()
    lo, hi = float(cfg.get("r_min", 0.0)), float(cfg.get("r_max", 0.6))
    if not lo < hi:
        raise UsageError("curve needs r_min < r_max")
    grid = np.linspace(lo, hi, int(cfg.get("points", 61)))
    recs = [{"r": float(r), "value": value(f, float(r)), "bound": bound(float(r))} for r in grid]
    _emit(args, render(recs, args.format if args.format != "json" else "json", {"sample": f.to_json()} if args.format == "json" else None))
    return EXIT_OK


COMMANDS = {
    "radius": (cmd_radius, "minimal root of a radius equation"),
    "table1": (cmd_table1, "recompute the four-by-nine table of F_beta radii"),
    "sharpness": (cmd_sharpness, "probe a radius on its extremal family"),
    "verify": (cmd_verify, "run the seeded property suites"),
    "curve": (cmd_curve, "functional value and bound over an r grid"),
    "eval": (cmd_eval, "evaluate one functional on one sample"),
}


def _add_globals(p: argparse.ArgumentParser, suppress: bool) -> None:
    d = argparse.SUPPRESS if suppress else None
    p.add_argument("--format", choices=FORMATS, default=argparse.SUPPRESS if suppress else "json")
    p.add_argument("--tol", type=float, default=d, help="root, comparison or probe tolerance (per command)")
    p.add_argument("--seed", type=int, default=d)
    p.add_argument("--mode", choices=radii.MODES, default=d)
    p.add_argument("--out", default=d, metavar="FILE")


def build_parser() -> argparse.ArgumentParser:
    ap = _Parser(prog="bohrkit", description="Bohr-type radii, functionals and sharpness checks.")
    _add_globals(ap, suppress=False)
    sub = ap.add_subparsers(dest="command", required=True, parser_class=_Parser)
    for name, (_, help_) in COMMANDS.items():
        sp = sub.add_parser(name, help=help_)
        sp.add_argument("config", nargs="?", help="JSON file, inline JSON object, or '-' for stdin")
        sp.add_argument("--param", action="append", default=[], metavar="KEY=VALUE")
        _add_globals(sp, suppress=True)
    return ap


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    func = COMMANDS[args.command][0]
    try:
        cfg = read_config(args.config, args.param)
        return func(args, cfg)
    except NoRootError as exc:
        print(f"{args.command}: no result: {exc}", file=sys.stderr)
        return EXIT_NO_RESULT
    except (UsageError, BohrError, ValueError, KeyError, TypeError) as exc:
        print(f"{args.command}: error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
