"""Command-line front end.

Exit codes: 0 when every check passes, 1 when a mathematical check fails,
2 on input or configuration errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from importlib import resources
from pathlib import Path

import numpy as np

from . import coframe, graph, models, triples
from .config import ConfigError, TripleConfig, load_config
from .report import Check, all_passed, build_report, digest

ORACLE_POINTS = 64
ORACLE_TOL = 1e-10
SYMMETRY_TOL = 1e-9


class InputError(Exception):
    pass


def bundled_config(name: str) -> Path:
    """Path of a shipped example configuration (``example1`` .. ``example3``)."""
    return Path(str(resources.files("multitoric") / "data" / f"{name}.json"))


# -- verify-models ---------------------------------------------------------------

def cmd_verify_models(geometry: str | None = None):
    geoms = [models.Geometry.from_label(geometry)] if geometry else list(models.Geometry)
    checks = []
    for g in geoms:
        rep = models.verify_multi_moment(g)
        for c in rep.checks:
            checks.append(Check.of(f"{g.label}: {c.name}", c.passed, c.discrepancy,
                                   lhs_terms=c.lhs_terms, rhs_terms=c.rhs_terms))
        for note in rep.notes:
            checks.append(Check(f"{g.label}: note", "INFO", note))
    if geometry is None:
        for c in models.hierarchy_check().checks:
            checks.append(Check.of(f"hierarchy: {c.name}", c.passed, c.discrepancy,
                                   lhs_terms=c.lhs_terms, rhs_terms=c.rhs_terms))
    return checks, digest("verify-models", geometry or "all"), {}


# -- graph ------------------------------------------------------------------------

def _graph_checks(G: graph.ToricGraph) -> list[Check]:
    out = []
    for vc in graph.check_graph(G):
        detail = "" if vc.passed else f"valence {vc.valence}, tension {vc.tension}"
        out.append(Check.of(f"vertex {vc.vertex}: trivalent, zero tension", vc.passed, detail,
                            valence=vc.valence, tension=list(vc.tension)))
    return out


def cmd_graph(model: str | None = None, input_path: str | None = None):
    if model:
        if model != "cy":
            raise InputError(f"unknown model {model!r}")
        G = graph.model_graph(models.Geometry.CY)
        checks = _graph_checks(G)
        return checks, digest("graph", "model", model), {"graph": G.to_dict(), "dot": graph.to_dot(G)}
    raw = Path(input_path).read_bytes()
    try:
        data = json.loads(raw.decode("utf-8"))
    except json.JSONDecodeError as exc:
        raise InputError(f"{input_path}: line {exc.lineno} column {exc.colno}: {exc.msg}") from None
    if not isinstance(data, dict):
        raise InputError(f"{input_path}: top level must be a JSON object")
    try:
        if "stabilizers" in data:
            rep = graph.quadrilateral_obstruction(data["stabilizers"])
            status = "FAIL" if rep.contradiction else "PASS"
            detail = ("CONTRADICTION: edge directions are linearly independent, no polygon closes"
                      if rep.contradiction else "edge directions admit a closing relation")
            checks = [Check("stabiliser cycle closes", status, detail, rep.to_dict())]
            return checks, digest("graph", raw), {}
        G = graph.ToricGraph.from_dict(data)
    except graph.GraphError as exc:
        raise InputError(f"{input_path}: {exc}") from None
    return _graph_checks(G), digest("graph", raw), {"graph": G.to_dict(), "dot": graph.to_dot(G)}


# -- triple -----------------------------------------------------------------------

def _curvature(cfg: TripleConfig):
    if cfg.C is not None:
        return cfg.C
    if cfg.S is not None:
        try:
            return triples.curvature_from_potentials(cfg.B, cfg.S, cfg.D, cfg.B.grid())
        except triples.TripleError as exc:
            raise InputError(str(exc)) from None
    return None


def _oracle_checks(B, C, domain) -> list[Check]:
    lo, hi = domain
    ts = np.linspace(lo + triples.GRID_MARGIN, hi - triples.GRID_MARGIN, ORACLE_POINTS)
    sig = coframe.sigma_from_B(B)
    q = coframe.pairing_matrix(sig, sig, ts)
    err_q = float(np.max(np.abs(q - triples.gram_derivative(B, ts))))
    out = [Check.of("sigma_i ^ sigma_j = q_ij vol matches d/dt(B^T B)", err_q <= ORACLE_TOL,
                    max_abs_error=err_q)]
    if C is not None:
        F = coframe.sigma_from_B(C)
        r = coframe.pairing_matrix(F, sig, ts)
        err_r = float(np.max(np.abs(r - triples.cross_derivative(B, C, ts))))
        out.append(Check.of("F_i ^ sigma_j = r_ij vol matches d/dt(C^T B)", err_r <= ORACLE_TOL,
                            max_abs_error=err_r))
    return out


def _interval_check(cfg: TripleConfig, n_scan: int) -> Check:
    intervals = triples.pd_interval(cfg.B, cfg.scan_bracket, n_scan)
    if intervals:
        return Check("positive-definite intervals", "PASS",
                     ", ".join(f"({a:.10g}, {b:.10g})" for a, b in intervals),
                     {"intervals": intervals, "bracket": cfg.scan_bracket})
    neg = triples.nd_interval(cfg.B, cfg.scan_bracket, n_scan)
    detail = ("no positive region; negative-definite on "
              + ", ".join(f"({a:.10g}, {b:.10g})" for a, b in neg) + "; substitute t -> -t") if neg \
        else "no symplectic region"
    return Check("positive-definite intervals", "FAIL", detail, {"intervals": [], "negative_intervals": neg})


def cmd_triple(sub: str, config_path: str, grid: int = triples.DEFAULT_GRID):
    try:
        cfg = load_config(config_path)
    except ConfigError as exc:
        raise InputError(str(exc)) from None
    except OSError as exc:
        raise InputError(f"cannot read {config_path}: {exc}") from None
    n_scan = max(grid, triples.DEFAULT_SCAN)
    checks: list[Check] = []
    try:
        if sub == "interval":
            checks.append(_interval_check(cfg, n_scan))
        elif sub == "extend":
            if cfg.extension is None:
                raise InputError("config has no 'extension' section")
            if cfg.extension.kind == "su2":
                v = triples.extension_check_su2(cfg.B)
            else:
                v = triples.extension_check_circle(cfg.B, cfg.extension.m, cfg.extension.n)
            status = {"pass": "PASS", "fail": "FAIL", "unknown": "UNKNOWN"}[v.status]
            checks.append(Check(f"{v.kind} singular-orbit extension", status, "; ".join(v.reasons), v.numbers))
        elif sub in ("check", "curvature"):
            if sub == "curvature" and cfg.S is None:
                raise InputError("curvature needs 'S' (and optionally 'D') in the config")
            C = _curvature(cfg)
            ts = cfg.B.grid(grid)
            if sub == "check":
                checks.append(_interval_check(cfg, n_scan))
                rep = triples.analyse(cfg.B, None, grid, n_scan)
                inv = rep.invertibility
                checks.append(Check(
                    "B invertible on positive-definite intervals",
                    "PASS" if inv.applicable and inv.invertible else "FAIL" if inv.applicable else "UNKNOWN",
                    inv.note, {"min_abs_det": inv.min_abs_det, "samples": inv.samples}))
                for col in rep.monotonicity:
                    checks.append(Check.of(
                        f"column {col.column}: |b_.{col.column}|^2 monotone on pd intervals",
                        col.monotone_on_pd, col.direction, sign_changes=col.sign_changes))
                checks.extend(_oracle_checks(cfg.B, C, cfg.domain))
            if C is not None:
                res = triples.symmetry_residual(cfg.B, C, ts)
                checks.append(Check.of("d/dt(C^T B) symmetric", res <= SYMMETRY_TOL, "", residual=res))
                checks.append(Check("curvature periods", "INFO",
                                    "C may be rescaled by a constant so that the periods are integral"))
        else:
            raise InputError(f"unknown triple subcommand {sub!r}")
    except triples.TripleError as exc:
        raise InputError(str(exc)) from None
    return checks, digest("triple", sub, grid, cfg.raw), {}


# -- entry point ------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="multitoric", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify-models", help="exact multi-moment map identities on the flat models")
    p.add_argument("--geometry", choices=[g.label for g in models.Geometry])
    p.add_argument("--json", metavar="PATH")

    p = sub.add_parser("graph", help="toric image graphs and stabiliser cycles")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--model", choices=["cy"])
    src.add_argument("--input", metavar="PATH")
    p.add_argument("--dot", metavar="PATH")
    p.add_argument("--json", metavar="PATH")

    p = sub.add_parser("triple", help="weakly coherent triples on R x SU(2)")
    p.add_argument("action", choices=["check", "interval", "extend", "curvature"])
    p.add_argument("--config", required=True, metavar="PATH")
    p.add_argument("--grid", type=int, default=triples.DEFAULT_GRID)
    p.add_argument("--json", metavar="PATH")
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "verify-models":
            checks, dig, artifacts = cmd_verify_models(args.geometry)
            name = "verify-models"
        elif args.command == "graph":
            checks, dig, artifacts = cmd_graph(args.model, args.input)
            name = "graph"
            if args.dot and "dot" in artifacts:
                Path(args.dot).write_text(artifacts["dot"])
        else:
            if args.grid < 8:
                raise InputError("--grid must be at least 8")
            checks, dig, artifacts = cmd_triple(args.action, args.config, args.grid)
            name = f"triple {args.action}"
    except (InputError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    doc = build_report(name, dig, checks, artifacts)
    text = json.dumps(doc, indent=2)
    if args.json:
        Path(args.json).write_text(text + "\n")
        for c in checks:
            print(f"{c.status:7s} {c.name}" + (f"  [{c.details}]" if c.details and c.status != "PASS" else ""))
    else:
        print(text)
    return 0 if all_passed(checks) else 1


if __name__ == "__main__":
    sys.exit(main())
