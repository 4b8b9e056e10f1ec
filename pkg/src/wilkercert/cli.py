"""Command-line front end; the package's only I/O surface.

Exit codes: 0 the claim is Proved / the bound holds / the computation
succeeded; 1 Falsified (a witness exists); 2 Inconclusive; 3 usage or domain
error.  All numeric output is fixed at 12 significant digits so golden files
reproduce byte-identically apart from the timestamp.

Defaults can be overridden by a key=value config file named either by
--config or by the WILKERCERT_CONFIG environment variable; command-line flags
win over the file.  Recognized keys: max_depth, window_lo, window_hi,
min_width, sample_points, precision.
"""

from __future__ import annotations

import argparse
import math
import os
import sys
from typing import Optional

from .certify import (
    Certificate,
    CertifyConfig,
    CertStatus,
    prove_sign,
    statement_problems,
    verify_statement,
)
from .errors import WilkercertError
from .kernels import Params
from .means import bound_check
from .report import RunReport, certificate_dict, fmt12
from .sharpness import (
    closed_thresholds,
    confirm_crossing,
    crossing_point,
    crossing_sign_pattern,
    empirical_threshold,
    falsify,
)
from .statements import get_statement

ENV_CONFIG = "WILKERCERT_CONFIG"

EXIT_PROVED = 0
EXIT_FALSIFIED = 1
EXIT_INCONCLUSIVE = 2
EXIT_USAGE = 3

_CERT_EXIT = {
    CertStatus.PROVED: EXIT_PROVED,
    CertStatus.FALSIFIED: EXIT_FALSIFIED,
    CertStatus.INCONCLUSIVE: EXIT_INCONCLUSIVE,
}

_CONFIG_KEYS = {
    "max_depth": int,
    "window_lo": float,
    "window_hi": float,
    "min_width": float,
    "sample_points": int,
    "precision": str,
}


def load_config_file(path: str) -> dict:
    values = {}
    with open(path, "r", encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, 1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise ValueError(f"{path}:{lineno}: expected key=value, got {raw.rstrip()!r}")
            key, val = (part.strip() for part in line.split("=", 1))
            if key not in _CONFIG_KEYS:
                raise ValueError(f"{path}:{lineno}: unknown config key {key!r}")
            values[key] = _CONFIG_KEYS[key](val)
    return values


def build_config(args) -> CertifyConfig:
    config = CertifyConfig()
    path = getattr(args, "config", None) or os.environ.get(ENV_CONFIG)
    if path:
        for key, val in load_config_file(path).items():
            setattr(config, key, val)
    for key in _CONFIG_KEYS:
        flag = getattr(args, key, None)
        if flag is not None:
            setattr(config, key, flag)
    if getattr(args, "samples", None):
        config.sample_points = args.samples
    config.validate()
    return config


def _add_common(parser: argparse.ArgumentParser, needs_p: bool = True):
    parser.add_argument("--stmt", required=True, help="statement id, e.g. main1, ph_km3, chain_yang3t")
    parser.add_argument("--k", required=True, help="family parameter k (decimal or fraction like -4/5)")
    if needs_p:
        parser.add_argument("--p", required=True, help="exponent p (decimal or fraction like -4/5)")


def _add_output(parser: argparse.ArgumentParser):
    parser.add_argument("--format", choices=("json", "csv", "text"), default="text")
    parser.add_argument("--output", default=None, help="output path (default stdout)")
    parser.add_argument("--config", default=None, help=f"key=value config file (or ${ENV_CONFIG})")
    parser.add_argument("--max-depth", dest="max_depth", type=int, default=None)
    parser.add_argument("--min-width", dest="min_width", type=float, default=None)
    parser.add_argument("--window-lo", dest="window_lo", type=float, default=None)
    parser.add_argument("--window-hi", dest="window_hi", type=float, default=None)


def build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(
        prog="wilkercert",
        description="certified verification of the two-parameter Wilker-type inequality families",
    )
    sub = top.add_subparsers(dest="cmd", required=True)

    p = sub.add_parser("verify", help="verify a statement at (k, p)")
    _add_common(p)
    p.add_argument("--mode", choices=("certified", "sampled"), default="certified")
    p.add_argument("--window", default=None, help="lo,hi: certify this window only (guards skipped)")
    p.add_argument("--samples", type=int, default=None)
    _add_output(p)

    p = sub.add_parser("sharpness", help="closed-form and empirically recovered thresholds")
    _add_common(p, needs_p=False)
    p.add_argument("--tol", type=float, default=1e-4)
    _add_output(p)

    p = sub.add_parser("falsify", help="search for a witness where the statement fails")
    _add_common(p)
    _add_output(p)

    p = sub.add_parser("means", help="check a corollary mean bound at an exponent")
    p.add_argument("--check", required=True,
                   help="one of P_AG, T_AQ, L_AG, NS_AQ, Yang1t, Yang2t, Yang1h, Yang2h")
    p.add_argument("--exponent", required=True, type=float)
    p.add_argument("--side", choices=("lower", "upper"), required=True)
    p.add_argument("--samples", type=int, default=1000)
    _add_output(p)

    p = sub.add_parser("scan", help="scan p and emit a CSV verdict grid")
    _add_common(p, needs_p=False)
    p.add_argument("--p-from", dest="p_from", required=True, type=float)
    p.add_argument("--p-to", dest="p_to", required=True, type=float)
    p.add_argument("--steps", required=True, type=int)
    p.add_argument("--mode", choices=("certified", "sampled"), default="sampled")
    p.add_argument("--samples", type=int, default=None)
    _add_output(p)

    p = sub.add_parser("crossing", help="locate the unique sign change of the hyperbolic form")
    p.add_argument("--k", required=True)
    p.add_argument("--p", required=True)
    p.add_argument("--tol", type=float, default=1e-12)
    _add_output(p)

    return top


def _emit(args, report: RunReport) -> None:
    from .report import emit_report

    emit_report(report, args.format, args.output)


def _cmd_verify(args, config: CertifyConfig) -> int:
    params = Params(args.k, args.p)
    spec = get_statement(args.stmt)
    if args.window:
        lo, hi = (float(v) for v in args.window.split(","))
        cert: Optional[Certificate] = None
        for _name, prob, claim in statement_problems(spec, params):
            sub = prove_sign(prob, claim, (lo, hi), config)
            if cert is None or _CERT_EXIT[sub.status] > _CERT_EXIT[cert.status]:
                cert = sub
        cert.statement = spec.id.value
        cert.params = (params.k, params.p)
        cert.notes.append("window-restricted run: endpoint guards not consulted")
    else:
        cert = verify_statement(spec, params, mode=args.mode, config=config)
    report = RunReport(
        command="verify",
        statement=spec.id.value,
        params={"k": params.k, "p": params.p},
        mode=cert.mode,
        certificate=certificate_dict(cert),
        precision_used=cert.precision_used,
    )
    _emit(args, report)
    return _CERT_EXIT[cert.status]


def _cmd_sharpness(args, config: CertifyConfig) -> int:
    consts = closed_thresholds(args.k)
    empirical = empirical_threshold(args.stmt, float(Params(args.k, 1).k), tol=args.tol, config=config)
    report = RunReport(
        command="sharpness",
        statement=get_statement(args.stmt).id.value,
        params={"k": consts.k},
        thresholds={
            "trig_threshold": consts.trig_threshold,
            "series_threshold": consts.series_threshold,
            "lemma3_ok": consts.lemma3_ok,
        },
        result={"empirical_threshold": empirical, "tol": args.tol},
        precision_used=config.precision + "+grid",
    )
    _emit(args, report)
    return EXIT_PROVED


def _cmd_falsify(args, config: CertifyConfig) -> int:
    params = Params(args.k, args.p)
    spec = get_statement(args.stmt)
    witness = falsify(spec, params, config=config)
    report = RunReport(
        command="falsify",
        statement=spec.id.value,
        params={"k": params.k, "p": params.p},
        result={"witness": witness, "found": witness is not None},
        precision_used=config.precision,
    )
    _emit(args, report)
    return EXIT_FALSIFIED if witness is not None else EXIT_PROVED


def _cmd_means(args, config: CertifyConfig) -> int:
    res = bound_check(args.check, args.exponent, args.side, samples=args.samples)
    report = RunReport(
        command="means",
        statement=res.which,
        result={
            "exponent": res.exponent,
            "side": res.side,
            "holds": res.holds,
            "worst_margin": res.worst_margin,
            "worst_at": res.worst_at,
            "samples": res.samples,
        },
        precision_used="float64+grid",
    )
    _emit(args, report)
    return EXIT_PROVED if res.holds else EXIT_FALSIFIED


def _cmd_scan(args, config: CertifyConfig) -> int:
    spec = get_statement(args.stmt)
    if args.steps < 2:
        raise WilkercertError("scan needs at least 2 steps")
    rows = []
    for i in range(args.steps):
        pval = args.p_from + (args.p_to - args.p_from) * i / (args.steps - 1)
        params = Params(args.k, pval)
        try:
            cert = verify_statement(spec, params, mode=args.mode, config=config)
            rows.append(
                {
                    "k": params.k,
                    "p": params.p,
                    "verdict": cert.status.value,
                    "witness": cert.witness,
                    "min_margin": None if math.isinf(cert.min_margin) else cert.min_margin,
                }
            )
        except WilkercertError as exc:
            rows.append({"k": params.k, "p": pval, "verdict": f"error:{type(exc).__name__}",
                         "witness": None, "min_margin": None})
    report = RunReport(
        command="scan",
        statement=spec.id.value,
        params={"k": float(Params(args.k, 1).k)},
        mode=args.mode,
        scan_rows=rows,
        precision_used=config.precision + ("+grid" if args.mode == "sampled" else ""),
    )
    if args.format == "text":
        args.format = "csv"          # scans are grids; text mode offers nothing extra
    _emit(args, report)
    return EXIT_PROVED


def _cmd_crossing(args, config: CertifyConfig) -> int:
    params = Params(args.k, args.p)
    x0 = crossing_point(params.k, params.p, tol=args.tol)
    resid = confirm_crossing(params.k, params.p, x0)
    changes = crossing_sign_pattern(params.k, params.p)
    report = RunReport(
        command="crossing",
        params={"k": params.k, "p": params.p},
        result={
            "x0": x0,
            "residual": resid,
            "sign_changes_on_grid": changes,
            "tol": args.tol,
        },
        precision_used="float64+mp-confirm",
    )
    _emit(args, report)
    return EXIT_PROVED if changes == 1 else EXIT_INCONCLUSIVE


_COMMANDS = {
    "verify": _cmd_verify,
    "sharpness": _cmd_sharpness,
    "falsify": _cmd_falsify,
    "means": _cmd_means,
    "scan": _cmd_scan,
    "crossing": _cmd_crossing,
}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else 0
    try:
        config = build_config(args)
        return _COMMANDS[args.cmd](args, config)
    except WilkercertError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (ValueError, OSError, ZeroDivisionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
