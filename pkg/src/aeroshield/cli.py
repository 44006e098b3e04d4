"""Command line interface.

Subcommands share one engine path with the HTTP API, so both surfaces give
numerically identical answers.  Exit codes: 0 success, 2 usage errors
(unknown scenario or flag, unreadable config), 3 computation domain errors.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from .config import load_config
from .engine import DEFAULT_PROFILE_POINTS, Engine, PREMIUM_MODE_EXACT, PREMIUM_MODE_MC
from .errors import ConfigError, DomainError, UnknownScenarioError
from .formatting import format_usd
from .runlog import DEFAULT_LOG_ENV, DEFAULT_LOG_FILENAME, RunLog, record_from_plan

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_DOMAIN = 3


def _json_dumps(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="aeroshield",
        description="Radiation risk-cost decisions for flights during solar proton events",
    )
    parser.add_argument("--config", metavar="PATH", help="JSON config overriding the defaults")
    sub = parser.add_subparsers(dest="command", required=True)

    dose = sub.add_parser("dose", help="event dose at a flight altitude")
    dose.add_argument("--scenario", required=True)
    dose.add_argument("--altitude-km", type=float, required=True)
    dose.add_argument("--mode", choices=["anchor", "energy"], default=None)
    dose.add_argument("--json", action="store_true")

    plan = sub.add_parser("plan", help="evaluate mitigation plans and recommend one")
    plan.add_argument("--scenario", required=True)
    plan.add_argument("--limit-msv", type=float, required=True)
    plan.add_argument("--altitudes", type=float, nargs="+", default=None, metavar="KM")
    plan.add_argument("--continuous", action="store_true",
                      help="add the highest compliant altitude as a candidate")
    plan.add_argument("--json", action="store_true")
    plan.add_argument("--log", metavar="PATH", default=None,
                      help=f"append the recommendation to this run log "
                           f"(default: ${DEFAULT_LOG_ENV} if set)")

    profile = sub.add_parser("profile", help="dose-depth curve rows for plotting")
    profile.add_argument("--scenario", required=True)
    profile.add_argument("--points", type=int, default=DEFAULT_PROFILE_POINTS)
    profile.add_argument("--format", choices=["csv", "json"], default="csv")

    premium = sub.add_parser("premium", help="insurance premium over the insurable catalog")
    premium.add_argument("--limit-msv", type=float, required=True)
    premium.add_argument("--mode", choices=[PREMIUM_MODE_EXACT, PREMIUM_MODE_MC],
                         default=PREMIUM_MODE_EXACT)
    premium.add_argument("--years", type=int, default=10_000)
    premium.add_argument("--seed", type=int, default=0)
    premium.add_argument("--exposure", type=float, default=1.0,
                         help="probability an occurring event affects the flight")
    premium.add_argument("--json", action="store_true")

    serve = sub.add_parser("serve", help="run the HTTP JSON API")
    serve.add_argument("--port", type=int, default=8080)
    serve.add_argument("--host", default="127.0.0.1")
    serve.add_argument("--log", metavar="PATH", default=None,
                       help=f"run log path (default: ${DEFAULT_LOG_ENV} or ./{DEFAULT_LOG_FILENAME})")

    report = sub.add_parser("report", help="write profile CSVs and figures to a directory")
    report.add_argument("--scenario", required=True)
    report.add_argument("--out-dir", required=True)
    report.add_argument("--points", type=int, default=DEFAULT_PROFILE_POINTS)

    return parser


def _resolve_log_path(flag_value: str | None, default_to_cwd: bool = False) -> Path | None:
    if flag_value:
        return Path(flag_value)
    env = os.environ.get(DEFAULT_LOG_ENV)
    if env:
        return Path(env)
    return Path(DEFAULT_LOG_FILENAME) if default_to_cwd else None


def _cmd_dose(engine: Engine, args) -> int:
    report = engine.dose_report(args.scenario, args.altitude_km, args.mode)
    if args.json:
        print(_json_dumps(report))
        return EXIT_OK
    print(f"scenario: {report['scenario']['id']}")
    print(f"altitude: {args.altitude_km:g} km (depth {report['depth_gcm2']:g} g/cm2)")
    note = " [extrapolated]" if report["extrapolated"] else ""
    print(f"dose: {report['dose_msv']} (band: {report['band']}){note}")
    return EXIT_OK


def _cmd_plan(engine: Engine, args) -> int:
    report = engine.plan_report(args.scenario, args.limit_msv, args.altitudes, args.continuous)
    log_path = _resolve_log_path(args.log)
    if log_path is not None:
        log = RunLog(log_path)
        log.append(record_from_plan(report, report["config_hash"]))
    if args.json:
        print(_json_dumps(report))
        return EXIT_OK
    print(f"scenario: {report['scenario']['id']} (limit {args.limit_msv:g} mSv)")
    for ev in report["evaluations"]:
        mark = "ok " if ev["compliant"] else "X  "
        print(
            f"  {mark} {ev['plan']['label']:<22} dose {ev['dose_msv']:<12} "
            f"band {ev['band']:<22} loss {ev['loss_usd']}"
        )
    rec = report["recommendation"]
    print(f"recommendation: {rec['plan']['label']}, loss {rec['loss_usd']}")
    if report["continuous_optimum"]:
        opt = report["continuous_optimum"]
        print(f"continuous optimum: {opt['plan']['label']}, loss {opt['loss_usd']}")
    return EXIT_OK


def _cmd_profile(engine: Engine, args) -> int:
    rows = engine.profile_rows(args.scenario, args.points)
    if args.format == "json":
        print(_json_dumps(engine.profile_report(args.scenario, args.points)))
        return EXIT_OK
    print("depth_gcm2,altitude_km,dose_sv")
    for row in rows:
        print(f"{row['depth_gcm2']!r},{row['altitude_km']!r},{row['dose_sv']!r}")
    return EXIT_OK


def _cmd_premium(engine: Engine, args) -> int:
    report = engine.premium_report(
        args.limit_msv, args.mode, years=args.years, seed=args.seed,
        exposure_fraction=args.exposure,
    )
    if args.json:
        print(_json_dumps(report))
        return EXIT_OK
    print(f"limit: {args.limit_msv:g} mSv, exposure fraction {args.exposure:g}")
    for item in report["items"]:
        print(
            f"  {item['scenario']:<20} frequency {item['annual_frequency']:.6g}/yr"
            f"  severity {item['severity_usd']}"
        )
    if args.mode == PREMIUM_MODE_MC:
        print(
            f"premium: {report['premium_usd']}/yr "
            f"(MC over {report['n_years']} years, seed {report['seed']}, "
            f"standard error {format_usd(report['standard_error_cents'])}/yr)"
        )
    else:
        print(f"premium: {report['premium_usd']}/yr (exact)")
    return EXIT_OK


def _cmd_serve(engine: Engine, args) -> int:
    import uvicorn

    from .server import create_app

    log = RunLog(_resolve_log_path(args.log, default_to_cwd=True))
    log.ensure_writable()
    app = create_app(engine, log)
    uvicorn.run(app, host=args.host, port=args.port, log_level="info")
    return EXIT_OK


def _cmd_report(engine: Engine, args) -> int:
    from .report import write_report

    paths = write_report(engine, args.scenario, args.out_dir, args.points)
    for path in paths:
        print(path)
    return EXIT_OK


_COMMANDS = {
    "dose": _cmd_dose,
    "plan": _cmd_plan,
    "profile": _cmd_profile,
    "premium": _cmd_premium,
    "serve": _cmd_serve,
    "report": _cmd_report,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse exits 2 on usage errors
        return int(exc.code or 0)
    try:
        engine = Engine(load_config(args.config))
    except ConfigError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    try:
        return _COMMANDS[args.command](engine, args)
    except UnknownScenarioError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (DomainError, ConfigError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN


def entrypoint() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entrypoint()
