"""Command-line front end for the verification suites.

Runs in-process by default; ``verify --server URL`` delegates to a
running service instance and renders its report identically.  Exit
codes: 0 when every check passes, 1 when any check fails, 2 for
configuration or parse errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .algebra.parse import ParseError, parse_poly
from .checks import (
    DEFAULT_LAMBDA_TEXTS,
    PARSE_VARS,
    SUITE_DESCRIPTIONS,
    SUITE_NAMES,
    ConfigError,
    attach_meta,
    build_config,
    parse_parameter,
    report_document,
    run_suite,
)


def _render_human(doc: dict) -> str:
    config = doc["config"]
    lines = [
        "suite {suite}  slopes [{lams}]  shear-seed {seed}  jobs {jobs}".format(
            suite=config["suite"],
            lams=", ".join(config["lambdas"]),
            seed=config["shear_seed"],
            jobs=config["jobs"],
        )
    ]
    for result in doc["results"]:
        lines.append(f"[{result['status']}] {result['id']}: {result['computed']}")
        if result["status"] == "FAIL":
            lines.append(f"       expected: {result['expected']}")
            for witness in result["witnesses"]:
                lines.append(f"       witness: {witness}")
    summary = doc["summary"]
    lines.append(
        f"{summary['pass']} passed, {summary['fail']} failed, "
        f"{summary['info']} informational"
    )
    return "\n".join(lines)


def _remote_verify(server: str, config) -> tuple[int, dict | None]:
    import httpx

    payload = {
        "suite": config.suite,
        "lambdas": [str(p) for p in config.lambdas],
        "shear_seed": config.shear_seed,
        "jobs": config.jobs,
    }
    try:
        response = httpx.post(
            server.rstrip("/") + "/verify", json=payload, timeout=600.0
        )
    except httpx.HTTPError as exc:
        print(f"error: cannot reach {server}: {exc}", file=sys.stderr)
        return 2, None
    if response.status_code == 400:
        detail = response.json().get("detail", response.text)
        print(f"error: {detail}", file=sys.stderr)
        return 2, None
    if response.status_code != 200:
        print(
            f"error: server returned {response.status_code}: {response.text}",
            file=sys.stderr,
        )
        return 2, None
    return 0, response.json()


def _cmd_verify(args: argparse.Namespace) -> int:
    try:
        config = build_config(
            args.suite,
            args.lambdas,
            shear_seed=args.shear_seed,
            jobs=args.jobs,
            out_format="json" if args.json else "human",
        )
    except ConfigError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if args.server:
        code, doc = _remote_verify(args.server, config)
        if doc is None:
            return code
    else:
        report = run_suite(config)
        doc = attach_meta(report_document(report), report)
    text = json.dumps(doc, indent=2) if config.out_format == "json" else _render_human(doc)
    if args.out:
        Path(args.out).write_text(text + "\n", encoding="utf-8")
        summary = doc["summary"]
        print(
            f"wrote {args.out}: {summary['pass']} passed, "
            f"{summary['fail']} failed, {summary['info']} informational"
        )
    else:
        print(text)
    return 1 if doc["summary"]["fail"] else 0


def _cmd_list_suites(args: argparse.Namespace) -> int:
    width = max(len(name) for name in SUITE_DESCRIPTIONS)
    for name in SUITE_NAMES + ("all",):
        print(f"{name:<{width}}  {SUITE_DESCRIPTIONS[name]}")
    return 0


def _cmd_parse(args: argparse.Namespace) -> int:
    try:
        form = parse_poly(args.poly, PARSE_VARS)
        if args.slope is not None:
            param = parse_parameter(args.slope)
            form = form.subs({"l0": param.lam0, "l1": param.lam1})
    except (ParseError, ConfigError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    print(form.restrict_to_used())
    return 0


def _cmd_serve(args: argparse.Namespace) -> int:
    import uvicorn

    from .service import app

    uvicorn.run(app, host=args.host, port=args.port)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hesselab",
        description="exact verification of a pencil of plane cubics and its "
        "degenerate fibers",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    verify = sub.add_parser("verify", help="run one suite (or all) and report")
    verify.add_argument("suite", help="suite name, or 'all'")
    verify.add_argument(
        "--lambda",
        dest="lambdas",
        action="append",
        metavar="SLOPE",
        help="pencil slope to audit; repeatable; default "
        + " ".join(DEFAULT_LAMBDA_TEXTS)
        + "; write --lambda=-5/3 for negative fractions",
    )
    verify.add_argument("--json", action="store_true", help="emit the JSON report")
    verify.add_argument("--out", metavar="PATH", help="write the report to a file")
    verify.add_argument(
        "--shear-seed",
        type=int,
        default=0,
        metavar="N",
        help="starting shear for intersection separations (default 0)",
    )
    verify.add_argument(
        "--jobs",
        type=int,
        default=None,
        metavar="N",
        help="concurrent check blocks (default HESSE_LAB_JOBS or 1)",
    )
    verify.add_argument(
        "--server",
        metavar="URL",
        help="delegate the run to a service instance at URL",
    )
    verify.set_defaults(func=_cmd_verify)

    lister = sub.add_parser("list-suites", help="list suites with descriptions")
    lister.set_defaults(func=_cmd_list_suites)

    parse = sub.add_parser(
        "parse", help="parse a polynomial over the field and print it canonically"
    )
    parse.add_argument("poly", help="expression in y1, y2, y3, l0, l1, and w")
    parse.add_argument(
        "--lambda",
        dest="slope",
        metavar="SLOPE",
        help="substitute the pencil weights for this slope",
    )
    parse.set_defaults(func=_cmd_parse)

    serve = sub.add_parser("serve", help="run the verification service")
    serve.add_argument("--host", default="127.0.0.1")
    serve.add_argument("--port", type=int, default=8351)
    serve.set_defaults(func=_cmd_serve)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
