"""Command line interface.

Exit codes: 0 success, 1 validation failures, 2 usage or input error.
"""

from __future__ import annotations

import argparse
import logging
import sys

from . import emit
from .checks import check_group, sweep
from .errors import InternalInconsistency, McKayError
from .group import make_group

FORMATS = {
    "special": ("text", "json"),
    "resolve": ("text", "json", "dot", "svg"),
    "clusters": ("text", "json"),
    "quiver": ("text", "json", "dot"),
    "check": ("text", "json"),
    "report": ("text", "json"),
}


class UsageError(Exception):
    pass


def _global_flags(parser: argparse.ArgumentParser, suppress: bool):
    default = argparse.SUPPRESS
    parser.add_argument("--format", choices=("json", "dot", "text", "svg"),
                        default=default if suppress else "text", help="output format (default: text)")
    parser.add_argument("--quiet", action="store_true",
                        default=default if suppress else False, help="suppress non-essential output")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cyclic-mckay",
        description="Special McKay correspondence for cyclic quotient surface singularities C^2/C_{r,a}.",
    )
    _global_flags(parser, suppress=False)
    sub = parser.add_subparsers(dest="command", required=True)

    def group_cmd(name, help_text):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("r", type=int, help="group order")
        p.add_argument("a", type=int, help="weight of y (gcd(r, a) = 1)")
        _global_flags(p, suppress=True)
        return p

    group_cmd("special", "special representations via B(G) and L(G)")
    group_cmd("resolve", "Hirzebruch-Jung expansion, Newton boundary, fan charts")
    group_cmd("clusters", "torus-fixed G-clusters, ideals, cotangent spaces")
    group_cmd("quiver", "McKay tensor matrix and quiver")
    report = group_cmd("report", "write the full report bundle to a directory")
    report.add_argument("-o", "--out", required=True, metavar="DIR", help="output directory")

    check = sub.add_parser("check", help="cross-validate one group or sweep all small groups")
    check.add_argument("r", type=int, nargs="?")
    check.add_argument("a", type=int, nargs="?")
    check.add_argument("--sweep", type=int, metavar="RMAX", help="check every small (r, a) with r <= RMAX")
    check.add_argument("--jobs", type=int, default=1, help="worker processes for --sweep")
    _global_flags(check, suppress=True)
    return parser


def _write(text: str):
    sys.stdout.write(text)


def _run(args) -> int:
    fmt = args.format
    if fmt not in FORMATS[args.command]:
        raise UsageError(f"--format {fmt} is not available for '{args.command}'")

    if args.command == "check":
        if args.sweep is not None:
            if args.r is not None:
                raise UsageError("give either R A or --sweep RMAX, not both")
            if args.sweep < 2 or args.jobs < 1:
                raise UsageError("--sweep needs RMAX >= 2 and --jobs >= 1")
            reports = sweep(args.sweep, jobs=args.jobs)
            failed = [rep for rep in reports if not rep.ok]
            if fmt == "json":
                _write(emit.dumps({
                    "r_max": args.sweep,
                    "groups": len(reports),
                    "failed": len(failed),
                    "reports": [rep.to_dict() for rep in reports],
                }))
            else:
                if not args.quiet:
                    for rep in failed:
                        _write(emit.check_text(rep))
                _write(f"sweep r <= {args.sweep}: {len(reports) - len(failed)}/{len(reports)} groups pass\n")
            return 1 if failed else 0
        if args.r is None or args.a is None:
            raise UsageError("check needs R A or --sweep RMAX")
        report = check_group(make_group(args.r, args.a))
        if fmt == "json":
            _write(emit.dumps(report.to_dict()))
        elif not args.quiet or not report.ok:
            _write(emit.check_text(report))
        return 0 if report.ok else 1

    G = make_group(args.r, args.a)
    if args.command == "report":
        bundle = emit.emit(G, args.out)
        if fmt == "json":
            _write(emit.dumps({"directory": str(args.out), "files": sorted(bundle.files()),
                               "status": "pass" if bundle.ok else "fail"}))
        elif not args.quiet:
            for name in bundle.files():
                _write(f"{args.out}/{name}\n")
        return 0 if bundle.ok else 1

    renderers = {
        "special": {"text": emit.specials_text, "json": emit.specials_document},
        "resolve": {"text": emit.resolution_text, "json": emit.resolution_document,
                    "dot": emit.dual_graph_dot, "svg": emit.newton_svg},
        "clusters": {"text": emit.clusters_text, "json": emit.clusters_document},
        "quiver": {"text": emit.quiver_text, "json": emit.quiver_document, "dot": emit.quiver_dot},
    }
    out = renderers[args.command][fmt](G)
    if fmt == "json":
        out = emit.dumps({"group": {"r": G.r, "a": G.a}, **out})
    _write(out)
    return 0


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    logging.basicConfig(level=logging.ERROR if args.quiet else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        return _run(args)
    except InternalInconsistency as exc:
        print(f"validation failure: {exc}", file=sys.stderr)
        return 1
    except (McKayError, UsageError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: cannot write output: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
