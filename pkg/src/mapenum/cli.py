"""Command-line front end: ``mapenum enumerate | oracle | verify``."""

from __future__ import annotations

import argparse
import json
import sys
import time

from mapenum import __version__
from mapenum.errors import CountOverflowError, ProfileError, WorkloadError
from mapenum.oracles import chi_coefficients, genus_coefficients, goulden_jackson, harer_zagier
from mapenum.oriented import enumerate_oriented, enumerate_oriented_moments
from mapenum.parallel import default_threads
from mapenum.perm import double_factorial
from mapenum.profile import DegreeProfile
from mapenum.report import RunReport
from mapenum.unoriented import enumerate_unoriented, enumerate_unoriented_moments
from mapenum.verify import SUITES, run_suite
from mapenum.wick import MomentSpec, goe_moment, gue_moment

WORKLOAD_LIMIT = 10**9

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_PROFILE = 2
EXIT_OVERFLOW = 3
EXIT_WORKLOAD = 4


def _threads(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("threads must be >= 1")
    return value


def workload(profile: DegreeProfile, mode: str) -> int:
    space = double_factorial(profile.total_darts - 1)
    return space << profile.edges if mode == "unoriented" else space


def run_enumeration(
    profile: DegreeProfile,
    mode: str,
    threads: int = 1,
    include_disconnected: bool = False,
    force: bool = False,
    progress=None,
) -> RunReport:
    profile.require_enumerable()
    estimate = workload(profile, mode)
    if estimate > WORKLOAD_LIMIT and not force:
        raise WorkloadError(
            f"{estimate} {'signed ' if mode == 'unoriented' else ''}matchings exceed "
            f"{WORKLOAD_LIMIT}; pass --force to run anyway",
            estimate,
        )
    start = time.perf_counter()
    if include_disconnected:
        fn = enumerate_oriented_moments if mode == "oriented" else enumerate_unoriented_moments
        hist = fn(profile, threads, progress)
        bins, totals, report_mode = hist.bins, {"matchings": hist.total}, "moments"
    elif mode == "oriented":
        hist = enumerate_oriented(profile, threads, progress)
        bins, report_mode = hist.bins, "oriented"
        totals = {
            "connected": hist.total_connected,
            "disconnected": hist.disconnected,
            "matchings": hist.total_matchings,
        }
    else:
        hist = enumerate_unoriented(profile, threads, progress)
        bins, report_mode = hist.bins, "unoriented"
        totals = {
            "connected": hist.total_connected,
            "disconnected": hist.disconnected,
            "signed_matchings": hist.total_signed_matchings,
        }
    elapsed = (time.perf_counter() - start) * 1000.0
    return RunReport(
        profile=profile.as_dict(),
        mode=report_mode,
        bins=bins,
        totals=totals,
        elapsed_ms=round(elapsed, 3),
        threads=threads,
        orientation=mode,
    )


def cmd_enumerate(args) -> int:
    try:
        profile = DegreeProfile.parse(args.degrees)
    except ProfileError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PROFILE

    def progress(visited, shards):
        print(f"progress: {visited:,} matchings", file=sys.stderr, flush=True)

    try:
        report = run_enumeration(
            profile,
            args.mode,
            threads=args.threads,
            include_disconnected=args.include_disconnected,
            force=args.force,
            progress=None if args.quiet else progress,
        )
    except ProfileError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PROFILE
    except WorkloadError as exc:
        print(f"error: {exc}", file=sys.stderr)
        print(f"estimate: {exc.estimate}", file=sys.stderr)
        return EXIT_WORKLOAD
    except CountOverflowError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_OVERFLOW
    sys.stdout.write(report.render(args.format))
    if args.plot:
        from mapenum.plotting import plot_report

        path = plot_report(report, args.plot)
        if not args.quiet:
            print(f"figure written to {path}", file=sys.stderr)
    return EXIT_OK


def oracle_report(formula: str, n: int) -> dict:
    if formula == "hz":
        poly, key, coeffs = harer_zagier(n), "g", genus_coefficients(n)
    else:
        poly, key, coeffs = goulden_jackson(n), "chi", chi_coefficients(n)
    return {
        "formula": formula,
        "n": n,
        "key": key,
        "coefficients": {str(k): v for k, v in sorted(coeffs.items(), reverse=key == "chi")},
        "polynomial": poly.integer_coefficients(),
        "text": str(poly),
    }


def cmd_oracle(args) -> int:
    if args.n < 1:
        print(f"error: n must be >= 1, got {args.n}", file=sys.stderr)
        return EXIT_PROFILE
    rep = oracle_report(args.formula, args.n)
    if args.format == "json":
        print(json.dumps(rep, indent=2))
        return EXIT_OK
    name = "G" if args.formula == "hz" else "F"
    print(f"{name}_{args.n}(N) = {rep['text']}")
    for k, v in rep["coefficients"].items():
        print(f"{rep['key']}={k}: {v}")
    return EXIT_OK


def cmd_verify(args) -> int:
    failures = total = 0
    for check in run_suite(args.suite, args.max_edges, args.threads):
        total += 1
        failures += not check.passed
        print(check.line(), flush=True)
    print(f"{total - failures}/{total} checks passed")
    return EXIT_FAIL if failures else EXIT_OK


def cmd_wick(args) -> int:
    try:
        spec = MomentSpec(DegreeProfile.parse(args.degrees), args.n)
    except (ProfileError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PROFILE
    fn = gue_moment if args.ensemble == "gue" else goe_moment
    print(fn(spec))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="mapenum", description="Count labeled maps by genus or Euler characteristic."
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, metavar="{enumerate,oracle,verify}")

    p = sub.add_parser("enumerate", help="enumerate maps with a degree profile")
    p.add_argument("--mode", choices=("oriented", "unoriented"), default="oriented")
    p.add_argument("--degrees", required=True, help='degree list "3,3,4" or map form "3:2,4:1"')
    p.add_argument("--threads", type=_threads, default=default_threads())
    p.add_argument("--format", choices=("table", "json", "csv"), default="table")
    p.add_argument(
        "--include-disconnected",
        action="store_true",
        help="bin every matching by face count instead of connected maps by genus/chi",
    )
    p.add_argument("--force", action="store_true", help=f"allow more than {WORKLOAD_LIMIT:.0e} matchings")
    p.add_argument("--quiet", action="store_true", help="no progress output on stderr")
    p.add_argument("--plot", metavar="PATH", help="also write a bar chart of the histogram")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("oracle", help="evaluate the one-vertex closed forms")
    p.add_argument("--formula", choices=("hz", "gj"), required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--format", choices=("table", "json"), default="json")
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("verify", help="check published tables and oracle identities")
    p.add_argument("--suite", choices=SUITES + ("all",), default="all")
    p.add_argument("--max-edges", type=int, default=8)
    p.add_argument("--threads", type=_threads, default=default_threads())
    p.set_defaults(func=cmd_verify)

    # debugging aid, not listed in --help
    p = sub.add_parser("wick")
    p.add_argument("--ensemble", choices=("gue", "goe"), default="gue")
    p.add_argument("--degrees", required=True)
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_wick)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
