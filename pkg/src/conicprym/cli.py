"""Command line entry points.

    conicprym analyze        request.json [flags]   full pipeline
    conicprym certify-divisor request.json          certificate checks only
    conicprym local-points   request.json           R / Q_p solvability only
    conicprym real-topology  request.json           signature profile + classification
    conicprym sigma-audit    request.json           line-coverage audit only

Flags override the corresponding request fields.  Outputs: canonical
report.json, human-readable summary.txt, and the signature-profile CSV.
"""

import argparse
import sys

from .report import (ALL_STAGES, RequestError, emit_outputs, load_request,
                     render_summary, run_full_report)

_SUBCOMMAND_STAGES = {
    "analyze": None,
    "certify-divisor": ("certificates",),
    "local-points": ("local_points",),
    "real-topology": ("signature_profile", "real_topology", "cover_real_points"),
    "sigma-audit": ("sigma_audit",),
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="conicprym",
                                     description="exact verification toolkit for "
                                                 "conic bundle threefolds over Q")
    sub = parser.add_subparsers(dest="command", required=True)
    for name in _SUBCOMMAND_STAGES:
        p = sub.add_parser(name)
        p.add_argument("request", help="path to a request JSON document")
        p.add_argument("--out-dir", default=None,
                       help="directory for report.json / summary.txt / profile.csv")
        p.add_argument("--witness-primes", default=None,
                       help="comma-separated odd primes for smoothness checks")
        p.add_argument("--hensel-depth", type=int, default=0,
                       help="depth budget for the p-adic residue tree (0 = automatic bound)")
        p.add_argument("--audit-base-points", type=int, default=None)
        p.add_argument("--audit-lines", type=int, default=None)
        p.add_argument("--emit-csv", action="store_true", default=True)
        p.add_argument("--no-emit-csv", dest="emit_csv", action="store_false")
        p.add_argument("--expected-sextic", default=None,
                       help="comma-separated 7 coefficients, highest degree first")
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        request = load_request(args.request)
    except (OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if args.witness_primes:
        request.witness_primes = [int(p) for p in args.witness_primes.split(",")]
    if args.hensel_depth:
        request.hensel_depth = args.hensel_depth
    if args.audit_base_points is not None or args.audit_lines is not None:
        audit = dict(request.audit or {})
        if args.audit_base_points is not None:
            audit["base_points"] = args.audit_base_points
        if args.audit_lines is not None:
            audit["lines_per_pencil"] = args.audit_lines
        request.audit = audit
    if args.expected_sextic:
        from .quadext import parse_rational
        coeffs = [parse_rational(c) for c in args.expected_sextic.split(",")]
        if len(coeffs) != 7:
            print("error: --expected-sextic needs 7 coefficients", file=sys.stderr)
            return 2
        request.expected_sextic = coeffs

    stages = _SUBCOMMAND_STAGES[args.command]
    report, timings = run_full_report(request, stages=stages)
    summary = render_summary(report, timings)
    sys.stdout.write(summary)
    if args.out_dir:
        paths = emit_outputs(report, timings, args.out_dir, emit_csv=args.emit_csv)
        for kind, path in paths.items():
            print(f"wrote {kind}: {path}")
    failed = any(isinstance(v, dict) and "error" in v
                 for v in report["stages"].values())
    return 1 if failed else 0


if __name__ == "__main__":
    sys.exit(main())
