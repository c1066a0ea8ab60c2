"""Command-line interface: ``meshpat SUBCOMMAND ...``.

Every flag can also be set through the environment, e.g. ``MESHPAT_ORDER=10``
or ``MESHPAT_THREADS=4``; explicit flags win.  Exit status is 0 on success,
1 when a verification finds a mismatch and 2 on usage or parse errors.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Sequence

from .acceptance import run_acceptance, run_corrected
from .oracle import default_workers, distribution_table, verify_against_series, verify_avoidance
from .patterns import CATALOG, catalog_pattern, count_occurrences, find_occurrences, \
    parse_mesh_pattern, parse_permutation
from .registry import FAMILIES, build, formula, parse_family, parse_inner

ENV_PREFIX = "MESHPAT_"


def _env_int(name: str, default: int) -> int:
    raw = os.environ.get(ENV_PREFIX + name)
    if raw is None or raw == "":
        return default
    try:
        return int(raw)
    except ValueError:
        raise SystemExit(f"error: {ENV_PREFIX}{name} must be an integer, got {raw!r}") from None


def _env_flag(name: str) -> bool:
    return os.environ.get(ENV_PREFIX + name, "").lower() in ("1", "true", "yes", "on")


def _parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--order", type=int, default=_env_int("ORDER", 8),
                        help="truncation order of series (default 8)")
    common.add_argument("--max-n", type=int, default=_env_int("MAX_N", 7),
                        help="largest permutation length for the oracle (default 7)")
    common.add_argument("--threads", type=int, default=_env_int("THREADS", default_workers()),
                        help="oracle worker processes (default: CPU count)")
    common.add_argument("--json", action="store_true", default=_env_flag("JSON"),
                        help="machine-readable output")

    family = argparse.ArgumentParser(add_help=False)
    family.add_argument("family", help="family id, e.g. 19, 34:3, staircase:2, figure1")
    family.add_argument("--inner", action="append", default=[],
                        help="inner pattern for the next slot; 'empty' for the empty pattern")
    family.add_argument("--k", type=int, default=None)
    family.add_argument("--exact", action="store_true", default=_env_flag("EXACT"),
                        help="use the corrected evaluators where the published form differs")

    p = argparse.ArgumentParser(prog="meshpat", description="Mesh pattern distributions and checks.")
    sub = p.add_subparsers(dest="cmd", required=True)

    s = sub.add_parser("count", parents=[common], help="number of occurrences")
    s.add_argument("pattern")
    s.add_argument("perm")
    s = sub.add_parser("occurrences", parents=[common], help="1-based position sets of occurrences")
    s.add_argument("pattern")
    s.add_argument("perm")
    s = sub.add_parser("dist", parents=[common], help="distribution table from the oracle")
    s.add_argument("pattern")
    s = sub.add_parser("avoid", parents=[common], help="avoider counts from the oracle")
    s.add_argument("pattern")
    s = sub.add_parser("formula", parents=[common, family], help="family generating function")
    s.add_argument("--avoidance", action="store_true", help="print the avoidance series")
    sub.add_parser("build", parents=[common, family], help="constructed mesh pattern")
    sub.add_parser("verify", parents=[common, family], help="formula against the oracle")
    s = sub.add_parser("catalog", parents=[common], help="known patterns")
    s.add_argument("ident", nargs="?")
    s = sub.add_parser("selftest", parents=[common], help="run the acceptance battery")
    s.add_argument("--verbose", action="store_true", help="list every sub-check")
    s.add_argument("--corrected", action="store_true", help="also run the corrected-form battery")
    return p


def _inners(args):
    return [parse_inner(t) for t in args.inner]


def _cmd_count(args):
    print(count_occurrences(parse_mesh_pattern(args.pattern), parse_permutation(args.perm)))
    return 0


def _cmd_occurrences(args):
    occ = find_occurrences(parse_mesh_pattern(args.pattern), parse_permutation(args.perm))
    if args.json:
        print(json.dumps([list(o) for o in occ]))
    else:
        for o in occ:
            print(" ".join(map(str, o)))
    return 0


def _cmd_dist(args):
    t = distribution_table(parse_mesh_pattern(args.pattern), args.max_n, args.threads)
    print(t.to_json() if args.json else t.to_tsv())
    return 0


def _cmd_avoid(args):
    counts = distribution_table(parse_mesh_pattern(args.pattern), args.max_n, args.threads).avoidance()
    if args.json:
        print(json.dumps({str(n): c for n, c in enumerate(counts)}, sort_keys=True))
    else:
        for n, c in enumerate(counts):
            print(f"{n}\t{c}")
    return 0


def _cmd_formula(args):
    r = formula(args.family, _inners(args), args.k, args.order, args.threads, exact=args.exact)
    if args.json:
        print(json.dumps({"avoidance": None if r.avoidance is None else json.loads(r.avoidance.to_json()),
                          "distribution": None if r.distribution is None
                          else json.loads(r.distribution.to_json())}, sort_keys=True))
        return 0
    s = r.avoidance if args.avoidance or r.distribution is None else r.distribution
    if s is None:
        raise ValueError(f"family {args.family!r} has no avoidance formula for these inners")
    print(s.to_tsv())
    return 0


def _cmd_build(args):
    p = build(args.family, _inners(args), args.k)
    print(p.to_json() if args.json else str(p))
    return 0


def _cmd_verify(args):
    inners = _inners(args)
    p = build(args.family, inners, args.k)
    r = formula(args.family, inners, args.k, max(args.order, args.max_n), args.threads, exact=args.exact)
    table = distribution_table(p, args.max_n, args.threads)
    label = args.family + ("" if args.k is None else f" k={args.k}")
    if r.distribution is not None:
        report = verify_against_series(table, r.distribution, label)
    else:
        report = verify_avoidance(table, r.avoidance, label)
    print(report.to_json() if args.json else report)
    return 0 if report.ok else 1


def _cmd_catalog(args):
    ids = [args.ident] if args.ident else list(CATALOG)
    entries = {i: catalog_pattern(i) for i in ids}
    if args.json:
        print(json.dumps({i: str(p) for i, p in entries.items()}, sort_keys=True))
    else:
        for i, p in entries.items():
            print(f"{i}\t{p}")
    if not args.ident:
        print("families: " + " ".join(FAMILIES), file=sys.stderr)
    return 0


def _cmd_selftest(args):
    results = run_acceptance(args.threads)
    extra = run_corrected(args.threads) if args.corrected else []
    if args.json:
        print(json.dumps([{"id": r.ident, "title": r.title, "ok": r.ok, "seconds": round(r.seconds, 3),
                           "failed": [c.label for c in r.checks if not c.ok]}
                          for r in results + extra], sort_keys=True))
    else:
        for r in results + extra:
            print(r.report() if args.verbose else r.line())
    return 0 if all(r.ok for r in results) else 1


COMMANDS = {
    "count": _cmd_count, "occurrences": _cmd_occurrences, "dist": _cmd_dist, "avoid": _cmd_avoid,
    "formula": _cmd_formula, "build": _cmd_build, "verify": _cmd_verify, "catalog": _cmd_catalog,
    "selftest": _cmd_selftest,
}


def run(argv: Sequence[str] | None = None) -> int:
    try:
        args = _parser().parse_args(argv)
    except SystemExit as e:
        if isinstance(e.code, int):
            return e.code
        print(e.code, file=sys.stderr)
        return 2
    if args.order < 0 or args.max_n < 0 or args.threads < 1:
        print("error: --order and --max-n must be nonnegative, --threads positive", file=sys.stderr)
        return 2
    if args.cmd in ("formula", "build", "verify"):
        try:
            parse_family(args.family, args.k)
        except (KeyError, ValueError) as e:
            print(f"error: {e.args[0] if e.args else e}", file=sys.stderr)
            return 2
    try:
        return COMMANDS[args.cmd](args)
    except (ValueError, KeyError) as e:
        print(f"error: {e.args[0] if e.args else e}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
