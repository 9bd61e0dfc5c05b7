"""Command-line front end with stable JSON output.

Exit codes: 0 success, 1 input/validation error, 2 internal-consistency
failure, 3 a divisibility counterexample was flagged.  All output is a pure
function of the argument vector and input file bytes.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass

from .errors import InternalConsistencyError
from .ehrhart import a_invariant, hstar_from_counts, hstar_simplex
from .family import (
    COUNTEREXAMPLE,
    hstar_degree2_feasible,
    random_search,
    record_to_json,
    simplex_hn,
    verify_family,
)
from .geometry import as_simplex, polytope_from_json, polytope_to_json
from .levelness import SEMIGROUP, build_report, is_level, report_to_json
from .semigroup import (
    is_pointed,
    is_semistandard,
    normality_check_bounded,
    polytope_of,
    semigroup_from_json,
)


@dataclass(frozen=True)
class CliConfig:
    """Everything a run depends on; no environment state is consulted."""

    command: str
    options: dict


def _dump(obj) -> str:
    return json.dumps(obj, separators=(",", ":"))


def _read_json(path: str):
    if path == "-":
        text = sys.stdin.read()
    else:
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
    return json.loads(text)


def _load_polytope(args):
    if getattr(args, "family", None) is not None:
        h, n = args.family
        return simplex_hn(h, n).simplex
    if getattr(args, "input", None) is None:
        raise ValueError("either --input or --family is required")
    p = polytope_from_json(_read_json(args.input))
    if p.was_normalized:
        print(
            "note: input was not full-dimensional; coordinates were "
            "rewritten in a lattice basis of its affine span",
            file=sys.stderr,
        )
    simp = as_simplex(p)
    return simp if simp is not None else p


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ehrlev",
        description="Exact Ehrhart invariants of lattice polytopes",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_polytope_opts(sp, with_family=True):
        sp.add_argument("--input", help="polytope JSON file, or - for stdin")
        if with_family:
            sp.add_argument(
                "--family",
                nargs=2,
                type=int,
                metavar=("H", "N"),
                help="use the built-in family member instead of a file",
            )
        sp.add_argument("--json", action="store_true", help="emit JSON output")

    sp = sub.add_parser("hstar", help="h*-vector of a polytope")
    add_polytope_opts(sp)

    sp = sub.add_parser("a-invariant", help="a-invariant of a polytope")
    add_polytope_opts(sp)

    sp = sub.add_parser("level", help="levelness verdict and witness")
    add_polytope_opts(sp)
    sp.add_argument("--variant", choices=("semigroup", "degree-one"), default=SEMIGROUP)
    sp.add_argument("--bound", type=int, help="generator-degree search bound")

    sp = sub.add_parser("report", help="full invariant report")
    add_polytope_opts(sp)
    sp.add_argument("--variant", choices=("semigroup", "degree-one"), default=SEMIGROUP)
    sp.add_argument("--bound", type=int, help="generator-degree search bound")

    sp = sub.add_parser("family", help="emit a family member as polytope JSON")
    sp.add_argument("--h", type=int, required=True)
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--json", action="store_true")

    sp = sub.add_parser("verify-family", help="diff a family member against closed forms")
    sp.add_argument("--h", type=int, required=True)
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--json", action="store_true")

    sp = sub.add_parser("search", help="stream randomized search records as JSON lines")
    sp.add_argument("--seed", type=int, required=True)
    sp.add_argument("--count", type=int, required=True)
    sp.add_argument("--dim", type=int, default=3, choices=(2, 3, 4))
    sp.add_argument("--coord-bound", type=int, default=4)
    sp.add_argument("--volume-cap", type=int, default=40)
    sp.add_argument("--bound", type=int, help="generator-degree search bound")

    sp = sub.add_parser("feasible", help="degree-2 h* feasibility of (1, a, b)")
    sp.add_argument("a", type=int)
    sp.add_argument("b", type=int)
    sp.add_argument("--json", action="store_true")

    sp = sub.add_parser("semigroup", help="pointedness, semi-standardness, normality")
    sp.add_argument("--input", required=True, help="semigroup JSON file, or - for stdin")
    sp.add_argument("--degree-bound", type=int, default=6)
    sp.add_argument("--json", action="store_true")
    return parser


def _cmd_hstar(args) -> int:
    p = _load_polytope(args)
    simp = as_simplex(p)
    h = hstar_simplex(simp) if simp is not None else hstar_from_counts(p)
    if args.json:
        print(_dump({"schema": "1", "hstar": list(h.coeffs)}))
    else:
        print(list(h.coeffs))
    return 0


def _cmd_a_invariant(args) -> int:
    p = _load_polytope(args)
    a = a_invariant(p)
    if args.json:
        print(_dump({"schema": "1", "a": a}))
    else:
        print(a)
    return 0


def _cmd_level(args) -> int:
    p = _load_polytope(args)
    verdict, witness = is_level(p, variant=args.variant, bound=args.bound)
    if args.json:
        out = {
            "schema": "1",
            "level": verdict,
            "witness_degree": None if witness is None else witness[0],
            "witness": None if witness is None else list(witness[1]),
            "variant": args.variant,
        }
        print(_dump(out))
    elif verdict:
        print("level")
    else:
        print(f"non-level: degree {witness[0]} generator at {list(witness[1])}")
    return 0


def _cmd_report(args) -> int:
    p = _load_polytope(args)
    report = build_report(p, variant=args.variant, bound=args.bound)
    payload = report_to_json(report)
    if args.json:
        print(_dump(payload))
    else:
        for key in ("a", "hstar", "s", "level", "cm_type", "variant"):
            print(f"{key}: {payload[key]}")
        for degree in sorted(report.witnesses):
            pts = ", ".join(str(list(pt)) for pt in report.witnesses[degree])
            print(f"generators degree {degree}: {pts}")
    return 0


def _cmd_family(args) -> int:
    inst = simplex_hn(args.h, args.n)
    payload = polytope_to_json(inst.simplex)
    print(_dump(payload) if args.json else json.dumps(payload, indent=2))
    return 0


def _cmd_verify_family(args) -> int:
    diff = verify_family(args.h, args.n)
    payload = {
        "schema": "1",
        "h": diff.h,
        "n": diff.n,
        "pass": diff.passed,
        "diffs": [
            {"field": d["field"], "expected": _plain(d["expected"]), "actual": _plain(d["actual"])}
            for d in diff.diffs
        ],
    }
    print(_dump(payload) if args.json else json.dumps(payload, indent=2))
    return 0 if diff.passed else 2


def _plain(value):
    if isinstance(value, tuple):
        return [_plain(v) for v in value]
    if isinstance(value, dict):
        return {str(k): _plain(v) for k, v in value.items()}
    return value


def _cmd_search(args) -> int:
    flagged = False
    for rec in random_search(
        args.seed,
        args.count,
        dim=args.dim,
        coord_bound=args.coord_bound,
        volume_cap=args.volume_cap,
        bound=args.bound,
    ):
        print(_dump(record_to_json(rec)))
        if rec.divisibility == COUNTEREXAMPLE:
            flagged = True
    return 3 if flagged else 0


def _cmd_feasible(args) -> int:
    value = hstar_degree2_feasible(args.a, args.b)
    if args.json:
        print(_dump({"schema": "1", "a": args.a, "b": args.b, "feasible": value}))
    else:
        print("true" if value else "false")
    return 0


def _cmd_semigroup(args) -> int:
    c = semigroup_from_json(_read_json(args.input))
    pointed = is_pointed(c)
    standard = is_semistandard(c)
    payload = {
        "schema": "1",
        "pointed": pointed,
        "semistandard": standard.ok,
        "violating_ray": None if standard.violating_ray is None else list(standard.violating_ray),
        "reason": standard.reason,
        "degree_bound": args.degree_bound,
    }
    normality = normality_check_bounded(c, args.degree_bound)
    payload["normal_up_to_bound"] = normality.normal_up_to_bound
    payload["witness"] = None if normality.witness is None else list(normality.witness)
    payload["polytope"] = polytope_to_json(polytope_of(c)) if standard.ok else None
    if args.json:
        print(_dump(payload))
    else:
        print(json.dumps(payload, indent=2))
    return 0


_COMMANDS = {
    "hstar": _cmd_hstar,
    "a-invariant": _cmd_a_invariant,
    "level": _cmd_level,
    "report": _cmd_report,
    "family": _cmd_family,
    "verify-family": _cmd_verify_family,
    "search": _cmd_search,
    "feasible": _cmd_feasible,
    "semigroup": _cmd_semigroup,
}


def run(argv) -> int:
    """Parse argv, dispatch, and map failures to the documented exit codes."""
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 1 if exc.code not in (0, None) else 0
    config = CliConfig(command=args.command, options=vars(args))
    try:
        return _COMMANDS[config.command](args)
    except json.JSONDecodeError as exc:
        print(
            f"error: invalid JSON at line {exc.lineno} column {exc.colno}: {exc.msg}",
            file=sys.stderr,
        )
        return 1
    except InternalConsistencyError as exc:
        print(f"internal consistency failure: {exc}", file=sys.stderr)
        return 2
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
