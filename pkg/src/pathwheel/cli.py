"""Command line entry point. JSON envelope on stdout, diagnostics on stderr.

Exit codes: 0 ok, 1 violation or counterexample, 2 usage error, 3 resource limit.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from . import formula, lemmalab, search, witness
from .detect import DetectorLimits, ResourceLimitError
from .graphcore import to_graph6
from .schema import ENVELOPE_SCHEMA

EXIT = {"ok": 0, "violation": 1, "usage-error": 2, "resource-limit": 3}
TABLE_MIN_N = 5


class UsageError(ValueError):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _limits(args) -> DetectorLimits:
    return DetectorLimits(args.max_component, args.max_order)


def _cmd_compute(args):
    if args.family == "wheel":
        b = formula.ramsey_path_wheel(args.n, args.m)
        return "ok", {"family": "wheel", "value": b.value, "breakdown": b.to_dict()}
    if args.family == "path":
        return "ok", {"family": "path", "value": formula.ramsey_path_path(args.n, args.m)}
    return "ok", {"family": "cycle", "value": formula.ramsey_path_cycle(args.n, args.m)}


def _cmd_table(args):
    if args.n_max < TABLE_MIN_N:
        raise UsageError(f"--n-max must be >= {TABLE_MIN_N} (the s-bound row starts at n = 5)")
    if args.m_max < 3:
        raise UsageError("--m-max must be >= 3")
    rows = [
        {"n": n, "values": [formula.ramsey_path_wheel(n, m).value for m in range(3, args.m_max + 1)]}
        for n in range(2, args.n_max + 1)
    ]
    ns = list(range(5, args.n_max + 1))
    return "ok", {
        "m_min": 3,
        "m_max": args.m_max,
        "rows": rows,
        "s_bound": {"n": ns, "s": [formula.s_bound(n) for n in ns]},
    }


def _cmd_witness(args):
    p = witness.clique_partition(args.n, args.m)
    out = {"partition": p.to_dict()}
    if args.emit_graph6:
        out["graph6"] = to_graph6(witness.build_witness(p)).decode("ascii")
    return "ok", out


def _cmd_verify_witness(args):
    p = witness.clique_partition(args.n, args.m)
    rep = witness.verify_witness(args.n, args.m, p, _limits(args))
    status = "ok" if rep.path_free and rep.wheel_free else "violation"
    return status, {"partition": p.to_dict(), "report": rep.to_dict()}


def _cmd_verify_upper(args):
    rep = search.verify_upper_bound(args.n, args.m, args.t, _limits(args), args.budget, args.workers)
    print(f"elapsed {rep.elapsed:.3f}s", file=sys.stderr)
    return ("ok" if rep.verified else "violation"), rep.to_dict()


def _cmd_confirm(args):
    rep = search.confirm_ramsey(args.n, args.m, _limits(args), args.budget, args.workers)
    d = rep.to_dict()
    return ("ok" if rep.upper_verified and d["witness_verified"] else "violation"), d


def _cmd_lemma_suite(args):
    if args.lemma not in lemmalab.LEMMA_IDS:
        raise UsageError(f"unknown lemma {args.lemma!r}; choose from {', '.join(lemmalab.LEMMA_IDS)}")
    corpus = lemmalab.parse_corpus(args.corpus)
    rep = lemmalab.run_suite(args.lemma, corpus, _limits(args), args.workers)
    if rep.starved:
        print(f"generator starved on {rep.starved} instances", file=sys.stderr)
    return ("violation" if rep.violations else "ok"), rep.to_dict()


def _cmd_oracle_compare(args):
    if args.n_max < 2 or args.m_max < 5:
        raise UsageError("--n-max must be >= 2 and --m-max >= 5")
    pairs = 0
    bad = []
    for n in range(2, args.n_max + 1):
        for m in range(2 * n + 1, args.m_max + 1):
            pairs += 1
            a, b = formula.t_large(n, m).value, formula.t_min_char(n, m)
            if a != b:
                bad.append({"n": n, "m": m, "formula": a, "oracle": b})
    return ("violation" if bad else "ok"), {"pairs": pairs, "mismatches": bad}


def _cmd_schema(args):
    return "ok", ENVELOPE_SCHEMA


COMMANDS = {
    "compute": _cmd_compute,
    "table": _cmd_table,
    "witness": _cmd_witness,
    "verify-witness": _cmd_verify_witness,
    "verify-upper": _cmd_verify_upper,
    "confirm": _cmd_confirm,
    "lemma-suite": _cmd_lemma_suite,
    "oracle-compare": _cmd_oracle_compare,
    "schema": _cmd_schema,
}


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--plain", action="store_true", help="human-readable output")
    common.add_argument("--max-component", type=int, default=24, help="path DP component limit")
    common.add_argument("--max-order", type=int, default=16, help="cycle/wheel search order limit")
    common.add_argument("--budget", type=int, default=search.DEFAULT_BUDGET, help="max graphs enumerated")
    common.add_argument("--workers", type=int, default=1, help="worker processes")

    parser = _Parser(prog="pathwheel", description="Ramsey numbers of paths versus wheels")
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)

    p = sub.add_parser("compute", parents=[common], help="Ramsey value from the closed formulas")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--family", choices=["wheel", "path", "cycle"], default="wheel")

    p = sub.add_parser("table", parents=[common], help="grid of R(P_n, W_m) and the s-bound row")
    p.add_argument("--n-max", type=int, default=16)
    p.add_argument("--m-max", type=int, default=40)

    p = sub.add_parser("witness", parents=[common], help="clique-union lower-bound graph")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--emit-graph6", action="store_true")

    p = sub.add_parser("verify-witness", parents=[common], help="check the lower-bound graph")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, required=True)

    p = sub.add_parser("verify-upper", parents=[common], help="exhaustive upper-bound check")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--t", type=int, required=True)

    p = sub.add_parser("confirm", parents=[common], help="upper bound by search plus witness")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, required=True)

    p = sub.add_parser("lemma-suite", parents=[common], help="run a lemma over a corpus")
    p.add_argument("--lemma", required=True)
    p.add_argument("--corpus", required=True, help="exhaustive:K or random:COUNT:SEED[:MAX_ORDER]")

    p = sub.add_parser("oracle-compare", parents=[common], help="formula versus interval-sum oracle")
    p.add_argument("--n-max", type=int, default=50)
    p.add_argument("--m-max", type=int, default=400)

    sub.add_parser("schema", parents=[common], help="print the envelope JSON schema")
    return parser


def _plain(command: str, status: str, result: dict) -> str:
    if command == "table" and status == "ok":
        lines = ["n\\m " + " ".join(f"{m:>3}" for m in range(3, result["m_max"] + 1))]
        for row in result["rows"]:
            lines.append(f"{row['n']:>3} " + " ".join(f"{v:>3}" for v in row["values"]))
        lines.append("")
        lines.append("n    " + " ".join(f"{n:>3}" for n in result["s_bound"]["n"]))
        lines.append("s <= " + " ".join(f"{s:>3}" for s in result["s_bound"]["s"]))
        return "\n".join(lines)
    if command == "witness" and "graph6" in result:
        return f"parts {result['partition']['parts']}\n{result['graph6']}"
    return "\n".join(f"{k}: {v}" for k, v in result.items()) + f"\nstatus: {status}"


def run(argv=None) -> tuple[int, dict, bool]:
    """Parse and execute; returns (exit code, envelope, plain flag)."""
    parser = build_parser()
    command = None
    params: dict = {}
    plain = False
    try:
        args = parser.parse_args(argv)
        command = args.command
        plain = getattr(args, "plain", False)
        if command is None:
            raise UsageError("a command is required")
        params = {k: v for k, v in vars(args).items() if k not in ("command", "plain")}
        status, result = COMMANDS[command](args)
    except UsageError as exc:
        status, result = "usage-error", {"error": str(exc)}
    except ResourceLimitError as exc:
        status, result = "resource-limit", {"error": str(exc)}
        if getattr(exc, "progress", None) is not None:
            result["progress"] = exc.progress
    except ValueError as exc:
        status, result = "usage-error", {"error": str(exc)}
    envelope = {"command": command, "params": params, "status": status, "result": result}
    return EXIT[status], envelope, plain


def main(argv=None) -> int:
    start = time.perf_counter()
    code, envelope, plain = run(argv)
    if plain:
        print(_plain(envelope["command"], envelope["status"], envelope["result"]))
    else:
        print(json.dumps(envelope, indent=2, sort_keys=True))
    if envelope["status"] in ("usage-error", "resource-limit"):
        print(f"{envelope['status']}: {envelope['result']['error']}", file=sys.stderr)
    print(f"done in {time.perf_counter() - start:.3f}s", file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
