"""Command-line driver: ``verify``, ``trace`` and ``mutants``.

Exit codes: 0 when every check passes, 1 when a check fails, 2 for usage or
input errors.
"""

from __future__ import annotations

import argparse
import json
import logging
import random
import sys
from typing import Any, Dict, List, Optional, Sequence

from .equivalence import all_lists, approx_node_budget, cong_check, theorem1_check, theorem1_pair
from .laws import check_laws, random_queue
from .mutants import BASELINE, MUTANTS, VARIANTS, get_variant
from .programs import (
    count_programs,
    lemma_check,
    program_to_json,
    programs_discriminate,
    random_program,
    theorem2_check,
)
from .trace import IMPLS, OpsParseError, parse_ops, run_trace, write_csv

log = logging.getLogger("amortized_queue")

DEFAULT_BUDGET = 10**7
TARGETS = ("theorem1", "theorem2", "lemma", "laws", "cong")


class UsageError(Exception):
    pass


def _emit(report: Dict[str, Any], out: Optional[str]) -> None:
    text = json.dumps(report, indent=2)
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def _require(cond: bool, msg: str) -> None:
    if not cond:
        raise UsageError(msg)


def _guard(estimate: int, budget: int) -> None:
    _require(estimate <= budget, f"estimated work {estimate} exceeds node budget {budget} (raise --budget)")


def _verify_theorem1(args) -> Dict[str, Any]:
    v = get_variant(args.impl)
    lists = all_lists(args.max_init_len, args.alphabet)
    _guard(len(lists) ** 2 * approx_node_budget(args.depth, args.alphabet), args.budget)
    failures: List[Dict[str, Any]] = []
    nodes = 0
    for bl in lists:
        for fl in lists:
            r = theorem1_check(bl, fl, args.depth, args.alphabet, v.batched, v.spec)
            nodes += r.nodes
            if not r.equivalent:
                failures.append({"bl": list(bl), "fl": list(fl), "report": r.to_json()})
    return {
        "passed": not failures,
        "pairs": len(lists) ** 2,
        "failures": len(failures),
        "nodes": nodes,
        "first_failure": failures[0] if failures else None,
    }


def _verify_theorem2(args) -> Dict[str, Any]:
    _require(args.depth >= args.max_nodes, "theorem2 needs --depth >= --max-nodes")
    v = get_variant(args.impl)
    lists = all_lists(args.max_init_len, args.alphabet)
    per_pair = count_programs(args.max_nodes, args.alphabet) + approx_node_budget(args.depth, args.alphabet)
    _guard(len(lists) ** 2 * per_pair, args.budget)
    results = []
    for bl in lists:
        for fl in lists:
            r = theorem2_check(*theorem1_pair(bl, fl, v.batched, v.spec), args.max_nodes, args.depth, args.alphabet)
            results.append({"bl": list(bl), "fl": list(fl), **r.to_json()})
    disagreements = [r for r in results if not r["agree"]]
    return {
        "passed": not disagreements,
        "pairs": len(results),
        "disagreements": len(disagreements),
        "results": results,
    }


def _verify_lemma(args) -> Dict[str, Any]:
    rng = random.Random(args.seed)
    bad = []
    for i in range(args.samples):
        c = rng.randint(0, args.max_cost)
        p = random_program(rng, args.max_nodes, args.alphabet)
        q = random_queue(rng, args.alphabet)
        if not lemma_check(c, p, q):
            bad.append({"sample": i, "cost": c, "program": program_to_json(p)})
    return {"passed": not bad, "samples": args.samples, "failures": len(bad), "examples": bad[:5]}


def _verify_laws(args) -> Dict[str, Any]:
    failures = check_laws(args.samples, args.seed)
    return {"passed": not any(failures.values()), "samples": args.samples, "failures": failures}


def _verify_cong(args) -> Dict[str, Any]:
    v = get_variant(args.impl)
    costs = sorted(set(args.cost or [0, 1, 5]))
    lists = all_lists(args.max_init_len, args.alphabet)
    _guard(2 * len(costs) * len(lists) ** 2 * approx_node_budget(args.depth, args.alphabet), args.budget)
    bad = []
    for c in costs:
        for bl in lists:
            for fl in lists:
                q1, q2 = theorem1_pair(bl, fl, v.batched, v.spec)
                if not cong_check(c, q1, q2, args.depth, args.alphabet):
                    bad.append({"cost": c, "bl": list(bl), "fl": list(fl)})
    return {"passed": not bad, "checks": len(costs) * len(lists) ** 2, "failures": bad}


VERIFIERS = {
    "theorem1": _verify_theorem1,
    "theorem2": _verify_theorem2,
    "lemma": _verify_lemma,
    "laws": _verify_laws,
    "cong": _verify_cong,
}


def cmd_verify(args) -> int:
    _require(args.alphabet >= 1, "--alphabet must be >= 1")
    _require(args.depth >= 0, "--depth must be >= 0")
    _require(args.max_nodes >= 1, "--max-nodes must be >= 1")
    _require(args.max_init_len >= 0, "--max-init-len must be >= 0")
    _require(args.samples >= 0, "--samples must be >= 0")
    _require(args.max_cost >= 0, "--max-cost must be >= 0")
    _require(args.impl in VARIANTS, f"unknown --impl {args.impl!r}; choose from {sorted(VARIANTS)}")
    report = {"target": args.target, "impl": args.impl, **VERIFIERS[args.target](args)}
    _emit(report, args.out)
    return 0 if report["passed"] else 1


def mutation_summary(depth: int = 6, max_nodes: int = 6, alphabet: int = 2) -> Dict[str, Any]:
    """Run every variant through both checkers from the empty queue."""
    rows = []
    for v in (BASELINE, *MUTANTS.values()):
        q1, q2 = theorem1_pair([], [], v.batched, v.spec)
        r1 = theorem1_check([], [], depth, alphabet, v.batched, v.spec)
        _, witness, results = programs_discriminate(q1, q2, max_nodes, alphabet)
        cx = r1.counterexample
        rows.append(
            {
                "name": v.name,
                "description": v.description,
                "theorem1": r1.to_json(),
                "killed_by_theorem1": not r1.equivalent,
                "killed_by_programs": witness is not None,
                "mismatch": None if cx is None else ("element" if cx.is_behavioral else "cost"),
                "witness": None if witness is None else program_to_json(witness),
                "witness_costs": None if results is None else [results[0].cost, results[1].cost],
            }
        )
    baseline, mutants = rows[0], rows[1:]
    killed = [m for m in mutants if m["killed_by_theorem1"] and m["killed_by_programs"]]
    survived = not (baseline["killed_by_theorem1"] or baseline["killed_by_programs"])
    return {
        "passed": len(killed) == len(mutants) and survived,
        "killed": len(killed),
        "mutants": len(mutants),
        "baseline_survives": survived,
        "variants": rows,
    }


def cmd_mutants(args) -> int:
    _require(args.depth >= 0 and args.max_nodes >= 1 and args.alphabet >= 1, "invalid bounds")
    report = mutation_summary(args.depth, args.max_nodes, args.alphabet)
    _emit(report, args.out)
    for row in report["variants"][1:]:
        status = "killed" if row["killed_by_theorem1"] and row["killed_by_programs"] else "SURVIVED"
        log.info("%-28s %s (%s)", row["name"], status, row["mismatch"])
    return 0 if report["passed"] else 1


def cmd_trace(args) -> int:
    try:
        with open(args.input, encoding="utf-8") as fh:
            ops = parse_ops(fh.read())
    except OSError as exc:
        raise UsageError(str(exc)) from None
    except OpsParseError as exc:
        raise UsageError(f"{args.input}: {exc}") from None
    rows = run_trace(ops, args.impl)
    if args.output in (None, "-"):
        write_csv(rows, sys.stdout)
    else:
        with open(args.output, "w", encoding="utf-8", newline="") as fh:
            write_csv(rows, fh)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="amortized-queue", description=__doc__.splitlines()[0])
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="run one verification target")
    v.add_argument("target", choices=TARGETS)
    v.add_argument("--alphabet", type=int, default=2)
    v.add_argument("--max-init-len", type=int, default=None, help="longest initial bl/fl (theorem1: 3, cong: 2, others: 0)")
    v.add_argument("--depth", type=int, default=6)
    v.add_argument("--max-nodes", type=int, default=6)
    v.add_argument("--impl", default=BASELINE.name, help=f"one of {', '.join(VARIANTS)}")
    v.add_argument("--samples", type=int, default=10_000, help="lemma/laws sample count")
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--max-cost", type=int, default=100, help="lemma: largest pre-charge")
    v.add_argument("--cost", type=int, action="append", help="cong: cost to test (repeatable)")
    v.add_argument("--budget", type=int, default=DEFAULT_BUDGET, help="refuse runs estimated above this many nodes")
    v.add_argument("--out")
    v.set_defaults(func=cmd_verify)

    t = sub.add_parser("trace", help="replay an ops file and write a cost trace CSV")
    t.add_argument("--input", required=True)
    t.add_argument("--impl", choices=sorted(IMPLS), default="batched")
    t.add_argument("--output")
    t.set_defaults(func=cmd_trace)

    m = sub.add_parser("mutants", help="check that every built-in mutant is detected")
    m.add_argument("--alphabet", type=int, default=2)
    m.add_argument("--depth", type=int, default=6)
    m.add_argument("--max-nodes", type=int, default=6)
    m.add_argument("--out")
    m.set_defaults(func=cmd_mutants)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(message)s")
    if getattr(args, "max_init_len", 0) is None:
        args.max_init_len = {"theorem1": 3, "cong": 2}.get(args.target, 0)
    try:
        return args.func(args)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"{parser.prog}: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
