"""Command-line surface.

Exit codes: 0 = YES/success, 1 = NO (a negative decision, never an error),
2 = usage or parse error, 3 = search budget or step limit exceeded. Verdicts
go to stdout; DOT/DIMACS/JSON artifacts are written only under explicit
flags. ``SATKIT_BUDGET_VARS`` overrides the exhaustive-search variable
budget.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import cooklevin, oracle, reductions, tractable, turing
from .threecnf import to_3cnf
from .errors import BudgetExceededError
from .formula import (
    CnfFormula,
    DimacsError,
    DnfFormula,
    assignment_from_json,
    assignment_to_json,
    evaluate,
    is_horn,
    max_clause_width,
    parse_dimacs,
    write_dimacs,
)
from .graph import to_dot, verify_clique, verify_coloring, verify_hamiltonian_cycle

YES, NO, USAGE_ERROR, BUDGET = 0, 1, 2, 3


def _budget() -> int:
    raw = os.environ.get("SATKIT_BUDGET_VARS")
    return int(raw) if raw else oracle.DEFAULT_MAX_VARS


def _read(path: str) -> str:
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def _write(path: str, text: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(text)


def _parse_cnf_file(path: str) -> CnfFormula:
    return parse_dimacs(_read(path))


def _parse_dnf_file(path: str) -> DnfFormula:
    # DNF files reuse DIMACS syntax with terms in place of clauses.
    f = parse_dimacs(_read(path))
    return DnfFormula(f.num_vars, f.clauses)


def _emit_witness(path: str | None, witness) -> None:
    if path and witness is not None:
        _write(path, assignment_to_json(witness) + "\n")


def _cmd_solve(args) -> int:
    method = args.method
    if method is None:
        if args.file.endswith(".dnf"):
            method = "dnf"
        else:
            f = _parse_cnf_file(args.file)
            if max_clause_width(f) <= 2:
                method = "2sat"
            elif is_horn(f):
                method = "horn"
            else:
                method = "brute"
    if method == "dnf":
        result = tractable.solve_dnf(_parse_dnf_file(args.file))
    else:
        f = _parse_cnf_file(args.file)
        if method == "2sat":
            result = tractable.solve_2sat(f)
        elif method == "horn":
            result = tractable.solve_horn(f)
        else:
            result = oracle.brute_force_sat(f, max_vars=_budget())
    print("SAT" if result.satisfiable else "UNSAT")
    _emit_witness(args.witness, result.witness)
    return YES if result.satisfiable else NO


def _cmd_maxsat(args) -> int:
    f = _parse_cnf_file(args.file)
    ok = oracle.max_sat_decide(f, args.k, max_vars=_budget())
    print("YES" if ok else "NO")
    if args.witness and ok:
        _, witness = oracle.max_sat_optimum(f, max_vars=_budget())
        _emit_witness(args.witness, witness)
    return YES if ok else NO


def _cmd_to3cnf(args) -> int:
    f = _parse_cnf_file(args.file)
    result = to_3cnf(f)
    text = write_dimacs(result.formula)
    if args.out:
        _write(args.out, text)
    print(
        f"3-CNF: {len(result.formula.clauses)} clauses over {result.formula.num_vars} vars "
        f"({result.formula.num_vars - result.original_num_vars} fresh)"
    )
    return YES


def tableau_sidecar(spec) -> str:
    return json.dumps({"p": spec.p, "vars": spec.var_map_entries()}, indent=1)


def _reduce_instance(kind: str, f: CnfFormula, strict: bool):
    if kind == "clique":
        return reductions.reduce_to_clique(f)
    if kind == "hamcycle":
        return reductions.reduce_to_hamcycle(f, strict=strict)
    return reductions.reduce_to_3color(f)


def _cmd_reduce(args) -> int:
    f = _parse_cnf_file(args.file)
    inst = _reduce_instance(args.kind, f, args.strict)
    if args.dot:
        _write(args.dot, to_dot(inst.graph, reductions.dot_styling(inst)))
    if args.json:
        _write(args.json, reductions.instance_to_json(inst) + "\n")
    extra = f", k={inst.k}" if args.kind == "clique" else ""
    print(
        f"{args.kind}: {len(inst.graph.vertices)} vertices, "
        f"{len(inst.graph.edges)} edges{extra}"
    )
    return YES


def _load_witness(kind: str, path: str):
    data = json.loads(_read(path))
    try:
        if kind == "clique":
            return set(data["vertices"])
        if kind == "hamcycle":
            return list(data["cycle"])
        if kind == "3color":
            return {str(k): int(v) for k, v in data["coloring"].items()}
    except (KeyError, TypeError) as exc:
        raise ValueError(f"malformed {kind} witness file") from exc
    raise ValueError(f"unknown witness kind {kind!r}")


def _cmd_verify(args) -> int:
    if args.kind == "assignment":
        f = _parse_cnf_file(args.instance)
        witness = assignment_from_json(_read(args.witness))
        ok = evaluate(f, witness) is True
    else:
        inst = reductions.instance_from_json(_read(args.instance))
        witness = _load_witness(args.kind, args.witness)
        if args.kind == "clique":
            ok = verify_clique(inst.graph, witness, inst.k)
        elif args.kind == "hamcycle":
            ok = verify_hamiltonian_cycle(inst.graph, witness)
        else:
            ok = verify_coloring(inst.graph, witness, 3)
    print("YES" if ok else "NO")
    return YES if ok else NO


def _cmd_translate(args) -> int:
    inst = reductions.instance_from_json(_read(args.instance))
    if isinstance(inst, reductions.CliqueInstance):
        witness = _load_witness("clique", args.witness)
        translate = reductions.clique_witness_to_assignment
    elif isinstance(inst, reductions.HamCycleInstance):
        witness = _load_witness("hamcycle", args.witness)
        translate = reductions.hamcycle_witness_to_assignment
    else:
        witness = _load_witness("3color", args.witness)
        translate = reductions.coloring_witness_to_assignment
    try:
        assignment = translate(inst, witness)
    except ValueError as exc:
        print(f"invalid witness: {exc}", file=sys.stderr)
        return NO
    text = assignment_to_json(assignment)
    if args.out:
        _write(args.out, text + "\n")
    print(text)
    return YES


def _cmd_tm_run(args) -> int:
    m = turing.parse_machine(_read(args.machine))
    outcome = turing.run_dtm(m, args.input, args.limit, collect_trace=args.trace)
    if args.trace:
        for config in outcome.trace:
            print(config.render())
    if outcome.verdict == "accept":
        print("ACCEPT")
        return YES
    if outcome.verdict == "reject":
        print("REJECT")
        return NO
    print("LIMIT")
    return BUDGET


def _cmd_tm_ntm(args) -> int:
    m = turing.parse_machine(_read(args.machine))
    outcome, choices = turing.run_ntm(m, args.input, args.depth)
    if outcome.verdict == "accept":
        rendered = "".join(str(c) for c in choices)
        print(f"ACCEPT {rendered}" if rendered else "ACCEPT")
        return YES
    if outcome.verdict == "reject":
        print("REJECT")
        return NO
    print("LIMIT")
    return BUDGET


def _cmd_cooklevin(args) -> int:
    m = turing.parse_machine(_read(args.machine))
    formula, spec = cooklevin.encode(m, args.input, args.steps)
    if args.out:
        _write(args.out, write_dimacs(formula))
    if args.map:
        _write(args.map, tableau_sidecar(spec) + "\n")
    print(
        f"tableau {spec.p}x{spec.p}: {formula.num_vars} vars, "
        f"{len(formula.clauses)} clauses"
    )
    return YES


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="satkit")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="decide satisfiability of a CNF/DNF file")
    p.add_argument("--method", choices=["2sat", "horn", "dnf", "brute"])
    p.add_argument("--witness", metavar="PATH")
    p.add_argument("file")
    p.set_defaults(fn=_cmd_solve)

    p = sub.add_parser("maxsat", help="decide whether k clauses are jointly satisfiable")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--witness", metavar="PATH")
    p.add_argument("file")
    p.set_defaults(fn=_cmd_maxsat)

    p = sub.add_parser("to3cnf", help="rewrite a CNF into equisatisfiable 3-CNF")
    p.add_argument("--out", metavar="PATH")
    p.add_argument("file")
    p.set_defaults(fn=_cmd_to3cnf)

    p = sub.add_parser("reduce", help="reduce a 3-CNF to a graph instance")
    p.add_argument("kind", choices=["clique", "hamcycle", "3color"])
    p.add_argument("--strict", action="store_true", help="hamcycle separator vertices")
    p.add_argument("--dot", metavar="PATH")
    p.add_argument("--json", metavar="PATH")
    p.add_argument("file")
    p.set_defaults(fn=_cmd_reduce)

    p = sub.add_parser("verify", help="check a witness against an instance")
    p.add_argument("kind", choices=["clique", "hamcycle", "3color", "assignment"])
    p.add_argument("instance", help="instance JSON (CNF file for 'assignment')")
    p.add_argument("witness")
    p.set_defaults(fn=_cmd_verify)

    p = sub.add_parser("translate", help="graph witness back to an assignment")
    p.add_argument("--out", metavar="PATH")
    p.add_argument("instance")
    p.add_argument("witness")
    p.set_defaults(fn=_cmd_translate)

    tm = sub.add_parser("tm", help="Turing machine simulation")
    tm_sub = tm.add_subparsers(dest="tm_command", required=True)
    p = tm_sub.add_parser("run", help="run a deterministic machine")
    p.add_argument("machine")
    p.add_argument("input")
    p.add_argument("--limit", type=int, default=10_000)
    p.add_argument("--trace", action="store_true")
    p.set_defaults(fn=_cmd_tm_run)
    p = tm_sub.add_parser("ntm", help="simulate a nondeterministic machine")
    p.add_argument("machine")
    p.add_argument("input")
    p.add_argument("--depth", type=int, required=True)
    p.set_defaults(fn=_cmd_tm_ntm)

    p = sub.add_parser("cooklevin", help="encode bounded acceptance as CNF")
    p.add_argument("machine")
    p.add_argument("input")
    p.add_argument("--steps", type=int, required=True, metavar="P")
    p.add_argument("--out", metavar="PATH")
    p.add_argument("--map", metavar="PATH")
    p.set_defaults(fn=_cmd_cooklevin)

    return parser


def run_cli(argv: list[str]) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return USAGE_ERROR if exc.code else YES
    try:
        return args.fn(args)
    except BudgetExceededError as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return BUDGET
    except (DimacsError, ValueError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR


def main() -> None:
    sys.exit(run_cli(sys.argv[1:]))
