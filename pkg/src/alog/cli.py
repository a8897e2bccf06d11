"""Command line front end.

    alog ground FILE
    alog solve FILE [--mode oracle|solver|both] [--all] [--n K] [--format text|jsonl] [--oracle-cap N]
    alog corpus [--dir DIR] [--oracle-cap N]

``solve`` exits with 10 when at least one answer set exists, 20 when there
is none, 2 on bad input and 3 when oracle and solver disagree.
"""
from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from typing import List, Optional, Sequence

from .asolver import ClassicalNegationError, enumerate_answer_sets_solver
from .corpus import load_corpus
from .grounder import GroundingError, GroundProgram, ground_program
from .parser import ParseError, parse_program
from .semantics import (
    DEFAULT_ORACLE_CAP, AggregateError, OracleCapExceeded, canonical,
    enumerate_answer_sets_oracle,
)
from .syntax import Literal, format_literal_set

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_INPUT = 2
EXIT_MISMATCH = 3
EXIT_SAT = 10
EXIT_UNSAT = 20


class Mismatch(Exception):
    def __init__(self, oracle, solver):
        super().__init__("oracle and solver disagree")
        self.oracle = oracle
        self.solver = solver


@dataclass(frozen=True)
class RunConfig:
    mode: str = "solver"
    max_models: Optional[int] = 1  # None means all
    oracle_cap: int = DEFAULT_ORACLE_CAP
    output: str = "text"


def load(path: str) -> GroundProgram:
    with open(path, encoding="utf-8") as fh:
        return ground_program(parse_program(fh.read()))


def answer_sets(gp: GroundProgram, cfg: RunConfig) -> List[frozenset]:
    if cfg.mode == "oracle":
        return enumerate_answer_sets_oracle(gp, cap=cfg.oracle_cap)
    if cfg.mode == "solver":
        return enumerate_answer_sets_solver(gp)
    oracle = enumerate_answer_sets_oracle(gp, cap=cfg.oracle_cap)
    solver = enumerate_answer_sets_solver(gp)
    if oracle != solver:
        raise Mismatch(oracle, solver)
    return oracle


def format_answer_set(s, output: str) -> str:
    if output == "jsonl":
        return json.dumps({"answer_set": [str(l) for l in sorted(s, key=Literal.sort_key)]})
    return format_literal_set(s)


def cmd_ground(path: str, out=None, err=None) -> int:
    out, err = out or sys.stdout, err or sys.stderr
    try:
        gp = load(path)
    except (OSError, ParseError, GroundingError) as exc:
        print(f"alog: {path}: {exc}", file=err)
        return EXIT_INPUT
    for r in gp.rules:
        print(r, file=out)
    return EXIT_OK


def cmd_solve(path: str, cfg: RunConfig, out=None, err=None) -> int:
    out, err = out or sys.stdout, err or sys.stderr
    try:
        models = answer_sets(load(path), cfg)
    except (OSError, ParseError, GroundingError, AggregateError,
            ClassicalNegationError, OracleCapExceeded) as exc:
        print(f"alog: {path}: {exc}", file=err)
        return EXIT_INPUT
    except Mismatch as exc:
        print(f"alog: {path}: oracle and solver disagree", file=err)
        print(f"  oracle: {[format_literal_set(s) for s in exc.oracle]}", file=err)
        print(f"  solver: {[format_literal_set(s) for s in exc.solver]}", file=err)
        return EXIT_MISMATCH
    shown = models if cfg.max_models is None else models[:cfg.max_models]
    for s in shown:
        print(format_answer_set(s, cfg.output), file=out)
    return EXIT_SAT if models else EXIT_UNSAT


def cmd_corpus(directory=None, oracle_cap: int = DEFAULT_ORACLE_CAP, out=None, err=None) -> int:
    out, err = out or sys.stdout, err or sys.stderr
    try:
        cases = load_corpus(directory)
    except (OSError, ValueError, ParseError) as exc:
        print(f"alog: corpus: {exc}", file=err)
        return EXIT_INPUT
    if not cases:
        print("alog: corpus: no .alog programs found", file=err)
        return EXIT_INPUT
    failures = 0
    for case in cases:
        expected = canonical(case.expected)
        cfg = RunConfig(mode=case.mode, max_models=None, oracle_cap=oracle_cap)
        try:
            got = answer_sets(ground_program(parse_program(case.source)), cfg)
            status = "PASS" if got == expected else "FAIL"
            got_text = " ".join(format_literal_set(s) for s in got) or "none"
        except Exception as exc:  # report and keep going
            status, got_text = "FAIL", f"error: {exc}"
        failures += status == "FAIL"
        want = " ".join(format_literal_set(s) for s in expected) or "none"
        print(f"{status} {case.name} [{case.mode}] expected={want} got={got_text}", file=out)
    print(f"{len(cases) - failures}/{len(cases)} passed", file=out)
    return EXIT_FAILURE if failures else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="alog", description="Logic programs with aggregates.")
    sub = parser.add_subparsers(dest="command", required=True)

    g = sub.add_parser("ground", help="print the ground instantiation of a program")
    g.add_argument("file")

    s = sub.add_parser("solve", help="compute answer sets")
    s.add_argument("file")
    s.add_argument("--mode", choices=("oracle", "solver", "both"), default="solver")
    s.add_argument("--all", action="store_true", help="print every answer set")
    s.add_argument("--n", type=int, metavar="K", help="print at most K answer sets")
    s.add_argument("--format", choices=("text", "jsonl"), default="text")
    s.add_argument("--oracle-cap", type=int, default=DEFAULT_ORACLE_CAP)

    c = sub.add_parser("corpus", help="run the bundled example programs")
    c.add_argument("--dir", default=None, help="alternative corpus directory")
    c.add_argument("--oracle-cap", type=int, default=DEFAULT_ORACLE_CAP)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    if args.command == "ground":
        return cmd_ground(args.file)
    if args.command == "solve":
        max_models = None if args.all else (args.n if args.n is not None else 1)
        cfg = RunConfig(args.mode, max_models, args.oracle_cap, args.format)
        return cmd_solve(args.file, cfg)
    return cmd_corpus(args.dir, args.oracle_cap)


if __name__ == "__main__":
    sys.exit(main())
