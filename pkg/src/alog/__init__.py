"""Alog: logic programs with aggregates under the vicious-circle semantics."""
from .syntax import (
    AggregateAtom, Arith, Comparison, Const, ELiteral, Int, Literal,
    PartialInterpretation, Program, Rule, Truth, Var, contrary, free_variables,
    truth_value,
)
from .parser import ParseError, format_program, parse_program
from .grounder import GroundingError, GroundProgram, constant_pool, eval_arith, ground_program
from .semantics import (
    aggregate_reduct, agg_true_in_set, enumerate_answer_sets_oracle,
    is_answer_set_alog, is_answer_set_asp,
)
from .asolver import cons, enumerate_answer_sets_solver, solve, solver

__version__ = "0.1.0"
