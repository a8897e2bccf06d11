"""Ground instantiation of Alog programs.

Only free occurrences of variables are replaced.  Variables bound by a set
name stay symbolic; they are instantiated later, when the aggregate is
evaluated against a set of literals (see :func:`alog.semantics.instances`).
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, List, Union

from .syntax import (
    AggregateAtom, Arith, Comparison, Const, Int, Literal, Program, Rule, Term, Var,
    free_variables, term_key, term_vars,
)


class GroundingError(ValueError):
    pass


@dataclass(frozen=True)
class GroundProgram:
    rules: tuple
    constants: tuple = ()

    def __str__(self):
        return "\n".join(map(str, self.rules))

    def __iter__(self):
        return iter(self.rules)

    def __len__(self):
        return len(self.rules)

    def as_program(self) -> Program:
        return Program(self.rules)

    @cached_property
    def head_literals(self) -> frozenset:
        return frozenset(l for r in self.rules for l in r.head)


def _leaves(t: Term) -> Iterable[Term]:
    if isinstance(t, Arith):
        yield from _leaves(t.left)
        yield from _leaves(t.right)
    elif isinstance(t, (Const, Int)):
        yield t


def constant_pool(p: Union[Program, Iterable[Rule]]) -> tuple:
    """Object constants and integers occurring as arguments of literals,
    integers first (numerically), then constants by name.

    Aggregate bounds such as the ``1`` in ``card{...} = 1`` are not terms of
    the signature and do not join the pool.
    """
    rules = p.rules if isinstance(p, Program) else p
    seen = set()
    for r in rules:
        lits = list(r.literals())
        for a in r.agg:
            for item in a.cond:
                if isinstance(item, Literal):
                    lits.append(item)
                else:
                    seen.update(_leaves(item.left))
                    seen.update(_leaves(item.right))
        for l in lits:
            for t in l.args:
                seen.update(_leaves(t))
    return tuple(sorted(seen, key=term_key))


def eval_arith(t: Term) -> int:
    if isinstance(t, Int):
        return t.value
    if isinstance(t, Arith):
        left, right = eval_arith(t.left), eval_arith(t.right)
        if t.op == "+":
            return left + right
        if t.op == "-":
            return left - right
        return left * right
    if isinstance(t, Var):
        raise GroundingError(f"cannot evaluate variable {t}")
    raise GroundingError(f"object constant {t} in arithmetic position")


def simplify_term(t: Term) -> Term:
    """Evaluate every variable-free arithmetic subterm."""
    if not isinstance(t, Arith):
        return t
    if next(term_vars(t), None) is None:
        return Int(eval_arith(t))
    return Arith(t.op, simplify_term(t.left), simplify_term(t.right))


def _simplify_literal(l: Literal) -> Literal:
    if not any(isinstance(a, Arith) for a in l.args):
        return l
    return Literal(l.predicate, tuple(simplify_term(a) for a in l.args), l.negated)


def _simplify_agg(a: AggregateAtom) -> AggregateAtom:
    cond = []
    for item in a.cond:
        if isinstance(item, Comparison):
            cond.append(Comparison(item.op, simplify_term(item.left), simplify_term(item.right)))
        else:
            cond.append(_simplify_literal(item))
    return AggregateAtom(a.func, a.bound_vars, tuple(cond), a.relation, simplify_term(a.rhs))


def ground_rule(rule: Rule, pool) -> List[Rule]:
    variables = sorted(free_variables(rule), key=lambda v: v.name)
    out = []
    for values in itertools.product(pool, repeat=len(variables)):
        subst = dict(zip(variables, values))
        out.append(Rule(
            tuple(_simplify_literal(l.substitute(subst)) for l in rule.head),
            tuple(_simplify_literal(l.substitute(subst)) for l in rule.pos),
            tuple(_simplify_literal(l.substitute(subst)) for l in rule.neg),
            tuple(_simplify_agg(a.substitute_free(subst)) for a in rule.agg),
        ))
    return out


def ground_program(p: Union[Program, GroundProgram]) -> GroundProgram:
    """Full instantiation: one instance per substitution of the rule's free
    variables by pool members, in source order, duplicates dropped."""
    pool = constant_pool(p.rules)
    rules, seen = [], set()
    for rule in p.rules:
        for g in ground_rule(rule, pool):
            if g not in seen:
                seen.add(g)
                rules.append(g)
    extra = set(constant_pool(rules)) | set(pool)
    if isinstance(p, GroundProgram):
        extra |= set(p.constants)
    return GroundProgram(tuple(rules), tuple(sorted(extra, key=term_key)))
