"""Answer sets of ground Alog programs, decided through the aggregate reduct.

The aggregate reduct of a ground program with respect to a candidate set S
drops every rule with an aggregate atom false in S and replaces each
remaining aggregate atom by the condition literals of its instances that
hold in S.  S is an answer set when it is an ordinary (disjunctive, with
default negation) answer set of that reduct.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import AbstractSet, Iterable, List, Optional, Sequence, Tuple

from .grounder import GroundingError, GroundProgram, eval_arith, simplify_term
from .syntax import (
    AggregateAtom, Arith, Comparison, Int, Literal, Rule, Var, compare,
    is_consistent_set, literal_set_key, substitute_term, term_key,
)

DEFAULT_ORACLE_CAP = 24


class AggregateError(ValueError):
    """Raised when sum/min/max meets a non-integer element."""


class OracleCapExceeded(RuntimeError):
    pass


@dataclass(frozen=True)
class AggregateValue:
    defined: bool
    value: int = 0


# %% aggregate instances and evaluation

def _ground_value(t):
    t = simplify_term(t)
    if isinstance(t, (Var, Arith)):
        raise ValueError(f"term {t} is not ground; ground the program first")
    return t


@lru_cache(maxsize=None)
def _instances(a: AggregateAtom, pool: tuple) -> tuple:
    out = []
    for values in itertools.product(pool, repeat=len(a.bound_vars)):
        subst = dict(zip(a.bound_vars, values))
        lits, ok = [], True
        try:
            for item in a.cond:
                if isinstance(item, Comparison):
                    left = _ground_value(substitute_term(item.left, subst))
                    right = _ground_value(substitute_term(item.right, subst))
                    if not compare(item.op, term_key(left), term_key(right)):
                        ok = False
                        break
                else:
                    l = item.substitute(subst)
                    if any(isinstance(x, Arith) for x in l.args):
                        l = Literal(l.predicate, tuple(_ground_value(x) for x in l.args), l.negated)
                    elif not l.is_ground:
                        raise ValueError(f"condition literal {l} is not ground; ground the program first")
                    lits.append(l)
        except GroundingError:
            # bound variable met an object constant in an arithmetic position
            ok = False
        if ok:
            out.append((tuple(values), tuple(dict.fromkeys(lits))))
    return tuple(out)


def instances(a: AggregateAtom, pool: Sequence) -> List[Tuple[tuple, tuple]]:
    """Instances of the set name of ``a``: one ``(tuple, condition literals)``
    entry per substitution of the bound variables by pool members whose
    built-in comparisons hold."""
    return list(_instances(a, tuple(pool)))


def rhs_value(a: AggregateAtom) -> int:
    return eval_arith(a.rhs)


def _integer(t) -> int:
    if not isinstance(t, Int):
        raise AggregateError(f"aggregate over non-integer element {t}")
    return t.value


def aggregate_value(func: str, tuples: Iterable[tuple]) -> AggregateValue:
    tuples = list(tuples)
    if func in ("card", "count"):
        return AggregateValue(True, len(tuples))
    if func == "sum":
        return AggregateValue(True, sum(_integer(t[0]) for t in tuples))
    if not tuples:
        return AggregateValue(False)
    values = [_integer(t[0]) for t in tuples]
    return AggregateValue(True, min(values) if func == "min" else max(values))


def holds(a: AggregateAtom, value: AggregateValue) -> bool:
    return value.defined and compare(a.relation, value.value, rhs_value(a))


def agg_true_in_set(a: AggregateAtom, S: AbstractSet[Literal], pool: Sequence) -> bool:
    chosen = [t for t, lits in _instances(a, tuple(pool)) if all(l in S for l in lits)]
    return holds(a, aggregate_value(a.func, chosen))


# %% reducts

def aggregate_reduct(gp: GroundProgram, S: AbstractSet[Literal]) -> GroundProgram:
    pool = tuple(gp.constants)
    rules = []
    for r in gp.rules:
        if not r.agg:
            rules.append(r)
            continue
        if not all(agg_true_in_set(a, S, pool) for a in r.agg):
            continue
        pos = list(r.pos)
        for a in r.agg:
            for _, lits in _instances(a, pool):
                if all(l in S for l in lits):
                    pos.extend(lits)
        rules.append(Rule(r.head, tuple(dict.fromkeys(pos)), r.neg, ()))
    return GroundProgram(tuple(rules), gp.constants)


def satisfies(S: AbstractSet[Literal], r: Rule) -> bool:
    if r.agg:
        raise ValueError("satisfies() expects an aggregate-free rule")
    return (any(l in S for l in r.head)
            or any(l not in S for l in r.pos)
            or any(l in S for l in r.neg))


def gl_reduct(gp: GroundProgram, S: AbstractSet[Literal]) -> GroundProgram:
    rules = tuple(Rule(r.head, r.pos, (), ()) for r in gp.rules
                  if not any(l in S for l in r.neg))
    return GroundProgram(rules, gp.constants)


def _has_smaller_model(S: frozenset, rules: Sequence[Rule]) -> bool:
    """Whether some model M of the positive program ``rules`` is a proper
    subset of S.  Assumes S is itself a model.

    Search over subsets of S, forcing head atoms that are the only choice
    left inside S and branching on disjunctive heads.
    """
    relevant = [r for r in rules if all(l in S for l in r.pos)]
    heads = [tuple(l for l in r.head if l in S) for r in relevant]

    def search(forced: frozenset) -> bool:
        forced = set(forced)
        changed = True
        while changed:
            changed = False
            for r, h in zip(relevant, heads):
                if any(l in forced for l in h) or not all(l in forced for l in r.pos):
                    continue
                if not h:
                    return False
                if len(h) == 1:
                    forced.add(h[0])
                    changed = True
        if len(forced) == len(S):
            return False
        for r, h in zip(relevant, heads):
            if all(l in forced for l in r.pos) and not any(l in forced for l in h):
                return any(search(frozenset(forced | {l})) for l in h)
        return True

    return search(frozenset())


def is_answer_set_asp(S: AbstractSet[Literal], gp: GroundProgram) -> bool:
    """Answer set check for aggregate-free programs: S must be consistent, a
    model of the reduct that drops rules blocked by `not` and strips the
    remaining `not` literals, and a minimal one."""
    S = frozenset(S)
    if any(r.agg for r in gp.rules):
        raise ValueError("is_answer_set_asp() expects an aggregate-free program")
    if not is_consistent_set(S):
        return False
    reduct = gl_reduct(gp, S).rules
    if not all(satisfies(S, r) for r in reduct):
        return False
    return not _has_smaller_model(S, reduct)


def is_answer_set_alog(S: AbstractSet[Literal], gp: GroundProgram) -> bool:
    return is_answer_set_asp(S, aggregate_reduct(gp, S))


# %% enumeration oracle

def herbrand_base(gp: GroundProgram) -> frozenset:
    """Regular literals occurring in ``gp``, including the condition literals
    of every aggregate instance over the constant pool."""
    base = set()
    pool = tuple(gp.constants)
    for r in gp.rules:
        base.update(r.literals())
        for a in r.agg:
            for _, lits in _instances(a, pool):
                base.update(lits)
    return frozenset(base)


def canonical(answer_sets: Iterable[AbstractSet[Literal]]) -> List[frozenset]:
    unique = {frozenset(s) for s in answer_sets}
    return sorted(unique, key=literal_set_key)


def enumerate_answer_sets_oracle(gp: GroundProgram, cap: Optional[int] = DEFAULT_ORACLE_CAP) -> List[frozenset]:
    """All answer sets of ``gp`` by testing every candidate set.

    Candidates range over consistent subsets of the head literals (no other
    literal can be derived); unconditional facts are in every candidate.  The
    number of remaining open literals is limited by ``cap``.
    """
    facts = frozenset(r.head[0] for r in gp.rules if r.is_fact)
    open_lits = sorted(gp.head_literals - facts, key=Literal.sort_key)
    if cap is not None and len(open_lits) > cap:
        raise OracleCapExceeded(f"{len(open_lits)} open literals exceed the oracle cap of {cap}")
    found = []
    for n in range(len(open_lits) + 1):
        for extra in itertools.combinations(open_lits, n):
            S = facts.union(extra)
            if is_answer_set_alog(S, gp):
                found.append(S)
    return canonical(found)
