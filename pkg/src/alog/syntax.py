"""Abstract syntax of Alog programs and the interpretation structures shared
by the grounder, the semantics and the solver.

All values are immutable and hashable, so ground literals and rules can be
used directly as set members and dictionary keys.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import AbstractSet, Iterable, Iterator, Mapping, Union

AGGREGATE_FUNCTIONS = ("card", "count", "sum", "min", "max")
RELATIONS = (">", ">=", "<", "<=", "=", "!=")
ARITH_OPS = ("+", "-", "*")

_PRECEDENCE = {"+": 1, "-": 1, "*": 2}


# %% terms

@dataclass(frozen=True)
class Const:
    name: str

    def __str__(self):
        return self.name


@dataclass(frozen=True)
class Int:
    value: int

    def __str__(self):
        return str(self.value)


@dataclass(frozen=True)
class Var:
    name: str

    def __str__(self):
        return self.name


@dataclass(frozen=True)
class Arith:
    op: str
    left: "Term"
    right: "Term"

    def __post_init__(self):
        if self.op not in ARITH_OPS:
            raise ValueError(f"unknown arithmetic operator {self.op!r}")

    def __str__(self):
        prec = _PRECEDENCE[self.op]
        left = str(self.left)
        if isinstance(self.left, Arith) and _PRECEDENCE[self.left.op] < prec:
            left = f"({left})"
        right = str(self.right)
        if isinstance(self.right, Arith) and _PRECEDENCE[self.right.op] <= prec:
            right = f"({right})"
        return f"{left} {self.op} {right}"


Term = Union[Const, Int, Var, Arith]


def term_key(t: Term):
    """Total order on terms: integers numerically, then constants by name."""
    if isinstance(t, Int):
        return (0, t.value, "")
    if isinstance(t, Const):
        return (1, 0, t.name)
    if isinstance(t, Var):
        return (2, 0, t.name)
    return (3, 0, str(t))


def term_vars(t: Term) -> Iterator[Var]:
    if isinstance(t, Var):
        yield t
    elif isinstance(t, Arith):
        yield from term_vars(t.left)
        yield from term_vars(t.right)


def is_ground_term(t: Term) -> bool:
    return isinstance(t, (Const, Int))


def substitute_term(t: Term, subst: Mapping[Var, Term]) -> Term:
    if isinstance(t, Var):
        return subst.get(t, t)
    if isinstance(t, Arith):
        return Arith(t.op, substitute_term(t.left, subst), substitute_term(t.right, subst))
    return t


# %% literals

@dataclass(frozen=True)
class Literal:
    """A regular literal: an atom, possibly under classical negation."""
    predicate: str
    args: tuple = ()
    negated: bool = False

    def __str__(self):
        sign = "-" if self.negated else ""
        if not self.args:
            return sign + self.predicate
        return f"{sign}{self.predicate}({','.join(map(str, self.args))})"

    @property
    def arity(self) -> int:
        return len(self.args)

    @property
    def is_ground(self) -> bool:
        return all(is_ground_term(a) for a in self.args)

    def complement(self) -> "Literal":
        """The classically negated literal (p <-> -p)."""
        return Literal(self.predicate, self.args, not self.negated)

    def variables(self) -> Iterator[Var]:
        for a in self.args:
            yield from term_vars(a)

    def substitute(self, subst: Mapping[Var, Term]) -> "Literal":
        if not subst:
            return self
        return Literal(self.predicate, tuple(substitute_term(a, subst) for a in self.args), self.negated)

    def sort_key(self):
        return (self.predicate, len(self.args), tuple(term_key(a) for a in self.args), self.negated)


@dataclass(frozen=True)
class ELiteral:
    """A regular literal, possibly preceded by default negation ``not``."""
    literal: Literal
    naf: bool = False

    def __str__(self):
        return f"not {self.literal}" if self.naf else str(self.literal)


def contrary(l: ELiteral) -> ELiteral:
    return ELiteral(l.literal, not l.naf)


@dataclass(frozen=True)
class Comparison:
    """Built-in comparison allowed inside a set name, e.g. ``X != b``."""
    op: str
    left: Term
    right: Term

    def __post_init__(self):
        if self.op not in RELATIONS:
            raise ValueError(f"unknown relation {self.op!r}")

    def __str__(self):
        return f"{self.left} {self.op} {self.right}"

    def variables(self) -> Iterator[Var]:
        yield from term_vars(self.left)
        yield from term_vars(self.right)

    def substitute(self, subst: Mapping[Var, Term]) -> "Comparison":
        return Comparison(self.op, substitute_term(self.left, subst), substitute_term(self.right, subst))


CondItem = Union[Literal, Comparison]


def compare(op: str, left, right) -> bool:
    if op == ">":
        return left > right
    if op == ">=":
        return left >= right
    if op == "<":
        return left < right
    if op == "<=":
        return left <= right
    if op == "=":
        return left == right
    if op == "!=":
        return left != right
    raise ValueError(f"unknown relation {op!r}")


# %% aggregates, rules, programs

@dataclass(frozen=True)
class AggregateAtom:
    func: str
    bound_vars: tuple
    cond: tuple
    relation: str
    rhs: Term

    def __post_init__(self):
        if self.func not in AGGREGATE_FUNCTIONS:
            raise ValueError(f"unknown aggregate function {self.func!r}")
        if self.relation not in RELATIONS:
            raise ValueError(f"unknown relation {self.relation!r}")
        if not self.bound_vars or not self.cond:
            raise ValueError("aggregate needs bound variables and a nonempty condition")
        in_cond = {v for item in self.cond for v in item.variables()}
        missing = [v for v in self.bound_vars if v not in in_cond]
        if missing:
            raise ValueError(f"bound variable {missing[0]} does not occur in the condition")

    def __str__(self):
        head = ",".join(map(str, self.bound_vars))
        body = ", ".join(map(str, self.cond))
        return f"{self.func}{{{head} : {body}}} {self.relation} {self.rhs}"

    @property
    def kind(self) -> str:
        """Aggregate function with ``count`` folded into ``card``."""
        return "card" if self.func == "count" else self.func

    def free_variables(self) -> set:
        bound = set(self.bound_vars)
        free = {v for item in self.cond for v in item.variables() if v not in bound}
        free.update(term_vars(self.rhs))
        return free

    def substitute_free(self, subst: Mapping[Var, Term]) -> "AggregateAtom":
        """Replace free occurrences only; the set name keeps its bound variables."""
        inner = {v: t for v, t in subst.items() if v not in self.bound_vars}
        return AggregateAtom(
            self.func,
            self.bound_vars,
            tuple(item.substitute(inner) for item in self.cond),
            self.relation,
            substitute_term(self.rhs, subst),
        )

    def rename_bound(self, renaming: Mapping[Var, Var]) -> "AggregateAtom":
        """Rename bound variables; the caller must avoid capture."""
        bound = tuple(renaming.get(v, v) for v in self.bound_vars)
        inner = {v: renaming[v] for v in self.bound_vars if v in renaming}
        cond = tuple(item.substitute(inner) for item in self.cond)
        return AggregateAtom(self.func, bound, cond, self.relation, self.rhs)

    def set_key(self):
        """Key identifying ``f{X̄ : cond}`` up to renaming of the bound variables."""
        canon = {v: Var(f"_B{i}") for i, v in enumerate(self.bound_vars)}
        return (self.kind, len(self.bound_vars), tuple(item.substitute(canon) for item in self.cond))

    def sort_key(self):
        return str(self)


@dataclass(frozen=True)
class Rule:
    head: tuple = ()
    pos: tuple = ()
    neg: tuple = ()
    agg: tuple = ()

    def __str__(self):
        head = " or ".join(map(str, self.head))
        body = [str(l) for l in self.pos]
        body += [f"not {l}" for l in self.neg]
        body += [str(a) for a in self.agg]
        if not body:
            return f"{head}."
        if not head:
            return f":- {', '.join(body)}."
        return f"{head} :- {', '.join(body)}."

    @property
    def is_ground(self) -> bool:
        if any(isinstance(t, Arith) for l in self.literals() for t in l.args):
            return False
        if any(not isinstance(a.rhs, Int) for a in self.agg):
            return False
        return not free_variables(self)

    @property
    def is_fact(self) -> bool:
        return len(self.head) == 1 and not (self.pos or self.neg or self.agg)

    def literals(self) -> Iterator[Literal]:
        """Regular literals outside set names."""
        yield from self.head
        yield from self.pos
        yield from self.neg


@dataclass(frozen=True)
class Program:
    rules: tuple = ()

    def __str__(self):
        return "\n".join(map(str, self.rules))

    def __iter__(self):
        return iter(self.rules)

    def __len__(self):
        return len(self.rules)


def free_variables(rule: Rule) -> set:
    """Variables with an occurrence outside every set name of ``rule``."""
    free = {v for l in rule.literals() for v in l.variables()}
    for a in rule.agg:
        free |= a.free_variables()
    return free


def has_classical_negation(rules: Iterable[Rule]) -> bool:
    for r in rules:
        if any(l.negated for l in r.literals()):
            return True
        for a in r.agg:
            if any(isinstance(c, Literal) and c.negated for c in a.cond):
                return True
    return False


# %% interpretations

class Truth(enum.Enum):
    TRUE = "true"
    FALSE = "false"
    UNDEFINED = "undefined"


@dataclass(frozen=True)
class PartialInterpretation:
    """A set of ground e-literals, stored as the literals asserted (``true``)
    and the literals under ``not`` (``false``)."""
    true: frozenset = frozenset()
    false: frozenset = frozenset()

    @classmethod
    def of(cls, *items) -> "PartialInterpretation":
        true, false = set(), set()
        for item in items:
            if isinstance(item, ELiteral):
                (false if item.naf else true).add(item.literal)
            else:
                true.add(item)
        return cls(frozenset(true), frozenset(false))

    @classmethod
    def total(cls, true: AbstractSet[Literal], base: Iterable[Literal]) -> "PartialInterpretation":
        true = frozenset(true)
        return cls(true, frozenset(l for l in base if l not in true))

    @property
    def members(self) -> frozenset:
        return frozenset(ELiteral(l) for l in self.true) | frozenset(ELiteral(l, True) for l in self.false)

    def __contains__(self, item) -> bool:
        if isinstance(item, ELiteral):
            return item.literal in (self.false if item.naf else self.true)
        return item in self.true

    def __len__(self):
        return len(self.true) + len(self.false)

    def __str__(self):
        items = sorted(self.members, key=lambda e: (e.literal.sort_key(), e.naf))
        return "{" + ", ".join(map(str, items)) + "}"

    def is_consistent(self) -> bool:
        if self.true & self.false:
            return False
        return not any(l.complement() in self.true for l in self.true if not l.negated)

    def add(self, *items) -> "PartialInterpretation":
        other = PartialInterpretation.of(*items)
        return PartialInterpretation(self.true | other.true, self.false | other.false)

    def decided(self, l: Literal) -> bool:
        return l in self.true or l in self.false


def truth_value(l: Union[ELiteral, Literal], interp: PartialInterpretation) -> Truth:
    e = l if isinstance(l, ELiteral) else ELiteral(l)
    if e in interp:
        return Truth.TRUE
    if contrary(e) in interp:
        return Truth.FALSE
    return Truth.UNDEFINED


def is_consistent_set(literals: AbstractSet[Literal]) -> bool:
    return not any(l.complement() in literals for l in literals if not l.negated)


def format_literal_set(literals: Iterable[Literal]) -> str:
    return "{" + ", ".join(str(l) for l in sorted(literals, key=Literal.sort_key)) + "}"


def literal_set_key(literals: Iterable[Literal]):
    """Canonical ordering key for answer sets."""
    return tuple(l.sort_key() for l in sorted(literals, key=Literal.sort_key))
