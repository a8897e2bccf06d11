"""Asolver: propagation and search for answer sets of ground Alog programs
without classical negation.

The solver keeps a partial interpretation I together with two sets of
aggregate atoms, TA (must end up true) and FA (must end up false).  ``cons``
closes I under four inference rules; ``solver`` branches on an undecided
atom, true first, and checks every total interpretation it reaches against
the original program with the aggregate-reduct definition.

Aggregate atoms are never grounded.  Strong satisfaction and refutation of
an aggregate are decided from an interval enclosing every value the
aggregate can take in an extension of I (see :class:`AggBounds`).  The test
is sound but may report "undecided" where an exact test would not; the final
answer-set check keeps the results exact.
"""
from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from typing import AbstractSet, Dict, Iterable, List, Optional, Sequence, Tuple, Union

from .grounder import GroundProgram
from .semantics import (
    _instances, aggregate_value, canonical, herbrand_base,
    holds, is_answer_set_alog, rhs_value,
)
from .syntax import (
    AggregateAtom, ELiteral, Int, Literal, PartialInterpretation, Rule,
    has_classical_negation,
)

Atom = Union[ELiteral, Literal, AggregateAtom]


class ClassicalNegationError(ValueError):
    pass


@dataclass(frozen=True)
class AggBounds:
    """Enclosure of the values an aggregate can take in extensions of I.

    ``None`` marks an unbounded side.  ``may_be_undefined`` covers min/max of
    a possibly empty set; ``may_be_defined`` is false only when that set is
    certainly empty.
    """
    lower: Optional[int]
    upper: Optional[int]
    may_be_undefined: bool = False
    may_be_defined: bool = True


@dataclass(frozen=True)
class ConsOutcome:
    program: GroundProgram
    interpretation: PartialInterpretation
    ta: frozenset
    fa: frozenset
    ok: bool


# %% aggregate bounds and strong satisfaction

def _value(t) -> Optional[int]:
    return t.value if isinstance(t, Int) else None


def _bounds(a: AggregateAtom, true: AbstractSet, false: AbstractSet, pool: tuple) -> AggBounds:
    certain, undecided = [], []
    for t, lits in _instances(a, pool):
        if any(l in false for l in lits):
            continue
        if all(l in true for l in lits):
            certain.append(t)
        else:
            undecided.append(t)
    kind = a.kind
    if kind == "card":
        return AggBounds(len(certain), len(certain) + len(undecided))

    fixed = aggregate_value(kind, certain)  # raises on a certain non-integer element
    loose = [_value(t[0]) for t in undecided]
    unknown = any(v is None for v in loose)
    if kind == "sum":
        if unknown:
            return AggBounds(None, None)
        return AggBounds(fixed.value + sum(v for v in loose if v < 0),
                         fixed.value + sum(v for v in loose if v > 0))

    if not certain and not undecided:
        return AggBounds(None, None, may_be_undefined=True, may_be_defined=False)
    if unknown:
        return AggBounds(None, None, may_be_undefined=not certain)
    if certain:
        extremes = [fixed.value] + loose
        if kind == "min":
            return AggBounds(min(extremes), fixed.value)
        return AggBounds(fixed.value, max(extremes))
    return AggBounds(min(loose), max(loose), may_be_undefined=True)


def agg_bounds(a: AggregateAtom, interp: PartialInterpretation, pool: Sequence) -> AggBounds:
    return _bounds(a, interp.true, interp.false, tuple(pool))


def agg_truth_in_partial(a: AggregateAtom, interp: PartialInterpretation, pool: Sequence) -> bool:
    """Truth of ``a`` in I: the aggregate over the instances whose condition
    literals all belong to I."""
    chosen = [t for t, lits in _instances(a, tuple(pool)) if all(l in interp.true for l in lits)]
    return holds(a, aggregate_value(a.func, chosen))


def _all_satisfy(rel: str, n: int, lo, hi) -> bool:
    if rel == ">":
        return lo is not None and lo > n
    if rel == ">=":
        return lo is not None and lo >= n
    if rel == "<":
        return hi is not None and hi < n
    if rel == "<=":
        return hi is not None and hi <= n
    if rel == "=":
        return lo is not None and lo == hi == n
    return (hi is not None and hi < n) or (lo is not None and lo > n)


def _some_satisfy(rel: str, n: int, lo, hi) -> bool:
    if rel == ">":
        return hi is None or hi > n
    if rel == ">=":
        return hi is None or hi >= n
    if rel == "<":
        return lo is None or lo < n
    if rel == "<=":
        return lo is None or lo <= n
    if rel == "=":
        return (lo is None or lo <= n) and (hi is None or hi >= n)
    return not (lo is not None and lo == hi == n)


def _agg_satisfied(a, true, false, pool) -> bool:
    b = _bounds(a, true, false, pool)
    return (b.may_be_defined and not b.may_be_undefined
            and _all_satisfy(a.relation, rhs_value(a), b.lower, b.upper))


def _agg_refuted(a, true, false, pool) -> bool:
    b = _bounds(a, true, false, pool)
    return not b.may_be_defined or not _some_satisfy(a.relation, rhs_value(a), b.lower, b.upper)


def _elit(atom) -> ELiteral:
    return atom if isinstance(atom, ELiteral) else ELiteral(atom)


def _satisfied(atom, true, false, pool) -> bool:
    if isinstance(atom, AggregateAtom):
        return _agg_satisfied(atom, true, false, pool)
    e = _elit(atom)
    return e.literal in (false if e.naf else true)


def _refuted(atom, true, false, pool) -> bool:
    if isinstance(atom, AggregateAtom):
        return _agg_refuted(atom, true, false, pool)
    e = _elit(atom)
    return e.literal in (true if e.naf else false)


def strongly_satisfied(atom: Atom, interp: PartialInterpretation, pool: Sequence = ()) -> bool:
    return _satisfied(atom, interp.true, interp.false, tuple(pool))


def strongly_refuted(atom: Atom, interp: PartialInterpretation, pool: Sequence = ()) -> bool:
    return _refuted(atom, interp.true, interp.false, tuple(pool))


def _set_refuted(atoms: Iterable[Atom], true, false, pool) -> bool:
    groups = defaultdict(list)
    signs = defaultdict(set)
    for atom in atoms:
        if _refuted(atom, true, false, pool):
            return True
        if isinstance(atom, AggregateAtom):
            groups[atom.set_key()].append(atom)
        else:
            e = _elit(atom)
            signs[e.literal].add(e.naf)
    if any(len(s) == 2 for s in signs.values()):
        return True
    for group in groups.values():
        if len(group) < 2:
            continue
        b = _bounds(group[0], true, false, pool)
        lo, hi, excluded = b.lower, b.upper, set()
        for a in group:
            n = rhs_value(a)
            rel = a.relation
            if rel in (">", ">="):
                n = n + 1 if rel == ">" else n
                lo = n if lo is None else max(lo, n)
            elif rel in ("<", "<="):
                n = n - 1 if rel == "<" else n
                hi = n if hi is None else min(hi, n)
            elif rel == "=":
                lo = n if lo is None else max(lo, n)
                hi = n if hi is None else min(hi, n)
            else:
                excluded.add(n)
        if lo is not None and hi is not None:
            if lo > hi or (hi - lo < len(excluded) and all(v in excluded for v in range(lo, hi + 1))):
                return True
    return False


def set_strongly_refuted(atoms: Iterable[Atom], interp: PartialInterpretation, pool: Sequence = ()) -> bool:
    """Sound test that every extension of I falsifies some member of ``atoms``:
    a member is strongly refuted, a literal occurs both plain and under
    ``not``, or aggregates over the same set name ask
    for incompatible values."""
    return _set_refuted(atoms, interp.true, interp.false, tuple(pool))


# %% inference rules

def _body(r: Rule) -> List[Atom]:
    return [ELiteral(l) for l in r.pos] + [ELiteral(l, True) for l in r.neg] + list(r.agg)


class _State:
    """Mutable working copy of (I, TA, FA) used inside one call of ``cons``."""

    def __init__(self, interp: PartialInterpretation, ta, fa, pool: tuple, base: frozenset):
        self.true = set(interp.true)
        self.false = set(interp.false)
        self.ta = set(ta)
        self.fa = set(fa)
        self.pool = pool
        self.base = base
        self.conflict = False

    def size(self):
        return len(self.true), len(self.false), len(self.ta), len(self.fa)

    def consistent(self) -> bool:
        return not self.conflict and not (self.true & self.false)

    def sat(self, atom) -> bool:
        return _satisfied(atom, self.true, self.false, self.pool)

    def body_satisfied(self, r: Rule) -> bool:
        return all(self.sat(x) for x in _body(r))

    def body_refuted(self, r: Rule) -> bool:
        return _set_refuted(_body(r), self.true, self.false, self.pool)

    def head_index(self, rules) -> Dict[Literal, List[Rule]]:
        index = defaultdict(list)
        for r in rules:
            for h in r.head:
                index[h].append(r)
        return index


def _rule1(st: _State, r: Rule):
    open_heads = [h for h in r.head if h not in st.false]
    if len(open_heads) > 1 or not st.body_satisfied(r):
        return set(), set(), set(), set()
    if not open_heads:
        st.conflict = True
        return set(), set(), set(), set()
    return {open_heads[0]}, set(), set(), set()


def _rule2(st: _State, r: Rule, index):
    dt, df, dta = set(), set(), set()
    for p in r.head:
        if p in st.true and len(index.get(p, ())) == 1:
            df.update(h for h in r.head if h != p)
            dt.update(r.pos)
            df.update(r.neg)
            dta.update(r.agg)
    return dt, df, dta, set()


def _rule3(st: _State, r: Rule):
    if not all(h in st.false for h in r.head):
        return set(), set(), set(), set()
    pending = [x for x in _body(r) if not st.sat(x)]
    if len(pending) != 1:
        return set(), set(), set(), set()
    l = pending[0]
    if isinstance(l, AggregateAtom):
        if l in st.fa:
            return set(), set(), set(), set()
        return set(), set(), set(), {l}
    if l.literal in st.true or l.literal in st.false:
        return set(), set(), set(), set()
    if l.naf:
        return {l.literal}, set(), set(), set()
    return set(), {l.literal}, set(), set()


def _rule4(st: _State, index):
    df = set()
    for p in st.base:
        if p in st.false:
            continue
        if all(st.body_refuted(r) for r in index.get(p, ())):
            df.add(p)
    return set(), df, set(), set()


def _apply(st: _State, delta):
    dt, df, dta, dfa = delta
    st.true |= dt
    st.false |= df
    st.ta |= dta
    st.fa |= dfa


def icons(i: int, interp: PartialInterpretation, program: GroundProgram, rule: Optional[Rule] = None,
          *, fa: AbstractSet = frozenset(), base: Optional[AbstractSet] = None):
    """Apply inference rule ``i`` (1-4) to ``rule`` and return the additions
    ``(dI, dTA, dFA)``; ``dI`` is a :class:`PartialInterpretation`.  Rule 4
    ranges over the whole ``base`` and ignores ``rule``."""
    if base is None:
        base = herbrand_base(program)
    st = _State(interp, (), fa, tuple(program.constants), frozenset(base))
    index = st.head_index(program.rules)
    if i == 1:
        delta = _rule1(st, rule)
    elif i == 2:
        delta = _rule2(st, rule, index)
    elif i == 3:
        delta = _rule3(st, rule)
    elif i == 4:
        delta = _rule4(st, index)
    else:
        raise ValueError(f"no inference rule {i}")
    dt, df, dta, dfa = delta
    return PartialInterpretation(frozenset(dt), frozenset(df)), frozenset(dta), frozenset(dfa)


# %% Cons

def _simplify(st: _State, rules: Sequence[Rule]) -> List[Rule]:
    out = []
    for r in rules:
        if st.body_refuted(r):
            continue
        neg = tuple(l for l in r.neg if l not in st.false)
        agg = tuple(a for a in r.agg if not st.sat(a))
        out.append(r if (neg, agg) == (r.neg, r.agg) else Rule(r.head, r.pos, neg, agg))
    return out


def _compatible(st: _State) -> bool:
    if _set_refuted(st.ta, st.true, st.false, st.pool):
        return False
    return not any(st.sat(a) for a in st.fa)


def cons(interp: PartialInterpretation, ta: AbstractSet, fa: AbstractSet, program: GroundProgram,
         *, base: Optional[AbstractSet] = None) -> ConsOutcome:
    """Consequences of (I, TA, FA) under ``program``.

    Each round simplifies the program and then applies inference rules 1-4
    in turn to every rule; rounds repeat until I, TA and FA stop growing.
    On an inconsistent I or incompatible TA/FA the inputs come back with
    ``ok=False``.
    """
    if base is None:
        base = herbrand_base(program)
    st = _State(interp, ta, fa, tuple(program.constants), frozenset(base))
    rules = list(program.rules)
    while True:
        before = st.size()
        rules = _simplify(st, rules)
        index = st.head_index(rules)
        for r in rules:
            _apply(st, _rule1(st, r))
        for r in rules:
            _apply(st, _rule2(st, r, index))
        for r in rules:
            _apply(st, _rule3(st, r))
        _apply(st, _rule4(st, index))
        if not st.consistent() or st.size() == before:
            break
    if not st.consistent() or not _compatible(st):
        return ConsOutcome(program, interp, frozenset(ta), frozenset(fa), False)
    return ConsOutcome(
        GroundProgram(tuple(rules), program.constants),
        PartialInterpretation(frozenset(st.true), frozenset(st.false)),
        frozenset(st.ta), frozenset(st.fa), True,
    )


# %% solver

def is_answer_set(interp: PartialInterpretation, program: GroundProgram) -> bool:
    return is_answer_set_alog(interp.true, program)


def _check_scope(program: GroundProgram):
    if has_classical_negation(program.rules):
        raise ClassicalNegationError("the solver handles programs without classical negation only")


def _undecided(interp: PartialInterpretation, base) -> List[Literal]:
    return sorted((l for l in base if not interp.decided(l)), key=Literal.sort_key)


def solver(interp: PartialInterpretation, ta: AbstractSet, fa: AbstractSet, program: GroundProgram,
           *, original: Optional[GroundProgram] = None,
           base: Optional[AbstractSet] = None) -> Tuple[PartialInterpretation, bool]:
    """Return ``(I, True)`` with I total and its positive part an answer set
    of the program compatible with the inputs, or ``(interp, False)``."""
    if original is None:
        _check_scope(program)
        original = program
    if base is None:
        base = herbrand_base(original)
    out = cons(interp, ta, fa, program, base=base)
    if not out.ok:
        return interp, False
    open_atoms = _undecided(out.interpretation, base)
    if not open_atoms:
        if is_answer_set(out.interpretation, original):
            return out.interpretation, True
        return interp, False
    p = open_atoms[0]
    for branch in (out.interpretation.add(ELiteral(p)), out.interpretation.add(ELiteral(p, True))):
        result, found = solver(branch, out.ta, out.fa, out.program, original=original, base=base)
        if found:
            return result, True
    return interp, False


def enumerate_answer_sets_solver(program: GroundProgram, limit: Optional[int] = None) -> List[frozenset]:
    """All answer sets (or the first ``limit`` found), explored with the same
    propagation and branching as :func:`solver`, in canonical order."""
    _check_scope(program)
    base = herbrand_base(program)
    found = []
    stack = [(PartialInterpretation(), frozenset(), frozenset(), program)]
    while stack:
        interp, ta, fa, current = stack.pop()
        out = cons(interp, ta, fa, current, base=base)
        if not out.ok:
            continue
        open_atoms = _undecided(out.interpretation, base)
        if not open_atoms:
            if is_answer_set(out.interpretation, program):
                found.append(out.interpretation.true)
                if limit is not None and len(found) >= limit:
                    break
            continue
        p = open_atoms[0]
        # pushed in reverse so the true branch is explored first
        stack.append((out.interpretation.add(ELiteral(p, True)), out.ta, out.fa, out.program))
        stack.append((out.interpretation.add(ELiteral(p)), out.ta, out.fa, out.program))
    return canonical(found)


def solve(program: GroundProgram) -> Optional[frozenset]:
    """First answer set found by :func:`solver`, or ``None``."""
    interp, ok = solver(PartialInterpretation(), frozenset(), frozenset(), program)
    return interp.true if ok else None
