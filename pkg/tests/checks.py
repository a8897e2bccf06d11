"""Checks shared by the property tests and the acceptance gate.

Each check takes one generated instance and returns None on success or a
short description of the counterexample.
"""
import itertools

from alog import enumerate_answer_sets_oracle, enumerate_answer_sets_solver
from alog.asolver import set_strongly_refuted, strongly_refuted, strongly_satisfied
from alog.grounder import GroundProgram
from alog.semantics import agg_true_in_set, canonical
from alog.syntax import ELiteral, Int, Literal, PartialInterpretation, Rule, Var, format_literal_set

from generators import random_aggregate, random_partial


def body_true(r: Rule, S, pool) -> bool:
    return (all(l in S for l in r.pos) and not any(l in S for l in r.neg)
            and all(agg_true_in_set(a, S, pool) for a in r.agg))


def anti_chain(g: GroundProgram):
    family = enumerate_answer_sets_oracle(g)
    for A, B in itertools.permutations(family, 2):
        if A < B:
            return f"{format_literal_set(A)} is a proper subset of {format_literal_set(B)}"


def satisfied_and_supported(g: GroundProgram):
    pool = g.constants
    for S in enumerate_answer_sets_oracle(g):
        for r in g.rules:
            if body_true(r, S, pool) and not any(h in S for h in r.head):
                return f"{format_literal_set(S)} violates {r}"
        for p in S:
            if not any(p in r.head and body_true(r, S, pool) and set(r.head) & S == {p}
                       for r in g.rules):
                return f"{p} is unsupported in {format_literal_set(S)}"


def splitting(bottom: GroundProgram, top: GroundProgram, U):
    """Answer sets of bottom + top are the answer sets X of bottom combined
    with the answer sets of top evaluated on X."""
    whole = enumerate_answer_sets_oracle(GroundProgram(bottom.rules + top.rules, bottom.constants))
    composed = []
    for X in enumerate_answer_sets_oracle(bottom):
        facts = tuple(Rule((l,)) for l in sorted(X, key=Literal.sort_key))
        for A in enumerate_answer_sets_oracle(GroundProgram(facts + top.rules, top.constants)):
            if A & U != X:
                return f"top layer changed the bottom answer set {format_literal_set(X)}"
            composed.append(A)
    if whole != canonical(composed):
        return (f"direct {[format_literal_set(s) for s in whole]} vs "
                f"composed {[format_literal_set(s) for s in canonical(composed)]}")


def differential(g: GroundProgram):
    oracle = enumerate_answer_sets_oracle(g)
    solver = enumerate_answer_sets_solver(g)
    if oracle != solver:
        return (f"oracle {[format_literal_set(s) for s in oracle]} vs "
                f"solver {[format_literal_set(s) for s in solver]}")


def _extensions(true, false, atoms):
    free = [a for a in atoms if a not in true and a not in false]
    for n in range(len(free) + 1):
        for extra in itertools.combinations(free, n):
            yield frozenset(true).union(extra)


def strong_verdicts(rng, pool_size: int):
    """Draw a partial interpretation and up to three aggregates over a pool
    of ``pool_size`` integers; confirm every strong verdict on all total
    extensions."""
    pool = tuple(Int(i) for i in range(1, pool_size + 1))
    X = Var("X")
    atoms = [Literal(p, (c,)) for p in "pq" for c in pool]
    conditions = [(Literal("p", (X,)),), (Literal("q", (X,)),),
                  (Literal("p", (X,)), Literal("q", (X,)))]
    aggs = [random_aggregate(rng, conditions) for _ in range(rng.randint(1, 3))]
    true, false = random_partial(rng, atoms)
    interp = PartialInterpretation(true, false)
    lits = [ELiteral(rng.choice(atoms), rng.random() < 0.5) for _ in range(rng.randint(0, 2))]
    extensions = list(_extensions(true, false, atoms))

    def value(atom, S):
        if isinstance(atom, ELiteral):
            return (atom.literal in S) != atom.naf
        return agg_true_in_set(atom, S, pool)

    for atom in aggs + lits:
        if strongly_satisfied(atom, interp, pool) and not all(value(atom, S) for S in extensions):
            return f"{atom} wrongly strongly satisfied"
        if strongly_refuted(atom, interp, pool) and any(value(atom, S) for S in extensions):
            return f"{atom} wrongly strongly refuted"
    members = aggs + lits
    if set_strongly_refuted(members, interp, pool):
        if any(all(value(a, S) for a in members) for S in extensions):
            return f"{members} wrongly refuted as a set"


def classical_answer_sets(g: GroundProgram):
    """Stable models of an aggregate-free program straight from the
    definition: every consistent candidate is checked against the reduct by
    brute force, minimality included."""
    lits = sorted({l for r in g.rules for l in r.literals()}, key=Literal.sort_key)

    def model(S, rules):
        return all(any(h in S for h in r.head) or not all(l in S for l in r.pos) for r in rules)

    found = []
    for n in range(len(lits) + 1):
        for cand in itertools.combinations(lits, n):
            S = frozenset(cand)
            if any(l.complement() in S for l in S):
                continue
            reduct = [r for r in g.rules if not any(l in S for l in r.neg)]
            if not model(S, reduct):
                continue
            if any(model(frozenset(sub), reduct)
                   for k in range(len(cand)) for sub in itertools.combinations(cand, k)):
                continue
            found.append(S)
    return canonical(found)


def aggregate_free_agreement(g: GroundProgram, with_solver: bool):
    expected = classical_answer_sets(g)
    got = enumerate_answer_sets_oracle(g)
    if got != expected:
        return f"oracle {[format_literal_set(s) for s in got]} vs classical {[format_literal_set(s) for s in expected]}"
    if with_solver and enumerate_answer_sets_solver(g) != expected:
        return "solver differs from classical stable models"


def rename_bound(g: GroundProgram, new: str = "Renamed") -> GroundProgram:
    rules = tuple(Rule(r.head, r.pos, r.neg,
                       tuple(a.rename_bound({v: Var(f"{new}{i}") for i, v in enumerate(a.bound_vars)})
                             for a in r.agg))
                  for r in g.rules)
    return GroundProgram(rules, g.constants)


def renaming_invariance(g: GroundProgram):
    h = rename_bound(g)
    if h.rules == g.rules and any(r.agg for r in g.rules):
        return "renaming had no effect"
    for enumerate_ in (enumerate_answer_sets_oracle, enumerate_answer_sets_solver):
        if enumerate_(g) != enumerate_(h):
            return f"{enumerate_.__name__} changed under renaming"
