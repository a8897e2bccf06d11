"""# Propagation and search

The solver keeps a partial interpretation I together with the aggregate
atoms that must end up true (TA) or false (FA). Cons closes these under the
inference rules, and the search branches on the smallest undecided atom."""

from alog import cons, enumerate_answer_sets_solver, ground_program, parse_program, solve
from alog.asolver import agg_bounds, strongly_refuted, strongly_satisfied
from alog.syntax import Const, ELiteral, Literal, PartialInterpretation

g = ground_program(parse_program(":- p(a). p(a) :- card{X : q(X)} > 0. q(a) or p(b)."))

"""## First propagation

The constraint falsifies p(a); since p(a) can no longer be derived, the
aggregate in its only rule must be false; q(b) has no rule at all."""

first = cons(PartialInterpretation(), frozenset(), frozenset(), g)
print("I  =", sorted(map(str, first.interpretation.members)))
print("FA =", sorted(map(str, first.fa)))

"""## Guessing q(a) fails

With q(a) true the aggregate in FA is strongly satisfied."""

guess = first.interpretation.add(ELiteral(Literal("q", (Const("a"),))))
print("q(a) consistent:", cons(guess, first.ta, first.fa, first.program).ok)

"""## Trying q(a) false instead"""

print("answer set:", sorted(map(str, solve(g))))

"""## Strong satisfaction

An aggregate is strongly satisfied when every extension of I makes it
true; the test works on an interval of possible values."""

atom = g.rules[1].agg[0]
for interp in (PartialInterpretation(), guess, first.interpretation):
    b = agg_bounds(atom, interp, g.constants)
    print(f"{sorted(map(str, interp.members))}: value in [{b.lower}, {b.upper}]",
          "sat" if strongly_satisfied(atom, interp, g.constants) else "",
          "refuted" if strongly_refuted(atom, interp, g.constants) else "")

"""## Enumerating every answer set"""

h = ground_program(parse_program("p(X) or q(X) :- r(X). r(1). r(2). :- card{X : p(X)} > 1."))
for s in enumerate_answer_sets_solver(h):
    print(sorted(map(str, s)))
