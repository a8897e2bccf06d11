"""# Answer sets and the vicious circle

A set S is an answer set when it is an answer set of the aggregate reduct
of the program with respect to S. The reduct drops rules whose aggregates
fail in S and replaces the others by the condition literals they used."""

from alog import aggregate_reduct, enumerate_answer_sets_oracle, ground_program, parse_program
from alog.parser import parse_literal_set
from alog.syntax import format_literal_set


def show(title, src):
    g = ground_program(parse_program(src))
    found = enumerate_answer_sets_oracle(g)
    print(f"{title}: {' '.join(map(format_literal_set, found)) or 'no answer sets'}")
    return g


"""## p(b) defined through a set that may contain b

The only candidate {p(a), p(b)} needs p(b) to justify itself."""

p4 = show("P4", "p(a). p(b) :- card{X : p(X)} > 0.")
S = parse_literal_set("{p(a), p(b)}")
for rule in aggregate_reduct(p4, S).rules:
    print("   ", rule)

"""## Excluding b removes the circle"""

p4m = show("P4 modified", "p(a). p(b) :- card{X : p(X), X != b} > 0.")
for rule in aggregate_reduct(p4m, S).rules:
    print("   ", rule)

"""## Self reference collapses to a tautology"""

show("P1", "p(a) :- card{X : p(X)} = 1.")

"""## Only the set matters, not the aggregate atom"""

show("P7", "p(a) :- count{X : p(X)} > 0. p(b) :- not q. q :- not p(b).")
show("P6", "p(1) :- p(0). p(0) :- p(1). p(1) :- count{X : p(X)} != 1.")

"""## Recursion through an aggregate without a circle"""

show("and-gate", """
val(W,0) :- gate(G, and), output(W, G), card{W : val(W,0), input(W, G)} > 0.
gate(g, and). output(w0, g). input(w1, g). input(w2, g). val(w1,0).
""")
