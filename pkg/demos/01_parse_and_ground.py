"""# Parsing and grounding

Variables listed before the colon of a set name are bound; every other
variable is free. Grounding replaces only the free ones."""

from alog import format_program, ground_program, parse_program

src = """
q(Y) :- card{X : p(X,Y)} = 1, r(Y).
r(a). r(b). p(a,b).
"""
prog = parse_program(src)
print(format_program(prog))

"""## Ground instances

X stays symbolic inside the set name, Y is replaced by each constant."""

g = ground_program(prog)
for rule in g.rules:
    print(rule)
print("constants:", ", ".join(map(str, g.constants)))

"""## Free and bound occurrences of the same name

Here X is bound in the aggregate and free in q(X), so the rule has one
instance per constant while the set name is untouched."""

for rule in ground_program(parse_program("r :- card{X : p(X)} >= 2, q(X). p(a). p(b). q(a).")).rules:
    print(rule)

"""## Arithmetic

Arithmetic in free positions is evaluated after substitution."""

for rule in ground_program(parse_program("succ(X, X + 1) :- n(X). n(1). n(2).")).rules:
    print(rule)
