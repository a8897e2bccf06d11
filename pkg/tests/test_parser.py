import string

import pytest
from hypothesis import given, settings, strategies as st

from alog import ParseError, format_program, parse_program
from alog.parser import parse_literal_set, parse_rule
from alog.syntax import (
    AggregateAtom, Arith, Comparison, Const, Int, Literal, Program, Rule, Var,
)


def test_aggregate_rule():
    r = parse_rule("p(a) :- card{X : p(X)}=1.")
    assert r.head == (Literal("p", (Const("a"),)),)
    assert r.pos == r.neg == ()
    assert r.agg == (AggregateAtom("card", (Var("X"),), (Literal("p", (Var("X"),)),), "=", Int(1)),)


def test_disjunctive_fact():
    r = parse_rule("q(a) or p(b).")
    assert r.head == (Literal("q", (Const("a"),)), Literal("p", (Const("b"),)))
    assert (r.pos, r.neg, r.agg) == ((), (), ())


def test_constraint_and_negations():
    r = parse_rule(":- p(a), not -q(b), -r.")
    assert r.head == ()
    assert r.pos == (Literal("p", (Const("a"),)), Literal("r", (), True))
    assert r.neg == (Literal("q", (Const("b"),), True),)


def test_comparison_inside_set_name():
    r = parse_rule("p(b) :- card{X:p(X), X != b} > 0.")
    assert r.agg[0].cond == (Literal("p", (Var("X"),)), Comparison("!=", Var("X"), Const("b")))
    r = parse_rule("h :- sum{X : p(X), b != X, -1 < X, X + 1 <= 4} >= 0.")
    assert r.agg[0].cond[1:] == (
        Comparison("!=", Const("b"), Var("X")),
        Comparison("<", Int(-1), Var("X")),
        Comparison("<=", Arith("+", Var("X"), Int(1)), Int(4)),
    )


def test_arithmetic_precedence_and_unary_minus():
    r = parse_rule("p(X*2+1, X-3, -4) :- q(X).")
    assert r.head[0].args == (
        Arith("+", Arith("*", Var("X"), Int(2)), Int(1)),
        Arith("-", Var("X"), Int(3)),
        Int(-4),
    )


def test_comments_and_whitespace():
    prog = parse_program("% a comment\np(a).  % trailing\n\n  q :- p(a).\n")
    assert len(prog.rules) == 2


def test_count_is_kept_as_written():
    r = parse_rule("p :- count{X : q(X)} > 0.")
    assert r.agg[0].func == "count" and r.agg[0].kind == "card"


@pytest.mark.parametrize("src, kind", [
    ("p(a)", "syntactic"),
    ("r :- card{X: } > 0.", "syntactic"),
    ("r :- card{a:p(a,a),b:p(b,a)} = 1.", "syntactic"),
    ("r :- card{X : not p(X)} > 0.", "syntactic"),
    ("p(a). p(a,b).", "arity-mismatch"),
    ("r :- card{X, Y : p(X)} > 0.", "unsafe-aggregate"),
    ("p(a) :- q#.", "lexical"),
    ("p(f(a)).", "syntactic"),
    ("not p.", "syntactic"),
    ("p :- .", "syntactic"),
])
def test_parse_errors(src, kind):
    with pytest.raises(ParseError) as info:
        parse_program(src)
    assert info.value.kind == kind
    assert info.value.position.line >= 1 and info.value.position.column >= 1


def test_error_position_and_token():
    with pytest.raises(ParseError) as info:
        parse_program("p(a).\nq(b) :- r(c)\n")
    assert info.value.position.line == 3
    assert "end of input" in info.value.message
    with pytest.raises(ParseError) as info:
        parse_program("p(a).\n  q(b) :- , r.")
    assert (info.value.position.line, info.value.position.column) == (2, 11)
    assert "','" in info.value.message


@pytest.mark.parametrize("src, text", [
    ("p(a).", "p(a)."),
    ("q :- not p(b).", "q :- not p(b)."),
    ("need_ta(C) :- card{X:enrolled(C,X)}>20.", "need_ta(C) :- card{X : enrolled(C,X)} > 20."),
    (":- p(a).", ":- p(a)."),
    ("q(a) or p(b).", "q(a) or p(b)."),
    ("p(X - (Y - 1)) :- q(X,Y).", "p(X - (Y - 1)) :- q(X,Y)."),
])
def test_format(src, text):
    assert format_program(parse_program(src)) == text


def test_literal_set():
    assert parse_literal_set("{}") == frozenset()
    assert parse_literal_set("{p(a,b), q, -r(1)}") == {
        Literal("p", (Const("a"), Const("b"))), Literal("q"), Literal("r", (Int(1),), True)}


# %% properties

VARS = [Var(n) for n in ("X", "Y", "Z1")]
CONSTS = [Const(n) for n in ("a", "b", "card", "c_1")]
ARITY = {"p": 1, "q": 2, "r": 0, "sum": 1}

leaf = st.one_of(st.sampled_from(VARS), st.sampled_from(CONSTS), st.builds(Int, st.integers(-20, 20)))
terms = st.recursive(leaf, lambda inner: st.builds(Arith, st.sampled_from("+-*"), inner, inner), max_leaves=4)


@st.composite
def literals(draw, var_pool=None):
    pred = draw(st.sampled_from(sorted(ARITY)))
    args = tuple(draw(terms) for _ in range(ARITY[pred]))
    return Literal(pred, args, draw(st.booleans()))


@st.composite
def aggregates(draw):
    bound = tuple(draw(st.lists(st.sampled_from(VARS), min_size=1, max_size=2, unique=True)))
    cond = [Literal("q", (bound[0], draw(terms)))]
    if len(bound) > 1:
        cond.append(Literal("p", (bound[1],)))
    if draw(st.booleans()):
        cond.append(Comparison(draw(st.sampled_from(["=", "!=", "<", ">=", ">", "<="])), draw(terms), draw(terms)))
    return AggregateAtom(draw(st.sampled_from(["card", "count", "sum", "min", "max"])), bound,
                         tuple(cond), draw(st.sampled_from([">", ">=", "<", "<=", "=", "!="])), draw(terms))


@st.composite
def rules(draw):
    head = tuple(draw(st.lists(literals(), max_size=2)))
    pos = tuple(draw(st.lists(literals(), max_size=2)))
    neg = tuple(draw(st.lists(literals(), max_size=2)))
    agg = tuple(draw(st.lists(aggregates(), max_size=2)))
    if not head and not (pos or neg or agg):
        head = (Literal("r"),)
    return Rule(head, pos, neg, agg)


@settings(max_examples=300, deadline=None)
@given(st.lists(rules(), max_size=5))
def test_round_trip(rs):
    prog = Program(tuple(rs))
    assert parse_program(format_program(prog)) == prog


@settings(max_examples=500, deadline=None)
@given(st.text(alphabet=string.ascii_letters + string.digits + " .,:-(){}<>=!%+*\n", max_size=60))
def test_parsing_is_total(src):
    try:
        prog = parse_program(src)
    except ParseError as exc:
        assert exc.kind in {"lexical", "syntactic", "arity-mismatch", "unsafe-aggregate"}
    else:
        assert isinstance(prog, Program)


def test_deep_nesting_is_a_parse_error():
    with pytest.raises(ParseError):
        parse_program("p(" + "(" * 5000 + "1" + ")" * 5000 + ").")
