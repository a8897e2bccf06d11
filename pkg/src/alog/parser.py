"""Concrete text syntax for Alog.

Grammar (whitespace insignificant, ``%`` starts a line comment)::

    program   ::= statement*
    statement ::= head "."  |  head ":-" body "."  |  ":-" body "."
    head      ::= literal ("or" literal)*
    body      ::= bodyitem ("," bodyitem)*
    bodyitem  ::= "not" literal | aggregate | literal
    aggregate ::= FUNC "{" VAR ("," VAR)* ":" conditem ("," conditem)* "}" REL term
    conditem  ::= literal | term REL term
    literal   ::= ["-"] IDENT ["(" term ("," term)* ")"]
    term      ::= product (("+" | "-") product)*
    product   ::= factor ("*" factor)*
    factor    ::= INT | "-" INT | VAR | IDENT | "(" term ")"
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from typing import List, Optional

from .syntax import (
    AGGREGATE_FUNCTIONS, RELATIONS, AggregateAtom, Arith, Comparison, Const, Int,
    Literal, Program, Rule, Var,
)

KEYWORDS = {"not", "or"}


@dataclass(frozen=True)
class SourcePosition:
    line: int
    column: int

    def __str__(self):
        return f"{self.line}:{self.column}"


class ParseError(Exception):
    """Raised for any malformed input.  ``kind`` is one of ``lexical``,
    ``syntactic``, ``arity-mismatch`` or ``unsafe-aggregate``."""

    def __init__(self, position: SourcePosition, message: str, kind: str = "syntactic"):
        super().__init__(f"{position}: {message}")
        self.position = position
        self.message = message
        self.kind = kind


@dataclass(frozen=True)
class Token:
    kind: str  # IDENT, VAR, INT, PUNCT, EOF
    text: str
    pos: SourcePosition

    def __str__(self):
        return "end of input" if self.kind == "EOF" else repr(self.text)


_TOKEN_RE = re.compile(
    r"""
    (?P<ws>[ \t\r\n]+)
  | (?P<comment>%[^\n]*)
  | (?P<INT>[0-9]+)
  | (?P<VAR>[A-Z][A-Za-z0-9_]*)
  | (?P<IDENT>[a-z][A-Za-z0-9_]*)
  | (?P<PUNCT>:-|>=|<=|!=|[.,(){}:<>=+\-*])
    """,
    re.VERBOSE,
)


def tokenize(src: str) -> List[Token]:
    tokens = []
    i, line, line_start = 0, 1, 0
    while i < len(src):
        m = _TOKEN_RE.match(src, i)
        pos = SourcePosition(line, i - line_start + 1)
        if m is None:
            raise ParseError(pos, f"unexpected character {src[i]!r}", "lexical")
        kind = m.lastgroup
        text = m.group()
        if kind not in ("ws", "comment"):
            tokens.append(Token(kind, text, pos))
        for j, ch in enumerate(text):
            if ch == "\n":
                line += 1
                line_start = i + j + 1
        i = m.end()
    tokens.append(Token("EOF", "", SourcePosition(line, i - line_start + 1)))
    return tokens


class _Parser:
    def __init__(self, src: str):
        self.tokens = tokenize(src)
        self.i = 0
        self.arities = {}

    @property
    def tok(self) -> Token:
        return self.tokens[self.i]

    def peek(self, k=1) -> Token:
        return self.tokens[min(self.i + k, len(self.tokens) - 1)]

    def at(self, text: str) -> bool:
        return self.tok.kind == "PUNCT" and self.tok.text == text

    def advance(self) -> Token:
        t = self.tok
        if t.kind != "EOF":
            self.i += 1
        return t

    def expect(self, text: str) -> Token:
        if not self.at(text):
            self.fail(f"expected {text!r} but found {self.tok}")
        return self.advance()

    def fail(self, message, tok: Optional[Token] = None, kind="syntactic"):
        raise ParseError((tok or self.tok).pos, message, kind)

    # statements

    def program(self) -> Program:
        rules = []
        while self.tok.kind != "EOF":
            rules.append(self.statement())
        return Program(tuple(rules))

    def statement(self) -> Rule:
        head = []
        if not self.at(":-"):
            head.append(self.literal())
            while self.tok.kind == "IDENT" and self.tok.text == "or":
                self.advance()
                head.append(self.literal())
        pos, neg, agg = [], [], []
        if self.at(":-"):
            self.advance()
            self.body_item(pos, neg, agg)
            while self.at(","):
                self.advance()
                self.body_item(pos, neg, agg)
        if not self.at("."):
            self.fail(f"expected '.' at end of rule but found {self.tok}")
        self.advance()
        return Rule(tuple(head), tuple(pos), tuple(neg), tuple(agg))

    def body_item(self, pos, neg, agg):
        t = self.tok
        if t.kind == "IDENT" and t.text == "not":
            self.advance()
            neg.append(self.literal())
        elif t.kind == "IDENT" and t.text in AGGREGATE_FUNCTIONS and self.peek().text == "{":
            agg.append(self.aggregate())
        else:
            pos.append(self.literal())

    def aggregate(self) -> AggregateAtom:
        start = self.advance()
        func = start.text
        self.expect("{")
        bound = [self.variable()]
        while self.at(","):
            self.advance()
            bound.append(self.variable())
        self.expect(":")
        if self.at("}"):
            self.fail("empty condition in set name")
        cond = [self.cond_item()]
        while self.at(","):
            self.advance()
            cond.append(self.cond_item())
        self.expect("}")
        rel = self.relation()
        rhs = self.term()
        in_cond = {v for c in cond for v in c.variables()}
        for v in bound:
            if v not in in_cond:
                self.fail(f"bound variable {v} does not occur in the condition", start, "unsafe-aggregate")
        if len(set(bound)) != len(bound):
            self.fail("repeated bound variable in set name", start, "unsafe-aggregate")
        return AggregateAtom(func, tuple(bound), tuple(cond), rel, rhs)

    def variable(self) -> Var:
        if self.tok.kind != "VAR":
            self.fail(f"expected a variable in set name but found {self.tok}")
        return Var(self.advance().text)

    def relation(self) -> str:
        if self.tok.kind == "PUNCT" and self.tok.text in RELATIONS:
            return self.advance().text
        self.fail(f"expected a comparison relation but found {self.tok}")

    def cond_item(self):
        t = self.tok
        if t.kind == "IDENT" and t.text == "not":
            self.fail("default negation is not allowed inside a set name")
        if self.at("-") and self.peek().kind == "IDENT":
            return self.literal()
        if t.kind == "IDENT" and t.text not in KEYWORDS:
            if self.peek().text == "(" or not (self.peek().kind == "PUNCT" and self.peek().text in RELATIONS + ("+", "-", "*")):
                return self.literal()
        left = self.term()
        op = self.relation()
        return Comparison(op, left, self.term())

    def literal(self) -> Literal:
        negated = False
        if self.at("-"):
            self.advance()
            negated = True
        t = self.tok
        if t.kind != "IDENT" or t.text in KEYWORDS:
            self.fail(f"expected a predicate name but found {t}")
        self.advance()
        args = []
        if self.at("("):
            self.advance()
            args.append(self.term())
            while self.at(","):
                self.advance()
                args.append(self.term())
            self.expect(")")
        known = self.arities.setdefault(t.text, len(args))
        if known != len(args):
            self.fail(f"predicate {t.text!r} used with arity {len(args)} and {known}", t, "arity-mismatch")
        return Literal(t.text, tuple(args), negated)

    # terms

    def term(self):
        left = self.product()
        while self.at("+") or self.at("-"):
            op = self.advance().text
            left = Arith(op, left, self.product())
        return left

    def product(self):
        left = self.factor()
        while self.at("*"):
            self.advance()
            left = Arith("*", left, self.factor())
        return left

    def factor(self):
        t = self.tok
        if t.kind == "INT":
            self.advance()
            return Int(int(t.text))
        if self.at("-") and self.peek().kind == "INT":
            self.advance()
            return Int(-int(self.advance().text))
        if t.kind == "VAR":
            self.advance()
            return Var(t.text)
        if t.kind == "IDENT" and t.text not in KEYWORDS:
            if self.peek().text == "(":
                self.fail(f"function symbol {t.text!r} of positive arity is not supported", self.peek())
            self.advance()
            return Const(t.text)
        if self.at("("):
            self.advance()
            inner = self.term()
            self.expect(")")
            return inner
        self.fail(f"expected a term but found {t}")


def parse_program(src: str) -> Program:
    """Parse Alog source text; raises :class:`ParseError` on any violation."""
    parser = _Parser(src)
    try:
        return parser.program()
    except RecursionError:
        raise ParseError(parser.tok.pos, "expression nested too deeply") from None


def parse_literal_set(src: str) -> frozenset:
    """Parse ``{l1, l2, ...}`` into a set of ground literals."""
    parser = _Parser(src)
    parser.expect("{")
    out = set()
    if not parser.at("}"):
        out.add(parser.literal())
        while parser.at(","):
            parser.advance()
            out.add(parser.literal())
    parser.expect("}")
    if parser.tok.kind != "EOF":
        parser.fail(f"unexpected {parser.tok} after literal set")
    for l in out:
        if not l.is_ground:
            raise ParseError(SourcePosition(1, 1), f"literal {l} is not ground")
    return frozenset(out)


def parse_rule(src: str) -> Rule:
    prog = parse_program(src)
    if len(prog.rules) != 1:
        raise ParseError(SourcePosition(1, 1), f"expected exactly one rule, found {len(prog.rules)}")
    return prog.rules[0]


def format_program(p: Program) -> str:
    return "\n".join(str(r) for r in p.rules)
