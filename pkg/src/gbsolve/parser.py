"""Problem-file parsing.

The format is line oriented.  ``#`` starts a comment, blank lines are
skipped, and the remaining lines are:

    field q                  rational coefficients
    field p <prime>          prime-field coefficients
    vars x1 x2 ... xn        variable declarations, in order
    <polynomial>             one generator per line
    query <polynomial>       optional, at most once, for membership commands

Polynomials use integer literals, declared variables, ``+``, binary and unary
``-``, ``*``, ``^`` with a positive integer exponent, and parentheses.  A
rational literal may be written ``a/b`` (two integer tokens around ``/``) so
that printed rational output parses back; over a prime field it means
``a * b**-1``.  Whitespace never matters inside a line.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .errors import ParseError
from .fields import GF, QQ, is_probable_prime
from .poly import Polynomial

_KEYWORDS = frozenset({"field", "vars", "query"})

_TOKEN = re.compile(
    r"\s*(?:(?P<int>\d+)|(?P<name>[A-Za-z_][A-Za-z0-9_]*)|(?P<op>[-+*^()/]))"
)


@dataclass(frozen=True)
class Token:
    kind: str
    text: str
    line: int
    column: int


def _tokenize_line(text, line):
    pos = 0
    out = []
    while pos < len(text):
        while pos < len(text) and text[pos].isspace():
            pos += 1
        if pos == len(text) or text[pos] == "#":
            break
        m = _TOKEN.match(text, pos)
        if m is None or m.end() == pos:
            raise ParseError(f"unexpected character {text[pos]!r}", line, pos + 1)
        if m.lastgroup is not None:
            out.append(Token(m.lastgroup, m.group(m.lastgroup), line, m.start(m.lastgroup) + 1))
        pos = m.end()
    return out


class _PolyParser:
    """Recursive descent over one line's tokens."""

    def __init__(self, tokens, domain, names, line):
        self.tokens = tokens
        self.pos = 0
        self.domain = domain
        self.names = names
        self.nvars = len(names)
        self.line = line

    def peek(self):
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def take(self):
        tok = self.peek()
        if tok is not None:
            self.pos += 1
        return tok

    def fail(self, message, tok=None):
        col = tok.column if tok is not None else (
            self.tokens[-1].column + len(self.tokens[-1].text) if self.tokens else 1
        )
        raise ParseError(message, self.line, col)

    def expect_op(self, op):
        tok = self.take()
        if tok is None or tok.kind != "op" or tok.text != op:
            self.fail(f"expected {op!r}", tok)
        return tok

    def parse(self):
        p = self.expr()
        tok = self.peek()
        if tok is not None:
            self.fail(f"unexpected {tok.text!r}", tok)
        return p

    def expr(self):
        p = self.term()
        while True:
            tok = self.peek()
            if tok is not None and tok.kind == "op" and tok.text in "+-":
                self.take()
                q = self.term()
                p = p + q if tok.text == "+" else p - q
            else:
                return p

    def term(self):
        p = self.unary()
        while True:
            tok = self.peek()
            if tok is not None and tok.kind == "op" and tok.text == "*":
                self.take()
                p = p * self.unary()
            else:
                return p

    def unary(self):
        tok = self.peek()
        if tok is not None and tok.kind == "op" and tok.text == "-":
            self.take()
            return -self.unary()
        return self.power()

    def power(self):
        p = self.atom()
        tok = self.peek()
        if tok is not None and tok.kind == "op" and tok.text == "^":
            self.take()
            etok = self.take()
            if etok is None or etok.kind != "int":
                self.fail("expected an integer exponent", etok)
            e = int(etok.text)
            if e <= 0:
                self.fail("exponents must be positive", etok)
            return p ** e
        return p

    def atom(self):
        tok = self.take()
        if tok is None:
            self.fail("unexpected end of line")
        if tok.kind == "int":
            value = self.domain.from_int(int(tok.text))
            nxt = self.peek()
            if nxt is not None and nxt.kind == "op" and nxt.text == "/":
                self.take()
                dtok = self.take()
                if dtok is None or dtok.kind != "int":
                    self.fail("expected an integer denominator", dtok)
                denom = self.domain.from_int(int(dtok.text))
                if self.domain.is_zero(denom):
                    self.fail("denominator vanishes in this field", dtok)
                value = self.domain.div(value, denom)
            return Polynomial.constant(self.domain, self.nvars, value)
        if tok.kind == "name":
            if tok.text in _KEYWORDS:
                self.fail(f"{tok.text!r} is a keyword", tok)
            try:
                i = self.names.index(tok.text)
            except ValueError:
                self.fail(f"undeclared variable {tok.text!r}", tok)
            return Polynomial.variable(self.domain, self.nvars, i)
        if tok.kind == "op" and tok.text == "(":
            p = self.expr()
            self.expect_op(")")
            return p
        self.fail(f"unexpected {tok.text!r}", tok)


@dataclass(frozen=True)
class ProblemFile:
    """A parsed problem: coefficient field, variable names, generators, query."""

    domain: object
    names: tuple
    gens: tuple
    query: Polynomial = None

    @property
    def nvars(self):
        return len(self.names)


def _parse_field(tokens, line):
    if len(tokens) >= 2 and tokens[1].kind == "name" and tokens[1].text == "q":
        if len(tokens) > 2:
            raise ParseError("trailing input after 'field q'", line, tokens[2].column)
        return QQ
    if len(tokens) >= 2 and tokens[1].kind == "name" and tokens[1].text == "p":
        if len(tokens) < 3 or tokens[2].kind != "int":
            raise ParseError("expected 'field p <prime>'", line, None)
        if len(tokens) > 3:
            raise ParseError("trailing input after the prime", line, tokens[3].column)
        p = int(tokens[2].text)
        if not is_probable_prime(p):
            raise ParseError(f"{p} is not prime", line, tokens[2].column)
        return GF(p)
    raise ParseError("expected 'field q' or 'field p <prime>'", line, None)


def _parse_vars(tokens, line):
    if len(tokens) < 2:
        raise ParseError("expected at least one variable name", line, None)
    names = []
    for tok in tokens[1:]:
        if tok.kind != "name":
            raise ParseError("variable names must be identifiers", line, tok.column)
        if tok.text in _KEYWORDS:
            raise ParseError(f"{tok.text!r} is a keyword", line, tok.column)
        if tok.text in names:
            raise ParseError(f"duplicate variable {tok.text!r}", line, tok.column)
        names.append(tok.text)
    return tuple(names)


def parse_problem(text):
    """Parse a whole problem file into a ProblemFile."""
    domain = None
    names = None
    gens = []
    query = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        tokens = _tokenize_line(raw, lineno)
        if not tokens:
            continue
        head = tokens[0]
        if domain is None:
            if head.kind != "name" or head.text != "field":
                raise ParseError("the first line must declare the field", lineno, head.column)
            domain = _parse_field(tokens, lineno)
            continue
        if names is None:
            if head.kind != "name" or head.text != "vars":
                raise ParseError("expected a 'vars' line after the field", lineno, head.column)
            names = _parse_vars(tokens, lineno)
            continue
        if head.kind == "name" and head.text == "field":
            raise ParseError("the field is already declared", lineno, head.column)
        if head.kind == "name" and head.text == "vars":
            raise ParseError("variables are already declared", lineno, head.column)
        if head.kind == "name" and head.text == "query":
            if query is not None:
                raise ParseError("only one query line is allowed", lineno, head.column)
            body = tokens[1:]
            if not body:
                raise ParseError("the query line needs a polynomial", lineno, head.column)
            query = _PolyParser(body, domain, names, lineno).parse()
            continue
        gens.append(_PolyParser(tokens, domain, names, lineno).parse())
    if domain is None:
        raise ParseError("empty input: no field declaration", None, None)
    if names is None:
        raise ParseError("no 'vars' line", None, None)
    return ProblemFile(domain, names, tuple(gens), query)


def parse_polynomial(text, domain, names, line=1):
    """Parse a single polynomial expression (used for round-trip checks)."""
    tokens = _tokenize_line(text, line)
    if not tokens:
        raise ParseError("expected a polynomial", line, None)
    return _PolyParser(tokens, domain, tuple(names), line).parse()
