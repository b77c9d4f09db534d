"""Recursive-descent parser for generalized polynomials.

Grammar (whitespace is insignificant)::

    expr     := ['+'|'-'] term (('+'|'-') term)*
    term     := factor ('*' factor)*
    factor   := coeff | var ['^' exponent]
    coeff    := number | '(' ['-'] number ('+'|'-') number ['*'] 'i' ')'
    var      := 'x' digits            (bare 'x' means x1 when n = 1)
    exponent := ['-'] digits | '(' ['-'] digits ['/' ['-'] digits] ')'

The asymptotic form additionally allows a single product containing
``log(expr)`` factors and parenthesised polynomials::

    aexpr    := afactor ('*' afactor)*
    afactor  := 'log' '(' expr ')' | '(' expr ')' | factor
"""

import re
from fractions import Fraction

from .errors import ParseError

__all__ = ["parse_terms", "parse_product"]

_TOKEN = re.compile(
    r"""
    (?P<ws>\s+)
  | (?P<num>(?:\d+(?:\.\d*)?|\.\d+)(?:[eE][+-]?\d+)?)
  | (?P<log>log)
  | (?P<var>x\d*)
  | (?P<imag>i)
  | (?P<op>[-+*/^()])
    """,
    re.VERBOSE,
)


def _tokenize(text):
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            raise ParseError(f"unexpected character {text[pos]!r}", pos)
        kind = m.lastgroup
        if kind != "ws":
            value = m.group()
            tokens.append((value if kind == "op" else kind, value, pos))
        pos = m.end()
    tokens.append(("eof", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text, dim):
        self.text = text
        self.dim = dim
        self.tokens = _tokenize(text)
        self.i = 0

    # token helpers
    def peek(self):
        return self.tokens[self.i][0]

    def pos(self):
        return self.tokens[self.i][2]

    def take(self, kind=None, what=None):
        tok = self.tokens[self.i]
        if kind is not None and tok[0] != kind:
            found = "end of input" if tok[0] == "eof" else repr(tok[1])
            raise ParseError(f"expected {what or repr(kind)}, found {found}", tok[2])
        self.i += 1
        return tok

    def fail(self, message):
        raise ParseError(message, self.pos())

    # grammar
    def expr(self):
        sign = 1
        if self.peek() in ("+", "-"):
            sign = -1 if self.take()[0] == "-" else 1
        coeff, exp = self.term()
        terms = [(sign * coeff, exp)]
        while self.peek() in ("+", "-"):
            sign = -1 if self.take()[0] == "-" else 1
            coeff, exp = self.term()
            terms.append((sign * coeff, exp))
        return terms

    def term(self):
        coeff, exp = self.factor()
        while self.peek() == "*":
            self.take()
            c, e = self.factor()
            coeff *= c
            exp = [a + b for a, b in zip(exp, e)]
        return coeff, exp

    def factor(self):
        kind = self.peek()
        if kind == "num":
            coeff = complex(float(self.take()[1]))
            self.no_power()
            return coeff, [Fraction(0)] * self.dim
        if kind == "(":
            coeff = self.complex_coeff()
            self.no_power()
            return coeff, [Fraction(0)] * self.dim
        if kind == "var":
            _, name, at = self.take()
            index = self.variable_index(name, at)
            power = Fraction(1)
            if self.peek() == "^":
                self.take()
                power = self.exponent()
            exp = [Fraction(0)] * self.dim
            exp[index] = power
            return complex(1), exp
        if kind == "eof":
            self.fail("unexpected end of input")
        self.fail(f"expected a coefficient or variable, found {self.tokens[self.i][1]!r}")

    def no_power(self):
        if self.peek() == "^":
            self.fail("exponent applied to a non-variable")

    def variable_index(self, name, at):
        if name == "x":
            if self.dim == 1:
                return 0
            raise ParseError("bare 'x' is only allowed in dimension 1", at)
        k = int(name[1:])
        if not 1 <= k <= self.dim:
            raise ParseError(f"variable {name} out of range for dimension {self.dim}", at)
        return k - 1

    def complex_coeff(self):
        self.take("(")
        re_sign = 1
        if self.peek() == "-":
            self.take()
            re_sign = -1
        real = re_sign * float(self.take("num", "a number")[1])
        if self.peek() not in ("+", "-"):
            self.fail("expected '+' or '-' in complex coefficient")
        im_sign = -1 if self.take()[0] == "-" else 1
        imag = im_sign * float(self.take("num", "a number")[1])
        if self.peek() == "*":
            self.take()
        self.take("imag", "'i'")
        self.take(")", "')'")
        return complex(real, imag)

    def integer(self):
        sign = 1
        if self.peek() == "-":
            self.take()
            sign = -1
        _, text, at = self.take("num", "an integer")
        if not text.isdigit():
            raise ParseError(f"exponent must be an integer or ratio, found {text!r}", at)
        return sign * int(text)

    def exponent(self):
        if self.peek() != "(":
            return Fraction(self.integer())
        self.take("(")
        p = self.integer()
        q = 1
        if self.peek() == "/":
            self.take()
            at = self.pos()
            q = self.integer()
            if q == 0:
                raise ParseError("zero denominator in exponent", at)
        self.take(")", "')'")
        return Fraction(p, q)

    def end(self):
        if self.peek() != "eof":
            self.fail(f"unexpected {self.tokens[self.i][1]!r}")

    # asymptotic products
    def product(self):
        factors = [self.afactor()]
        while self.peek() == "*":
            self.take()
            factors.append(self.afactor())
        return factors

    def afactor(self):
        if self.peek() == "log":
            self.take()
            self.take("(", "'('")
            inner = self.expr()
            self.take(")", "')'")
            return ("log", inner)
        if self.peek() == "(":
            mark = self.i
            try:
                coeff = self.complex_coeff()
                self.no_power()
                return ("poly", [(coeff, [Fraction(0)] * self.dim)])
            except ParseError:
                self.i = mark
            self.take("(")
            inner = self.expr()
            self.take(")", "')'")
            return ("poly", inner)
        return ("poly", [self.factor()])


def parse_terms(text, dim):
    """Parse ``text`` into a raw list of ``(coefficient, exponent)`` pairs."""
    p = _Parser(text, dim)
    terms = p.expr()
    p.end()
    return [(c, tuple(e)) for c, e in terms]


def parse_product(text, dim):
    """Parse an asymptotic product; returns ``[(kind, raw_terms), ...]``."""
    p = _Parser(text, dim)
    factors = p.product()
    p.end()
    return [(kind, [(c, tuple(e)) for c, e in terms]) for kind, terms in factors]
