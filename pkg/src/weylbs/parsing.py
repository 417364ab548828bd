"""Expression parser for polynomials and operators.

Grammar (whitespace insignificant)::

    expr   := term (('+' | '-') term)*
    term   := factor (('*' | '/') factor)*
    factor := '-' factor | power
    power  := atom ('^' INTEGER)?
    atom   := INTEGER | NAME | '(' expr ')'

`^` binds tightest, then unary minus, then `*` and `/`, then `+` and `-`.
Juxtaposition is not multiplication: `2x` is a syntax error.  Division is
only by nonzero constants, which covers rational literals like `3/4`.
Products evaluate left to right, so operator expressions like `dx*x`
normal-order correctly.
"""

import re
from fractions import Fraction

from .algebra import WeylElement
from .errors import ParseError
from .poly import MAX_EXPONENT, Poly

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|([-+*/^()]))")


def _tokenize(text):
    """List of (kind, value, position); kind in {int, name, op}."""
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            stripped = text[pos:].lstrip()
            if not stripped:
                break
            raise ParseError(f"unexpected character {stripped[0]!r}",
                             len(text) - len(stripped))
        if m.group(1) is not None:
            tokens.append(("int", int(m.group(1)), m.start(1)))
        elif m.group(2) is not None:
            tokens.append(("name", m.group(2), m.start(2)))
        else:
            tokens.append(("op", m.group(3), m.start(3)))
        pos = m.end()
    return tokens


class _Parser:
    """Recursive descent over a token list; values live in any ring with
    +, -, * and scalar Fraction multiplication."""

    def __init__(self, text, atoms, const):
        self.text = text
        self.tokens = _tokenize(text)
        self.i = 0
        self.atoms = atoms
        self.const = const

    def peek(self):
        if self.i < len(self.tokens):
            return self.tokens[self.i]
        return ("end", None, len(self.text))

    def next_op(self, choices):
        kind, value, _ = self.peek()
        if kind == "op" and value in choices:
            self.i += 1
            return value
        return None

    def parse(self):
        value = self.expr()
        kind, tok, pos = self.peek()
        if kind != "end":
            raise ParseError(f"expected operator before {tok!r}", pos)
        return value

    def expr(self):
        value = self.term()
        while True:
            op = self.next_op("+-")
            if op is None:
                return value
            rhs = self.term()
            value = self.add(value, rhs) if op == "+" else self.sub(value, rhs)

    def term(self):
        value = self.factor()
        while True:
            _, _, pos = self.peek()
            op = self.next_op("*/")
            if op is None:
                return value
            rhs = self.factor()
            if op == "*":
                value = self.mul(value, rhs)
            else:
                value = self.div(value, rhs, pos)

    def factor(self):
        if self.next_op("-"):
            return self.neg(self.factor())
        return self.power()

    def power(self):
        base = self.atom()
        _, _, pos = self.peek()
        if not self.next_op("^"):
            return base
        kind, n, npos = self.peek()
        if kind != "int":
            raise ParseError("exponent must be a nonnegative integer", npos)
        self.i += 1
        if n > MAX_EXPONENT:
            raise ParseError(f"exponent {n} exceeds the cap {MAX_EXPONENT}", npos)
        if self.next_op("^"):
            raise ParseError("chained ^ needs parentheses", pos)
        return base ** n

    def atom(self):
        kind, value, pos = self.peek()
        if kind == "int":
            self.i += 1
            return Fraction(value)
        if kind == "name":
            self.i += 1
            try:
                return self.atoms[value]
            except KeyError:
                raise ParseError(f"unknown variable {value!r}", pos) from None
        if kind == "op" and value == "(":
            self.i += 1
            inner = self.expr()
            if not self.next_op(")"):
                _, tok, p = self.peek()
                raise ParseError("expected ')'", p)
            return inner
        if kind == "end":
            raise ParseError("unexpected end of input", pos)
        raise ParseError(f"unexpected {value!r}", pos)

    # -- mixed Fraction/ring arithmetic -----------------------------------

    def lift(self, v):
        return self.const(v) if isinstance(v, Fraction) else v

    def add(self, a, b):
        if isinstance(a, Fraction) and isinstance(b, Fraction):
            return a + b
        return self.lift(a) + self.lift(b)

    def sub(self, a, b):
        if isinstance(a, Fraction) and isinstance(b, Fraction):
            return a - b
        return self.lift(a) - self.lift(b)

    def neg(self, a):
        return -a

    def mul(self, a, b):
        # scalars are central, so Fraction * element needs no special case
        return a * b

    def div(self, a, b, pos):
        if not isinstance(b, Fraction):
            raise ParseError("division only by a constant", pos)
        if b == 0:
            raise ParseError("division by zero", pos)
        return a * (1 / b) if not isinstance(a, Fraction) else a / b


def used_names(text):
    """Set of identifiers appearing in text; tokenization errors propagate."""
    return {value for kind, value, _ in _tokenize(text) if kind == "name"}


def parse_expression(text, atoms, const):
    """Parse text over the given name -> value map; const lifts a Fraction."""
    if not text or not text.strip():
        raise ParseError("empty expression", 0)
    return _Parser(text, atoms, const).parse()


def parse_poly(text, variables):
    """Parse a commutative polynomial over the named variables."""
    variables = tuple(variables)
    atoms = {name: Poly.variable(variables, name) for name in variables}
    value = parse_expression(text, atoms, lambda c: Poly.constant(variables, c))
    if isinstance(value, Fraction):
        return Poly.constant(variables, value)
    return value


def parse_operator(text, sig):
    """Parse an element of the operator algebra described by sig."""
    atoms = {name: WeylElement.variable(sig, name) for name in sig.names}
    value = parse_expression(text, atoms, lambda c: WeylElement.constant(sig, c))
    if isinstance(value, Fraction):
        return WeylElement.constant(sig, value)
    return value
