"""
Text parser for polynomials, monomial orders and variable lists
Grammar: rational literals (a/b), declared variables, + - * ^ and parentheses;
^ binds tighter than *, which binds tighter than + and -.
"""

import re
from collections import namedtuple
from fractions import Fraction

from .errors import ParseError
from .orders import MAX_EXPONENT, Blocks, Eliminate, GRevLex, Lex, Weights

Token = namedtuple("Token", ["kind", "text", "offset"])

IDENTIFIER = r"[A-Za-z_][A-Za-z0-9_]*"

TOKEN_PATTERN = re.compile(rf"""
    (?P<space>\s+)
  | (?P<number>[0-9]+/[0-9]+|[0-9]+)
  | (?P<ident>{IDENTIFIER})
  | (?P<range>\.\.)
  | (?P<op>[-+*^(),:])
""", re.VERBOSE)

SUBSCRIPT = re.compile(r"^(.*_)([0-9]+)$")


def _position(text, offset, origin):
    """1-based (line, column) of an offset, relative to where text starts."""
    line, column = origin
    before = text[:offset]
    newlines = before.count("\n")
    if newlines:
        return (None if line is None else line + newlines), offset - before.rfind("\n")
    return line, column + offset


def tokenize(text, origin=(None, 1)):
    """Split text into tokens; raises ParseError on a stray character."""
    tokens = []
    offset = 0
    while offset < len(text):
        match = TOKEN_PATTERN.match(text, offset)
        if match is None:
            line, column = _position(text, offset, origin)
            raise ParseError(f"unexpected character '{text[offset]}'", line, column)
        kind = match.lastgroup
        if kind != "space":
            tokens.append(Token(kind, match.group(), offset))
        offset = match.end()
    tokens.append(Token("end", "", len(text)))
    return tokens


def parse_int_or_fraction(text):
    """Exact value of an integer or a/b literal."""
    if "/" in text:
        numerator, denominator = text.split("/")
        if int(denominator) == 0:
            raise ZeroDivisionError(text)
        return Fraction(int(numerator), int(denominator))
    return Fraction(int(text))


class _TokenStream:
    def __init__(self, text, origin):
        self.text = text
        self.origin = origin
        self.tokens = tokenize(text, origin)
        self.index = 0

    @property
    def current(self):
        return self.tokens[self.index]

    def advance(self):
        token = self.tokens[self.index]
        if token.kind != "end":
            self.index += 1
        return token

    def at(self, text):
        return self.current.kind == "op" and self.current.text == text

    def error(self, message, token=None):
        token = token or self.current
        line, column = _position(self.text, token.offset, self.origin)
        return ParseError(message, line, column)

    def expect(self, text):
        if not self.at(text):
            found = self.current.text or "end of input"
            raise self.error(f"expected '{text}' but found '{found}'")
        return self.advance()

    def expect_kind(self, kind, what):
        if self.current.kind != kind:
            found = self.current.text or "end of input"
            raise self.error(f"expected {what} but found '{found}'")
        return self.advance()

    def finish(self):
        if self.current.kind != "end":
            raise self.error(f"unexpected '{self.current.text}'")


class _PolynomialParser:
    """Recursive descent over sum > product > unary minus > power > atom."""

    def __init__(self, stream, ring):
        self.stream = stream
        self.ring = ring

    def expression(self):
        result = self.product()
        while self.stream.at("+") or self.stream.at("-"):
            sign = self.stream.advance().text
            right = self.product()
            result = result + right if sign == "+" else result - right
        return result

    def product(self):
        result = self.unary()
        while self.stream.at("*"):
            self.stream.advance()
            result = result * self.unary()
        return result

    def unary(self):
        if self.stream.at("-"):
            self.stream.advance()
            return -self.unary()
        if self.stream.at("+"):
            self.stream.advance()
            return self.unary()
        return self.power()

    def power(self):
        base = self.atom()
        if not self.stream.at("^"):
            return base
        self.stream.advance()
        if self.stream.at("-"):
            raise self.stream.error("negative exponent")
        token = self.stream.expect_kind("number", "an exponent")
        if "/" in token.text:
            raise self.stream.error(f"exponent must be a non-negative integer, got {token.text}", token)
        if int(token.text) > MAX_EXPONENT:
            raise self.stream.error(f"exponent {token.text} exceeds the supported maximum {MAX_EXPONENT}", token)
        if self.stream.at("^"):
            raise self.stream.error("chained exponents need parentheses")
        return base ** int(token.text)

    def atom(self):
        token = self.stream.current
        if token.kind == "number":
            self.stream.advance()
            try:
                return self.ring.constant(parse_int_or_fraction(token.text))
            except ZeroDivisionError:
                raise self.stream.error(f"zero denominator in '{token.text}'", token) from None
        if token.kind == "ident":
            self.stream.advance()
            if token.text not in self.ring.variables:
                raise self.stream.error(f"unknown identifier '{token.text}'", token)
            return self.ring.variable(token.text)
        if self.stream.at("("):
            self.stream.advance()
            inner = self.expression()
            self.stream.expect(")")
            return inner
        found = token.text or "end of input"
        raise self.stream.error(f"expected a number, variable or '(' but found '{found}'")


def parse_polynomial(text, ring, origin=(None, 1)):
    """
    Parse one polynomial of a ring

    Args:
        text (str): Polynomial text such as "x_1^2-3/2*x_2"
        ring (PolyRing): Ring whose variables may appear
        origin (tuple): (line, column) where text starts, for diagnostics

    Returns:
        Polynomial: Canonical (and quotient-reduced) polynomial
    """
    stream = _TokenStream(text, origin)
    result = _PolynomialParser(stream, ring).expression()
    stream.finish()
    return result


def parse_polynomials(text, ring, origin=(None, 1)):
    """Comma-separated polynomials."""
    stream = _TokenStream(text, origin)
    parser = _PolynomialParser(stream, ring)
    result = [parser.expression()]
    while stream.at(","):
        stream.advance()
        result.append(parser.expression())
    stream.finish()
    return result


def _order_spec(stream):
    token = stream.expect_kind("ident", "an order name")
    name = token.text.lower()
    if name == "lex":
        return Lex()
    if name == "grevlex":
        return GRevLex()
    if name == "weights":
        stream.expect("(")
        weights = [_integer(stream)]
        while stream.at(","):
            stream.advance()
            weights.append(_integer(stream))
        stream.expect(")")
        return Weights(tuple(weights), _tiebreak(stream))
    if name == "eliminate":
        stream.expect("(")
        count = _integer(stream)
        stream.expect(")")
        return Eliminate(count, _tiebreak(stream))
    if name == "blocks":
        stream.expect("(")
        parts = [_block(stream)]
        while stream.at(","):
            stream.advance()
            parts.append(_block(stream))
        stream.expect(")")
        return Blocks(tuple(parts))
    raise stream.error(f"unknown order '{token.text}'", token)


def _tiebreak(stream):
    if stream.at(":"):
        stream.advance()
        return _order_spec(stream)
    return GRevLex()


def _block(stream):
    count = _integer(stream)
    stream.expect(":")
    return count, _order_spec(stream)


def _integer(stream):
    token = stream.expect_kind("number", "an integer")
    if "/" in token.text:
        raise stream.error(f"expected an integer, got {token.text}", token)
    return int(token.text)


def parse_order(text, origin=(None, 1)):
    """Monomial order from lex | grevlex | weights(..)[:spec] | eliminate(k)[:spec] | blocks(n:spec, ...)."""
    stream = _TokenStream(text, origin)
    order = _order_spec(stream)
    stream.finish()
    return order


def expand_range(first, last):
    """Names first..last, counting up the final subscript: x_1..x_3 -> x_1, x_2, x_3."""
    start = SUBSCRIPT.match(first)
    stop = SUBSCRIPT.match(last)
    if not start or not stop or start.group(1) != stop.group(1):
        raise ValueError(f"cannot expand the range {first}..{last}")
    low, high = int(start.group(2)), int(stop.group(2))
    if high < low:
        raise ValueError(f"empty range {first}..{last}")
    return [f"{start.group(1)}{k}" for k in range(low, high + 1)]


def parse_variable_list(text, origin=(None, 1)):
    """Variable names separated by spaces or commas; x_1..x_6 expands to six names."""
    stream = _TokenStream(text, origin)
    names = []
    while stream.current.kind != "end":
        if stream.at(","):
            stream.advance()
            continue
        token = stream.expect_kind("ident", "a variable name")
        if stream.current.kind == "range":
            stream.advance()
            last = stream.expect_kind("ident", "the end of a variable range")
            try:
                names.extend(expand_range(token.text, last.text))
            except ValueError as exc:
                raise stream.error(str(exc), token) from None
        else:
            names.append(token.text)
    if not names:
        raise stream.error("expected at least one variable name")
    duplicates = sorted({name for name in names if names.count(name) > 1})
    if duplicates:
        raise stream.error(f"duplicate variable names: {', '.join(duplicates)}", stream.tokens[0])
    return names
