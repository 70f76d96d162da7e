"""
Session scripts
Statements end with ';' and '#' starts a comment. Names must be declared
before use; subrings belong to the most recent ring declaration.
"""

import re
from dataclasses import dataclass, field
from typing import Dict, Optional, Tuple

from .errors import InvalidInputError, NameResolutionError, ParseError
from .parser import IDENTIFIER, _position, parse_order, parse_polynomials, parse_variable_list
from .polynomials import PolyRing

# Script option keys and the SagbiOptions fields they set
OPTION_FIELDS = {
    "limit": "limit",
    "strategy": "strategy",
    "subductionmethod": "subduction_method",
    "autosubduce": "auto_subduce",
    "autosubduceonpartialcompletion": "auto_subduce_on_partial_completion",
    "printlevel": "print_level",
    "recompute": "recompute",
    "renewoptions": "renew_options",
}
BOOLEAN_OPTIONS = {"auto_subduce", "auto_subduce_on_partial_completion", "recompute", "renew_options"}
INTEGER_OPTIONS = {"limit", "print_level"}
CHOICE_OPTIONS = {
    "strategy": ("master", "degree", "incremental"),
    "subduction_method": ("top", "engine"),
}


@dataclass(frozen=True)
class PolyText:
    """Unparsed polynomial text and where it starts in the script."""

    text: str
    line: int
    column: int

    @property
    def origin(self):
        return self.line, self.column


@dataclass(frozen=True)
class IdealDecl:
    generators: Tuple[PolyText, ...]


@dataclass(frozen=True)
class RingDecl:
    name: str
    ring: PolyRing
    quotient: Optional[IdealDecl]
    line: int
    column: int


@dataclass(frozen=True)
class SubringDecl:
    name: str
    ring_name: str
    symbol: Optional[str]
    generators: Tuple[PolyText, ...]
    line: int
    column: int


@dataclass(frozen=True)
class Command:
    name: str
    target: str
    line: int
    column: int
    arguments: Tuple[str, ...] = ()
    options: Dict[str, object] = field(default_factory=dict)
    polynomial: Optional[PolyText] = None


@dataclass
class Script:
    statements: list = field(default_factory=list)

    def __len__(self):
        return len(self.statements)

    def __iter__(self):
        return iter(self.statements)


def split_statements(text):
    """(statement text, line, column) triples with comments blanked out."""
    pieces = []
    buffer = []
    start = None
    line, column = 1, 1
    in_comment = False
    for char in text:
        if in_comment and char != "\n":
            if start is not None:
                buffer.append(" ")
        elif char == "#":
            in_comment = True
            if start is not None:
                buffer.append(" ")
        elif char == ";":
            if start is not None:
                pieces.append(("".join(buffer).rstrip(), start[0], start[1]))
            buffer, start = [], None
        else:
            in_comment = False
            if start is None and not char.isspace():
                start = (line, column)
            if start is not None:
                buffer.append(char)
        if char == "\n":
            line, column = line + 1, 1
        else:
            column += 1
    if start is not None:
        raise ParseError("statement is missing its terminating ';'", start[0], start[1])
    return pieces


class _ScriptParser:
    def __init__(self, bound=()):
        self.rings = {}
        self.subrings = {}
        self.current_ring = None
        # Names bound before the script runs (for example a loaded state)
        for name in bound:
            self.subrings[name] = None

    def parse(self, text):
        script = Script()
        for body, line, column in split_statements(text):
            script.statements.append(self.statement(body, line, column))
        return script

    def error(self, message, body, offset, origin, kind=ParseError):
        line, column = _position(body, offset, origin)
        return kind(message, line, column)

    def statement(self, body, line, column):
        origin = (line, column)
        keyword = re.match(r"\S+", body).group()
        handler = getattr(self, "_" + keyword.lower(), None)
        if handler is None or keyword.lower() not in STATEMENTS:
            raise ParseError(f"unknown statement '{keyword}'", line, column)
        return handler(body, origin)

    def _match(self, pattern, body, origin, usage):
        match = re.fullmatch(pattern, body, re.DOTALL)
        if match is None:
            raise ParseError(f"malformed statement, expected: {usage}", *origin)
        return match

    def _poly(self, match, group, body, origin):
        line, column = _position(body, match.start(group), origin)
        return PolyText(match.group(group), line, column)

    def _check_polys(self, texts, ring):
        if ring is None:
            return
        for text in texts:
            parse_polynomials(text.text, ring, text.origin)

    def _subring_name(self, match, group, body, origin):
        name = match.group(group)
        if name not in self.subrings:
            raise self.error(f"unknown subring '{name}'", body, match.start(group), origin,
                             NameResolutionError)
        return name

    def _options(self, text, body, offset, origin):
        options = {}
        for item in re.finditer(r"\S+", text or ""):
            where = offset + item.start()
            key, sep, value = item.group().partition("=")
            if not sep or not value:
                raise self.error(f"expected key=value, got '{item.group()}'", body, where, origin)
            name = OPTION_FIELDS.get(key.lower())
            if name is None:
                raise self.error(f"unknown option '{key}'", body, where, origin)
            options[name] = self._option_value(name, value, body, where + len(key) + 1, origin)
        return options

    def _option_value(self, name, value, body, where, origin):
        if name in BOOLEAN_OPTIONS:
            if value.lower() not in ("true", "false"):
                raise self.error(f"option needs true or false, got '{value}'", body, where, origin)
            return value.lower() == "true"
        if name in INTEGER_OPTIONS:
            if not value.isdigit():
                raise self.error(f"option needs a non-negative integer, got '{value}'",
                                 body, where, origin)
            return int(value)
        if value.lower() not in CHOICE_OPTIONS[name]:
            choices = "|".join(CHOICE_OPTIONS[name])
            raise self.error(f"option needs one of {choices}, got '{value}'", body, where, origin)
        return value.lower()

    # Statements

    def _ring(self, body, origin):
        match = self._match(
            rf"ring\s+({IDENTIFIER})\s+vars\s+(.+?)(?:\s+order\s+(.+?))?(?:\s+quotient\s+(.+))?",
            body, origin, "ring <name> vars <variables> [order <order>] [quotient <polys>]")
        name = match.group(1)
        variables = parse_variable_list(match.group(2), _position(body, match.start(2), origin))
        order = None
        if match.group(3):
            order = parse_order(match.group(3), _position(body, match.start(3), origin))
        quotient = None
        try:
            ring = PolyRing(variables, order, name=name)
            if match.group(4):
                text = self._poly(match, 4, body, origin)
                quotient = IdealDecl((text,))
                polys = parse_polynomials(text.text, ring, text.origin)
                ring = PolyRing(variables, order, quotient=polys, name=name)
        except InvalidInputError as exc:
            raise ParseError(str(exc), *origin) from None
        self.rings[name] = ring
        self.current_ring = name
        return RingDecl(name, ring, quotient, *origin)

    def _subring(self, body, origin):
        match = self._match(rf"subring\s+({IDENTIFIER})(?:\s+symbol\s+({IDENTIFIER}))?\s*=\s*(.+)",
                            body, origin, "subring <name> [symbol <symbol>] = <polys>")
        if self.current_ring is None:
            raise NameResolutionError("subring declared before any ring", *origin)
        text = self._poly(match, 3, body, origin)
        self._check_polys([text], self.rings[self.current_ring])
        self.subrings[match.group(1)] = self.rings[self.current_ring]
        return SubringDecl(match.group(1), self.current_ring, match.group(2), (text,), *origin)

    def _target(self, keyword, body, origin):
        match = self._match(rf"{keyword}\s+({IDENTIFIER})(?:\s+(.*))?", body, origin,
                            f"{keyword} <subring>" + (" [key=value ...]" if keyword == "sagbi" else ""))
        target = self._subring_name(match, 1, body, origin)
        options = {}
        if keyword == "sagbi":
            options = self._options(match.group(2), body, match.start(2), origin)
        elif match.group(2):
            raise self.error(f"unexpected '{match.group(2)}'", body, match.start(2), origin)
        return Command(keyword, target, *origin, options=options)

    def _sagbi(self, body, origin):
        return self._target("sagbi", body, origin)

    def _check(self, body, origin):
        return self._target("check", body, origin)

    def _gens(self, body, origin):
        return self._target("gens", body, origin)

    def _fullintersection(self, body, origin):
        return self._target("fullintersection", body, origin)

    def _with_polynomial(self, keyword, body, origin):
        match = self._match(rf"{keyword}\s+({IDENTIFIER})\s+(.+)", body, origin,
                            f"{keyword} <subring> <polynomial>")
        target = self._subring_name(match, 1, body, origin)
        text = self._poly(match, 2, body, origin)
        ring = self.subrings[target]
        if ring is not None:
            polys = parse_polynomials(text.text, ring, text.origin)
            if len(polys) != 1:
                raise ParseError(f"{keyword} takes a single polynomial", *text.origin)
        return Command(keyword, target, *origin, polynomial=text)

    def _subduct(self, body, origin):
        return self._with_polynomial("subduct", body, origin)

    def _member(self, body, origin):
        return self._with_polynomial("member", body, origin)

    def _normalform(self, body, origin):
        return self._with_polynomial("normalform", body, origin)

    def _coefficients(self, body, origin):
        return self._with_polynomial("coefficients", body, origin)

    def _intersect(self, body, origin):
        match = self._match(rf"intersect\s+({IDENTIFIER})\s*=\s*({IDENTIFIER})\s*&\s*({IDENTIFIER})(?:\s+(.*))?",
                            body, origin, "intersect <name> = <subring> & <subring> [limit=<n>]")
        left = self._subring_name(match, 2, body, origin)
        right = self._subring_name(match, 3, body, origin)
        options = self._options(match.group(4), body, match.start(4), origin)
        ring = self.subrings[left]
        if ring is not None and self.subrings[right] is not None and ring != self.subrings[right]:
            raise NameResolutionError(f"subrings '{left}' and '{right}' live in different rings",
                                      *origin)
        self.subrings[match.group(1)] = ring
        return Command("intersect", match.group(1), *origin, arguments=(left, right), options=options)

    def _save(self, body, origin):
        match = self._match(rf"save\s+({IDENTIFIER})\s+(\S+)", body, origin, "save <subring> <path>")
        target = self._subring_name(match, 1, body, origin)
        return Command("save", target, *origin, arguments=(match.group(2),))

    def _load(self, body, origin):
        match = self._match(rf"load\s+({IDENTIFIER})\s+(\S+)", body, origin, "load <name> <path>")
        # The ring is only known once the file is read
        self.subrings[match.group(1)] = None
        return Command("load", match.group(1), *origin, arguments=(match.group(2),))

    def _select(self, body, origin):
        match = self._match(rf"select\s+([0-9]+)\s+({IDENTIFIER})", body, origin,
                            "select <block> <subring>")
        target = self._subring_name(match, 2, body, origin)
        return Command("select", target, *origin, arguments=(match.group(1),))


STATEMENTS = ("ring", "subring", "sagbi", "check", "gens", "fullintersection", "subduct",
              "member", "normalform", "coefficients", "intersect", "save", "load", "select")


def parse_script(text, bound=()):
    """
    Parse a session script

    Args:
        text (str): Script text
        bound (iterable): Subring names bound before the script runs

    Returns:
        Script: Statements in order
    """
    return _ScriptParser(bound).parse(text)
