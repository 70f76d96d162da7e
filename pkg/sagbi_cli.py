#!/usr/bin/env python3
"""
SAGBI session runner
Executes session scripts (or a single statement) and prints one numbered
result per statement.
"""

import argparse
import json
import sys
from dataclasses import dataclass
from typing import Optional

from sagbi.errors import InvalidInputError, ParseError, SagbiError, StateFileError
from sagbi.membership import (
    groebner_membership_test,
    is_full_intersection,
    normal_form,
    quotient_coefficients,
    subring_intersection,
)
from sagbi.parser import parse_polynomials
from sagbi.polynomials import format_listing, select_in_subring
from sagbi.progress import ProgressLog
from sagbi.script import RingDecl, SubringDecl, parse_script
from sagbi.state import load_state, save_state, to_record
from sagbi.subalgebra import SagbiOptions, Subductor, is_sagbi, make_subring, sagbi

STATE_NAME = "state"

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_MATH = 3
EXIT_IO = 4

EXIT_CODES = {"parse": EXIT_PARSE, "input": EXIT_MATH, "math": EXIT_MATH, "io": EXIT_IO}


@dataclass
class CliConfig:
    script_path: Optional[str] = None
    command: Optional[str] = None
    print_level: int = 0
    state_in: Optional[str] = None
    state_out: Optional[str] = None
    output_format: str = "text"
    log_file: Optional[str] = None

    def __post_init__(self):
        if (self.script_path is None) == (self.command is None):
            raise ValueError("give exactly one of a script path or an inline command")
        if self.output_format not in ("text", "structured"):
            raise ValueError(f"unknown output format '{self.output_format}'")
        if self.print_level < 0:
            raise ValueError("print level must be non-negative")


def _flag(value):
    return "true" if value else "false"


def _state_fields(basis):
    fields = {}
    for name, value in to_record(basis):
        if name in ("variable", "quotient", "subringGen", "sagbiGen"):
            fields.setdefault(name, []).append(value)
        else:
            fields[name] = value
    return fields


class SessionInterpreter:
    """Runs parsed statements against named rings and subrings."""

    def __init__(self, config, stdout=None, stderr=None):
        self.config = config
        self.stdout = stdout if stdout is not None else sys.stdout
        self.stderr = stderr if stderr is not None else sys.stderr
        trace = self.stdout if config.output_format == "text" else self.stderr
        self.log = ProgressLog(config.print_level, trace, config.log_file)
        self.rings = {}
        self.subrings = {}
        self.last_basis = None

    # Output

    def report(self, number, statement, text, extra=None):
        if self.config.output_format == "text":
            print(f"[{number}] {text}", file=self.stdout)
            return
        entry = {"statement": number, "command": _kind(statement), "line": statement.line,
                 "result": text}
        entry.update(extra or {})
        print(json.dumps(entry), file=self.stdout)

    # Execution

    def bind_state(self, basis):
        self.subrings[STATE_NAME] = basis.subring
        self.last_basis = basis

    def execute(self, number, statement):
        if isinstance(statement, RingDecl):
            self.rings[statement.name] = statement.ring
            self.report(number, statement, statement.ring.describe())
        elif isinstance(statement, SubringDecl):
            ring = self.rings[statement.ring_name]
            gens = []
            for text in statement.generators:
                gens += parse_polynomials(text.text, ring, text.origin)
            subring = make_subring(gens, statement.symbol)
            self.subrings[statement.name] = subring
            self.report(number, statement, str(subring),
                        {"generators": [str(g) for g in subring.generators]})
        else:
            handler = getattr(self, "_" + statement.name)
            handler(number, statement)

    def _polynomial(self, statement):
        subring = self.subrings[statement.target]
        text = statement.polynomial
        polys = parse_polynomials(text.text, subring.ambient_ring, text.origin)
        if len(polys) != 1:
            raise ParseError(f"{statement.name} takes a single polynomial", text.line, text.column)
        return subring, polys[0]

    def _options(self, statement):
        values = {"print_level": self.config.print_level}
        values.update(statement.options)
        return SagbiOptions(**values)

    def _sagbi(self, number, statement):
        subring = self.subrings[statement.target]
        basis = sagbi(subring, self._options(statement), self.log)
        self.last_basis = basis
        self.report(number, statement, str(basis),
                    {"generators": [str(g) for g in basis.sagbi_gens],
                     "state": _state_fields(basis)})

    def _check(self, number, statement):
        subring = self.subrings[statement.target]
        source = subring.cache if subring.cache is not None else subring
        verdict = is_sagbi(source, self.log)
        if subring.cache is not None:
            self.last_basis = subring.cache
        self.report(number, statement, _flag(verdict), {"value": verdict})

    def _gens(self, number, statement):
        subring = self.subrings[statement.target]
        gens = subring.cache.sagbi_gens if subring.cache is not None else subring.generators
        self.report(number, statement, format_listing(gens),
                    {"generators": [str(g) for g in gens]})

    def _fullintersection(self, number, statement):
        verdict = is_full_intersection(self.subrings[statement.target])
        self.report(number, statement, _flag(verdict), {"value": verdict})

    def _subduct(self, number, statement):
        subring, f = self._polynomial(statement)
        gens = subring.cache.sagbi_gens if subring.cache is not None else subring.generators
        remainder = Subductor(gens, log=self.log).subduct(f)
        self.report(number, statement, str(remainder))

    def _member(self, number, statement):
        subring, f = self._polynomial(statement)
        verdict = groebner_membership_test(f, subring)
        self.report(number, statement, _flag(verdict), {"value": verdict})

    def _normalform(self, number, statement):
        subring, f = self._polynomial(statement)
        self.report(number, statement, str(normal_form(f, subring)))

    def _coefficients(self, number, statement):
        subring, f = self._polynomial(statement)
        self.report(number, statement, str(quotient_coefficients(f, subring)))

    def _intersect(self, number, statement):
        left, right = (self.subrings[name] for name in statement.arguments)
        result = subring_intersection(left, right, self._options(statement), self.log)
        self.subrings[statement.target] = result
        self.report(number, statement, str(result),
                    {"generators": [str(g) for g in result.generators],
                     "full": result.composite_certified})

    def _save(self, number, statement):
        subring = self.subrings[statement.target]
        if subring.cache is None:
            raise StateFileError(f"subring '{statement.target}' has no computation to save")
        path = statement.arguments[0]
        save_state(subring.cache, path)
        self.report(number, statement, f"saved {path}")

    def _load(self, number, statement):
        basis = load_state(statement.arguments[0])
        self.subrings[statement.target] = basis.subring
        self.last_basis = basis
        self.report(number, statement, str(basis),
                    {"generators": [str(g) for g in basis.sagbi_gens],
                     "state": _state_fields(basis)})

    def _select(self, number, statement):
        subring = self.subrings[statement.target]
        gens = subring.cache.sagbi_gens if subring.cache is not None else subring.generators
        kept = select_in_subring(int(statement.arguments[0]), gens)
        self.report(number, statement, format_listing(kept),
                    {"generators": [str(g) for g in kept]})


def _kind(statement):
    if isinstance(statement, RingDecl):
        return "ring"
    if isinstance(statement, SubringDecl):
        return "subring"
    return statement.name


def _diagnostic(error, statement=None):
    category = getattr(error, "category", "io")
    if isinstance(error, ParseError):
        where = error.describe()
    elif statement is not None:
        where = f"line {statement.line}: {error}"
    else:
        where = str(error)
    return f"[{category.upper()} ERROR] {where}"


def run(config, stdout=None, stderr=None):
    """
    Execute a session

    Args:
        config (CliConfig): What to run and how to report it
        stdout: Stream for results (default: standard output)
        stderr: Stream for diagnostics (default: standard error)

    Returns:
        int: Exit status (0 ok, 2 parse, 3 math or input, 4 I/O)
    """
    stderr = stderr if stderr is not None else sys.stderr
    statement = None
    try:
        interpreter = SessionInterpreter(config, stdout, stderr)
        bound = ()
        if config.state_in:
            interpreter.bind_state(load_state(config.state_in))
            bound = (STATE_NAME,)
        if config.script_path:
            with open(config.script_path) as f:
                text = f.read()
        else:
            text = config.command.strip()
            if not text.endswith(";"):
                text += ";"
        script = parse_script(text, bound)
        for number, statement in enumerate(script, start=1):
            interpreter.execute(number, statement)
        statement = None
        if config.state_out:
            if interpreter.last_basis is None:
                raise StateFileError("no computation object to save")
            save_state(interpreter.last_basis, config.state_out)
    except SagbiError as exc:
        print(_diagnostic(exc, statement), file=stderr)
        return EXIT_CODES.get(exc.category, EXIT_MATH)
    except (RecursionError, OverflowError) as exc:
        reason = "input is nested too deeply" if isinstance(exc, RecursionError) else str(exc)
        print(_diagnostic(InvalidInputError(reason), statement), file=stderr)
        return EXIT_MATH
    except OSError as exc:
        print(f"[IO ERROR] {exc}", file=stderr)
        return EXIT_IO
    return EXIT_OK


def build_parser():
    parser = argparse.ArgumentParser(description='Subalgebra (SAGBI) basis sessions')
    source = parser.add_mutually_exclusive_group(required=True)
    source.add_argument('--script', help='Session script to run')
    source.add_argument('--eval', help='Single statement to run, e.g. "check S;"')
    parser.add_argument('--print-level', type=int, default=0,
                        help='0 results only, 1 per-degree progress, 2 subduction steps (default: 0)')
    parser.add_argument('--state-in', help=f"Saved computation to load as subring '{STATE_NAME}'")
    parser.add_argument('--state-out', help='Where to save the last computation object')
    parser.add_argument('--format', choices=['text', 'structured'], default='text',
                        help='Result format: numbered text lines or JSON lines (default: text)')
    parser.add_argument('--log-file', help='CSV file to append progress events to')
    return parser


def main(argv=None):
    """Entry point."""
    args = build_parser().parse_args(argv)
    try:
        config = CliConfig(script_path=args.script, command=args.eval,
                           print_level=args.print_level, state_in=args.state_in,
                           state_out=args.state_out, output_format=args.format,
                           log_file=args.log_file)
    except ValueError as exc:
        print(f"[INPUT ERROR] {exc}", file=sys.stderr)
        sys.exit(EXIT_MATH)
    sys.exit(run(config))


if __name__ == "__main__":
    main()
