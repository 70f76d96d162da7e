"""
Saved computation state
A two-column CSV record (Field, Value); list fields repeat their row once per
entry. Polynomials are written in the parser grammar.
"""

import csv

from .errors import SagbiError, StateFileError
from .parser import parse_order, parse_polynomial
from .polynomials import PolyRing
from .subalgebra import SAGBIBasis, SagbiOptions, Subring

STATE_FORMAT_VERSION = 1
STATE_HEADER = ['Field', 'Value']

LIST_FIELDS = ('variable', 'quotient', 'subringGen', 'sagbiGen')
REQUIRED_FIELDS = ('formatVersion', 'ringName', 'variable', 'order', 'generatorSymbol',
                   'subringGen', 'sagbiGen', 'processedDegree', 'complete', 'limit')
OPTION_FIELDS = (
    ('limit', 'limit'),
    ('strategy', 'strategy'),
    ('subductionMethod', 'subduction_method'),
    ('autoSubduce', 'auto_subduce'),
    ('autoSubduceOnPartialCompletion', 'auto_subduce_on_partial_completion'),
    ('printLevel', 'print_level'),
    ('recompute', 'recompute'),
    ('renewOptions', 'renew_options'),
)


def _flag(value):
    return 'true' if value else 'false'


def to_record(basis):
    """(field, value) rows describing a computation object."""
    ring = basis.ring
    rows = [('formatVersion', STATE_FORMAT_VERSION), ('ringName', ring.name)]
    rows += [('variable', v) for v in ring.variables]
    rows.append(('order', ring.order.spec()))
    rows += [('quotient', str(q)) for q in ring.quotient_ideal]
    rows.append(('generatorSymbol', basis.subring.generator_symbol))
    rows += [('subringGen', str(g)) for g in basis.subring.generators]
    rows += [('sagbiGen', str(g)) for g in basis.sagbi_gens]
    rows.append(('processedDegree', basis.processed_degree))
    rows.append(('complete', _flag(basis.complete)))
    options = basis.options
    for name, attribute in OPTION_FIELDS:
        value = getattr(options, attribute)
        if isinstance(value, bool):
            value = _flag(value)
        elif hasattr(value, 'value'):
            value = value.value
        rows.append((name, value))
    return rows


def save_state(basis, path):
    """
    Write a computation object to a state file

    Args:
        basis (SAGBIBasis): Computation object to save
        path (str): Destination file (overwritten)
    """
    with open(path, 'w', newline='') as f:
        writer = csv.writer(f)
        writer.writerow(STATE_HEADER)
        for field, value in to_record(basis):
            writer.writerow([field, value])


def _read_fields(path):
    fields = {}
    with open(path, newline='') as f:
        reader = csv.reader(f)
        header = next(reader, None)
        if header != STATE_HEADER:
            raise StateFileError(f"{path}: not a state file (header {header})")
        for number, row in enumerate(reader, start=2):
            if not row:
                continue
            if len(row) != 2:
                raise StateFileError(f"{path}: row {number} has {len(row)} columns, expected 2")
            field, value = row
            if field in LIST_FIELDS:
                fields.setdefault(field, []).append(value)
            elif field in fields:
                raise StateFileError(f"{path}: field '{field}' appears twice")
            else:
                fields[field] = value
    missing = [name for name in REQUIRED_FIELDS if name not in fields]
    if missing:
        raise StateFileError(f"{path}: missing field(s) {', '.join(missing)}")
    return fields


def _integer(fields, name, path):
    try:
        return int(fields[name])
    except ValueError:
        raise StateFileError(f"{path}: field '{name}' is not an integer: {fields[name]!r}") from None


def _boolean(fields, name, path, default=None):
    value = fields.get(name)
    if value is None and default is not None:
        return default
    if value not in ('true', 'false'):
        raise StateFileError(f"{path}: field '{name}' must be true or false, got {value!r}")
    return value == 'true'


def load_state(path):
    """
    Read a computation object back from a state file

    Args:
        path (str): State file written by save_state

    Returns:
        SAGBIBasis: Object whose subring caches it

    Raises:
        StateFileError: Version mismatch, corrupt content or violated invariants
    """
    fields = _read_fields(path)
    version = _integer(fields, 'formatVersion', path)
    if version != STATE_FORMAT_VERSION:
        raise StateFileError(f"{path}: format version {version}, "
                             f"this build reads version {STATE_FORMAT_VERSION}")
    try:
        order = parse_order(fields['order'])
        ring = PolyRing(fields['variable'], order, name=fields['ringName'])
        quotient = [parse_polynomial(text, ring) for text in fields.get('quotient', [])]
        if quotient:
            ring = PolyRing(fields['variable'], order, quotient=quotient, name=fields['ringName'])
        subring_gens = [parse_polynomial(text, ring) for text in fields['subringGen']]
        sagbi_gens = [parse_polynomial(text, ring) for text in fields['sagbiGen']]
        options = SagbiOptions(
            limit=_integer(fields, 'limit', path),
            strategy=fields.get('strategy', 'master'),
            subduction_method=fields.get('subductionMethod', 'top'),
            auto_subduce=_boolean(fields, 'autoSubduce', path, True),
            auto_subduce_on_partial_completion=_boolean(
                fields, 'autoSubduceOnPartialCompletion', path, False),
            print_level=int(fields.get('printLevel', 0)),
            recompute=_boolean(fields, 'recompute', path, False),
            renew_options=_boolean(fields, 'renewOptions', path, False),
        )
    except StateFileError:
        raise
    except (SagbiError, ValueError) as exc:
        raise StateFileError(f"{path}: corrupt state: {exc}") from None

    processed = _integer(fields, 'processedDegree', path)
    complete = _boolean(fields, 'complete', path)
    if not sagbi_gens or not subring_gens:
        raise StateFileError(f"{path}: a computation needs generators")
    for g in sagbi_gens:
        if not g.is_monic() or g.is_constant():
            raise StateFileError(f"{path}: stored generator {g} is not a monic non-constant polynomial")
    if processed < 0 or processed > options.limit:
        raise StateFileError(f"{path}: processed degree {processed} outside 0..{options.limit}")

    subring = Subring(ring, subring_gens, fields['generatorSymbol'])
    basis = SAGBIBasis(subring, sagbi_gens, processed, complete, options,
                       pending_flagged=not complete)
    subring.offer(basis)
    return basis
