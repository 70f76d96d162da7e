"""
Exact multivariate polynomials over the rationals
Rings (optionally modulo an ideal), terms, arithmetic and printing.

Polynomials store a dictionary exponent tuple -> Fraction; in a quotient ring
the dictionary is always the normal form modulo the ring's Groebner basis.
"""

import heapq
import operator
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational

import numpy as np

from .errors import DomainError, InvalidInputError, RingMismatchError
from .orders import GRevLex, SortKey

DEFAULT_RING_NAME = "R"


@dataclass(frozen=True)
class Term:
    exponent: tuple
    coefficient: Fraction

    def __post_init__(self):
        if self.coefficient == 0:
            raise DomainError("terms must have a nonzero coefficient")
        object.__setattr__(self, "coefficient", Fraction(self.coefficient))

    @property
    def degree(self):
        return sum(self.exponent)


def monomial_divides(a, b):
    """True when x^a divides x^b."""
    return all(x <= y for x, y in zip(a, b))


def monomial_product(a, b):
    return tuple(map(operator.add, a, b))


def monomial_quotient(a, b):
    return tuple(map(operator.sub, a, b))


def monomial_lcm(a, b):
    return tuple(map(max, a, b))


def divide_terms(terms, divisors, key):
    """Full normal form of a term dictionary.

    divisors holds (lead exponent, lead coefficient, tail terms) triples; the
    result has no monomial divisible by any lead exponent.
    """
    if not divisors or not terms:
        return dict(terms)
    work = dict(terms)
    heap = [(_negated(key(e)), e) for e in work]
    heapq.heapify(heap)
    remainder = {}
    while heap:
        _, exponent = heapq.heappop(heap)
        coefficient = work.pop(exponent, None)
        if coefficient is None:
            continue
        for lead, lead_coefficient, tail in divisors:
            if not monomial_divides(lead, exponent):
                continue
            shift = monomial_quotient(exponent, lead)
            factor = coefficient / lead_coefficient
            for tail_exponent, tail_coefficient in tail:
                target = monomial_product(tail_exponent, shift)
                current = work.get(target)
                if current is None:
                    work[target] = -factor * tail_coefficient
                    heapq.heappush(heap, (_negated(key(target)), target))
                else:
                    value = current - factor * tail_coefficient
                    if value:
                        work[target] = value
                    else:
                        del work[target]
            break
        else:
            remainder[exponent] = coefficient
    return remainder


def _negated(key):
    return tuple(-k for k in key)


def as_divisor(poly):
    """Division data of a nonzero polynomial, for divide_terms."""
    (lead, coefficient), *tail = poly.terms
    return lead, coefficient, tuple(tail)


class PolyRing:
    """Polynomial ring QQ[variables] with a global monomial order, optionally modulo an ideal."""

    def __init__(self, variables, order=None, quotient=None, name=DEFAULT_RING_NAME):
        """
        Create a polynomial ring

        Args:
            variables (list): Variable names, greatest first
            order (MonomialOrder): Global monomial order (default: GRevLex)
            quotient (list): Ideal generators (polynomials or text) to divide out
            name (str): Display name used in listings
        """
        self.variables = tuple(variables)
        if not self.variables:
            raise InvalidInputError("a ring needs at least one variable")
        if len(set(self.variables)) != len(self.variables):
            raise InvalidInputError(f"duplicate variable names in {list(self.variables)}")
        self.order = order if order is not None else GRevLex()
        self.name = name
        self.key = SortKey(self.order, len(self.variables))
        self._index = {v: i for i, v in enumerate(self.variables)}
        self._base = None
        self.quotient_ideal = ()
        self.quotient_gb = None
        self._divisors = ()
        if quotient:
            self._install_quotient(quotient)

    def _install_quotient(self, quotient):
        from .groebner import buchberger

        base = self.base_ring
        ideal = tuple(base.coerce(q) for q in quotient)
        ideal = tuple(q for q in ideal if q)
        if not ideal:
            return
        gb = buchberger(list(ideal))
        if any(g.is_constant() for g in gb.generators):
            raise InvalidInputError("quotient by the unit ideal")
        self.quotient_ideal = ideal
        self.quotient_gb = gb
        self._divisors = tuple(as_divisor(g) for g in gb.generators)

    @property
    def nvars(self):
        return len(self.variables)

    @property
    def base_ring(self):
        """The same ring without its quotient ideal."""
        if self.quotient_gb is None:
            return self
        if self._base is None:
            self._base = PolyRing(self.variables, self.order, name=self.name)
        return self._base

    @property
    def quotient_leads(self):
        """Lead exponents of the quotient Groebner basis (generators of in(I))."""
        return [d[0] for d in self._divisors]

    def _signature(self):
        quotient = ()
        if self.quotient_gb is not None:
            quotient = tuple(frozenset(g._terms.items()) for g in self.quotient_gb.generators)
        return self.variables, self.order, quotient

    def __eq__(self, other):
        if self is other:
            return True
        if not isinstance(other, PolyRing):
            return NotImplemented
        return self._signature() == other._signature()

    def __hash__(self):
        return hash(self._signature())

    def index(self, name):
        try:
            return self._index[name]
        except KeyError:
            raise InvalidInputError(f"unknown variable '{name}'") from None

    def normalize(self, terms):
        """Drop zero coefficients and reduce modulo the quotient ideal."""
        terms = {e: c for e, c in terms.items() if c}
        if self._divisors:
            terms = divide_terms(terms, self._divisors, self.key)
        return terms

    # Constructors

    def polynomial(self, terms):
        """Polynomial from a mapping exponent -> coefficient (validated)."""
        clean = {}
        for exponent, coefficient in dict(terms).items():
            exponent = tuple(int(a) for a in exponent)
            if len(exponent) != self.nvars or any(a < 0 for a in exponent):
                raise InvalidInputError(f"bad exponent vector {exponent} for {self.nvars} variables")
            clean[exponent] = clean.get(exponent, 0) + _rational(coefficient)
        return Polynomial(self, clean)

    def zero(self):
        return Polynomial(self, {}, normal=True)

    def one(self):
        return self.constant(1)

    def constant(self, value):
        value = _rational(value)
        return Polynomial(self, {(0,) * self.nvars: value} if value else {}, normal=True)

    def monomial(self, exponent, coefficient=1):
        return self.polynomial({tuple(exponent): coefficient})

    def variable(self, which):
        i = self.index(which) if isinstance(which, str) else int(which)
        exponent = tuple(1 if j == i else 0 for j in range(self.nvars))
        return Polynomial(self, {exponent: Fraction(1)})

    def gens(self):
        return [self.variable(i) for i in range(self.nvars)]

    def coerce(self, value):
        """Bring text, numbers or a polynomial of an equal ring into this ring."""
        if isinstance(value, Polynomial):
            if value.ring is self:
                return value
            if value.ring.variables != self.variables or value.ring.order != self.order:
                raise RingMismatchError(f"cannot coerce from {value.ring} into {self}")
            return Polynomial(self, dict(value._terms))
        if isinstance(value, str):
            from .parser import parse_polynomial
            return parse_polynomial(value, self)
        if isinstance(value, (int, Rational)):
            return self.constant(value)
        raise InvalidInputError(f"cannot build a polynomial from {value!r}")

    def describe(self):
        text = f"QQ[{', '.join(self.variables)}]"
        if self.quotient_ideal:
            text += "/(" + ", ".join(str(q) for q in self.quotient_ideal) + ")"
        return text

    def __str__(self):
        return self.name

    def __repr__(self):
        return f"PolyRing({self.describe()}, order={self.order.spec()})"


def _rational(value):
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (int, Rational)):
        return Fraction(value)
    raise InvalidInputError(f"coefficients must be exact rationals, got {value!r}")


class Polynomial:
    """Immutable polynomial in a PolyRing, kept in canonical form."""

    __slots__ = ("ring", "_terms", "_sorted", "_hash")

    def __init__(self, ring, terms, normal=False):
        self.ring = ring
        self._terms = terms if normal else ring.normalize(terms)
        self._sorted = None
        self._hash = None

    # Inspection

    @property
    def terms(self):
        """(exponent, coefficient) pairs, strictly descending in the ring order."""
        if self._sorted is None:
            key = self.ring.key
            self._sorted = sorted(self._terms.items(), key=lambda t: key(t[0]), reverse=True)
        return self._sorted

    def coefficient(self, exponent):
        return self._terms.get(tuple(exponent), Fraction(0))

    def exponents(self):
        return list(self._terms)

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def is_zero(self):
        return not self._terms

    def is_constant(self):
        return all(not any(e) for e in self._terms)

    def constant_coefficient(self):
        return self._terms.get((0,) * self.ring.nvars, Fraction(0))

    def lead_term(self):
        if not self._terms:
            raise DomainError("the zero polynomial has no lead term")
        exponent, coefficient = self.terms[0]
        return Term(exponent, coefficient)

    def lead_monomial(self):
        if not self._terms:
            raise DomainError("the zero polynomial has no lead monomial")
        return self.terms[0][0]

    def lead_coefficient(self):
        if not self._terms:
            raise DomainError("the zero polynomial has no lead coefficient")
        return self.terms[0][1]

    def total_degree(self):
        if not self._terms:
            return -1
        return max(sum(e) for e in self._terms)

    def support(self):
        """Indices of the variables that occur."""
        if not self._terms:
            return set()
        exponents = np.array(list(self._terms), dtype=np.int64)
        return set(np.flatnonzero(exponents.any(axis=0)).tolist())

    def is_monic(self):
        return bool(self._terms) and self.lead_coefficient() == 1

    # Arithmetic

    def _check(self, other):
        if self.ring is not other.ring and self.ring != other.ring:
            raise RingMismatchError(f"polynomials live in different rings: "
                                    f"{self.ring.describe()} and {other.ring.describe()}")

    def _lift(self, other):
        if isinstance(other, Polynomial):
            self._check(other)
            return other
        if isinstance(other, (int, Rational)):
            return self.ring.constant(other)
        return None

    def __add__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        result = dict(self._terms)
        for exponent, coefficient in other._terms.items():
            value = result.get(exponent, 0) + coefficient
            if value:
                result[exponent] = value
            else:
                result.pop(exponent, None)
        return Polynomial(self.ring, result, normal=True)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(self.ring, {e: -c for e, c in self._terms.items()}, normal=True)

    def __sub__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def scale(self, factor):
        factor = _rational(factor)
        if not factor:
            return self.ring.zero()
        return Polynomial(self.ring, {e: c * factor for e, c in self._terms.items()}, normal=True)

    def monic(self):
        if not self._terms:
            return self
        return self.scale(1 / self.lead_coefficient())

    def mul_term(self, exponent, coefficient=1):
        """Product with the single term coefficient * x^exponent."""
        coefficient = _rational(coefficient)
        terms = {monomial_product(e, exponent): c * coefficient
                 for e, c in self._terms.items()}
        return Polynomial(self.ring, terms, normal=not self.ring._divisors and bool(coefficient))

    def __mul__(self, other):
        if isinstance(other, (int, Rational)):
            return self.scale(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        self._check(other)
        result = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                exponent = tuple(map(operator.add, e1, e2))
                result[exponent] = result.get(exponent, 0) + c1 * c2
        return Polynomial(self.ring, result)

    __rmul__ = __mul__

    def __pow__(self, exponent):
        if not isinstance(exponent, int):
            return NotImplemented
        if exponent < 0:
            raise InvalidInputError("negative exponent")
        result = self.ring.one()
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            exponent >>= 1
            if exponent:
                base = base * base
        return result

    # Comparison and hashing

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            if self.ring is not other.ring and self.ring != other.ring:
                return False
            return self._terms == other._terms
        if isinstance(other, (int, Rational)):
            return self._terms == self.ring.constant(other)._terms
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    # Mapping between rings

    def embed(self, ring, positions):
        """Copy into ring, sending variable i to variable positions[i]."""
        width = ring.nvars
        terms = {}
        for exponent, coefficient in self._terms.items():
            image = [0] * width
            for i, a in enumerate(exponent):
                if a:
                    if positions[i] is None:
                        raise InvalidInputError(
                            f"variable {self.ring.variables[i]} has no image in {ring.describe()}")
                    image[positions[i]] += a
            terms[tuple(image)] = coefficient
        return Polynomial(ring, terms)

    # Printing

    def to_string(self):
        return format_terms(self.terms, self.ring.variables)

    def __str__(self):
        return self.to_string()

    def __repr__(self):
        return f"Polynomial({self.to_string()!r})"


def format_coefficient(value):
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def format_monomial(exponent, names):
    return "*".join(name if a == 1 else f"{name}^{a}"
                    for name, a in zip(names, exponent) if a)


def format_terms(terms, names):
    """Text in the parser grammar, e.g. x^3*y-3/2*x*y^2+1."""
    if not terms:
        return "0"
    pieces = []
    for position, (exponent, coefficient) in enumerate(terms):
        monomial = format_monomial(exponent, names)
        magnitude = abs(coefficient)
        if not monomial:
            body = format_coefficient(magnitude)
        elif magnitude == 1:
            body = monomial
        else:
            body = f"{format_coefficient(magnitude)}*{monomial}"
        if coefficient < 0:
            pieces.append("-" + body)
        elif position:
            pieces.append("+" + body)
        else:
            pieces.append(body)
    return "".join(pieces)


def format_listing(polys):
    """Generators between bars, e.g. | x+y y^6 |."""
    inner = " ".join(str(p) for p in polys)
    return f"| {inner} |" if inner else "| |"


def lead_term(f):
    return f.lead_term()


def poly_add(f, g):
    return f + g


def poly_mul(f, g):
    return f * g


def evaluate_map(q, images):
    """Substitute images[i] for the i-th variable of q and expand exactly."""
    images = list(images)
    if len(images) != q.ring.nvars:
        raise InvalidInputError(
            f"map has {len(images)} images for {q.ring.nvars} variables")
    target = images[0].ring
    for image in images[1:]:
        image._check(images[0])
    powers = {}

    def power(i, a):
        if (i, a) not in powers:
            powers[(i, a)] = images[i] ** a
        return powers[(i, a)]

    total = {}
    for exponent, coefficient in q._terms.items():
        product = target.constant(coefficient)
        for i, a in enumerate(exponent):
            if a:
                product = product * power(i, a)
        for e, c in product._terms.items():
            value = total.get(e, 0) + c
            if value:
                total[e] = value
            else:
                total.pop(e, None)
    return Polynomial(target, total, normal=True)


def select_in_subring(block_index, polys):
    """Keep the polynomials that avoid every variable of the first block_index blocks."""
    polys = list(polys)
    if not polys:
        return []
    ring = polys[0].ring
    blocks = ring.order.blocks(ring.nvars)
    if block_index < 1 or block_index > len(blocks):
        raise InvalidInputError(
            f"order '{ring.order.spec()}' has {len(blocks)} blocks, asked for {block_index}")
    banned = sorted({i for block in blocks[:block_index] for i in block})
    kept = []
    for f in polys:
        f._check(polys[0])
        if not f:
            continue
        exponents = np.array(list(f._terms), dtype=np.int64)
        if not exponents[:, banned].any():
            kept.append(f)
    return kept
