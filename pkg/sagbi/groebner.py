"""
Groebner basis engine
Buchberger's algorithm with the normal selection strategy and the
Gebauer-Moeller criteria, reduction, elimination and kernels of monomial maps.
"""

import heapq
import operator
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Optional, Tuple

from .errors import DomainError, IncompleteBasisError, InvalidInputError
from .orders import Blocks, GRevLex, Weights
from .polynomials import (
    PolyRing,
    Polynomial,
    Term,
    as_divisor,
    divide_terms,
    monomial_divides,
    monomial_lcm,
    monomial_product,
    monomial_quotient,
    select_in_subring,
)

DEFAULT_GENERATOR_SYMBOL = "p"


class Strategy(Enum):
    """How the tag-ideal basis is maintained between completion rounds."""

    DEGREE_BY_DEGREE = "degree"
    INCREMENTAL = "incremental"
    MASTER = "master"


@dataclass(frozen=True)
class GroebnerBasis:
    ring: PolyRing
    generators: Tuple[Polynomial, ...]
    degree_bound: Optional[int] = None
    complete: bool = True

    def lead_monomials(self):
        return [g.lead_monomial() for g in self.generators]

    def reduce(self, f):
        return reduce_modulo(f, self)

    def __len__(self):
        return len(self.generators)

    def __iter__(self):
        return iter(self.generators)


def s_polynomial(f, g):
    """Combination of f and g that cancels their lead terms."""
    if not f or not g:
        raise DomainError("S-polynomial of the zero polynomial")
    f._check(g)
    lead_f, coefficient_f = f.terms[0]
    lead_g, coefficient_g = g.terms[0]
    lcm = monomial_lcm(lead_f, lead_g)
    return (f.mul_term(monomial_quotient(lcm, lead_f), 1 / coefficient_f)
            - g.mul_term(monomial_quotient(lcm, lead_g), 1 / coefficient_g))


def reduce_modulo(f, basis):
    """Full normal form of f: no monomial is divisible by a lead monomial of basis."""
    divisors = []
    for g in basis:
        f._check(g)
        if g:
            divisors.append(as_divisor(g))
    # Quotient rings also divide by the quotient basis to stay canonical
    divisors.extend(f.ring._divisors)
    return Polynomial(f.ring, divide_terms(f._terms, divisors, f.ring.key), normal=True)


def _graded_degree(exponent, grading):
    return sum(map(operator.mul, exponent, grading))


class _PairQueue:
    """Critical pairs ordered by graded lcm degree, then by the order on the lcm."""

    def __init__(self, ring, grading):
        self.ring = ring
        self.grading = grading
        self.heap = []
        self.live = set()

    def add(self, i, j, lcm):
        self.live.add((i, j))
        heapq.heappush(self.heap, (_graded_degree(lcm, self.grading), self.ring.key(lcm), i, j))

    def peek_degree(self):
        while self.heap:
            degree, _, i, j = self.heap[0]
            if (i, j) in self.live:
                return degree
            heapq.heappop(self.heap)
        return None

    def pop(self):
        _, _, i, j = heapq.heappop(self.heap)
        self.live.discard((i, j))
        return i, j


def _update(basis, leads, queue, f):
    """Add f to the basis, pruning pairs with the Gebauer-Moeller criteria."""
    lead_f = f.lead_monomial()
    for i, j in list(queue.live):
        lcm = monomial_lcm(leads[i], leads[j])
        if (monomial_divides(lead_f, lcm)
                and lcm != monomial_lcm(leads[i], lead_f)
                and lcm != monomial_lcm(leads[j], lead_f)):
            queue.live.discard((i, j))
    groups = {}
    for i, lead in enumerate(leads):
        groups.setdefault(monomial_lcm(lead, lead_f), []).append(i)
    minimal = []
    for lcm in sorted(groups, key=queue.ring.key):
        if all(not monomial_divides(kept, lcm) for kept in minimal):
            minimal.append(lcm)
    new_index = len(basis)
    for lcm in minimal:
        # Coprime leads: the pair reduces to zero
        if any(lcm == monomial_product(leads[i], lead_f) for i in groups[lcm]):
            continue
        queue.add(min(groups[lcm]), new_index, lcm)
    basis.append(f)
    leads.append(lead_f)


def minimalize(basis):
    """Drop elements whose lead is divisible by another lead."""
    if not basis:
        return []
    key = basis[0].ring.key
    minimal = []
    for f in sorted(basis, key=lambda h: key(h.lead_monomial())):
        if all(not monomial_divides(g.lead_monomial(), f.lead_monomial()) for g in minimal):
            minimal.append(f)
    return minimal


def interreduce(basis):
    """Reduced, monic basis from a minimal one."""
    reduced = []
    for i, f in enumerate(basis):
        others = basis[:i] + basis[i + 1:]
        reduced.append(reduce_modulo(f, others).monic())
    return reduced


def buchberger(gens, degree_bound=None, grading=None, basis=(), ring=None, basis_bound=None):
    """
    Reduced Groebner basis of the ideal generated by gens

    Args:
        gens (list): Ideal generators
        degree_bound (int): Defer pairs whose graded lcm degree exceeds this bound
        grading (tuple): Variable degrees used for pair selection and truncation
            (default: all 1); truncation is meaningful for homogeneous input
        basis (list): Polynomials already known to form a Groebner basis
        ring (PolyRing): Ring to use when there are no polynomials at all
        basis_bound (int): Degree through which basis is a truncated Groebner basis
            (default: basis is complete)

    Returns:
        GroebnerBasis: complete unless some pairs were deferred
    """
    polys = [g for g in list(basis) + list(gens) if g]
    if polys:
        ring = polys[0].ring
    if ring is None:
        raise InvalidInputError("cannot infer the ring of an empty generator list")
    if ring.quotient_gb is not None:
        raise InvalidInputError(
            "Groebner bases are computed over the polynomial ring; pass the quotient ideal explicitly")
    grading = tuple(grading) if grading is not None else (1,) * ring.nvars

    current, leads = [], []
    divisors = []
    queue = _PairQueue(ring, grading)
    for g in basis:
        if g:
            g = g.monic()
            if basis_bound is None:
                current.append(g)
                leads.append(g.lead_monomial())
            else:
                _update(current, leads, queue, g)
            divisors.append(as_divisor(g))
    if basis_bound is not None:
        # pairs of a truncated basis are settled up to its bound
        for i, j in list(queue.live):
            if _graded_degree(monomial_lcm(leads[i], leads[j]), grading) <= basis_bound:
                queue.live.discard((i, j))
    for f in gens:
        f._check(polys[0])
        remainder = Polynomial(ring, divide_terms(f._terms, divisors, ring.key), normal=True)
        if remainder:
            remainder = remainder.monic()
            _update(current, leads, queue, remainder)
            divisors.append(as_divisor(remainder))

    deferred = False
    while True:
        degree = queue.peek_degree()
        if degree is None:
            break
        if degree_bound is not None and degree > degree_bound:
            deferred = True
            break
        i, j = queue.pop()
        s = s_polynomial(current[i], current[j])
        remainder = Polynomial(ring, divide_terms(s._terms, divisors, ring.key), normal=True)
        if remainder:
            remainder = remainder.monic()
            _update(current, leads, queue, remainder)
            divisors.append(as_divisor(remainder))

    reduced = interreduce(minimalize(current))
    reduced.sort(key=lambda g: ring.key(g.lead_monomial()))
    return GroebnerBasis(ring, tuple(reduced), degree_bound, not deferred)


def initial_ideal_gens(gb):
    """Monic lead monomials of a complete reduced basis."""
    if not gb.complete:
        raise IncompleteBasisError("initial ideal of a truncated Groebner basis")
    return [Term(g.lead_monomial(), Fraction(1)) for g in gb.generators]


def elimination_subring(gb, block_index):
    """Basis elements free of the variables in the first block_index order blocks."""
    if not gb.complete:
        raise IncompleteBasisError("elimination needs a complete Groebner basis")
    return select_in_subring(block_index, gb.generators)


def fresh_symbol(symbol, taken):
    """A generator symbol whose indexed names avoid the given variable names."""
    taken = set(taken)
    while any(name.startswith(symbol + "_") for name in taken):
        symbol = "_" + symbol
    return symbol


def presentation_ring(count, degrees=None, symbol=DEFAULT_GENERATOR_SYMBOL):
    """QQ[symbol_1..symbol_count], graded by degrees, ties by GRevLex."""
    degrees = tuple(degrees) if degrees is not None else (1,) * count
    names = [f"{symbol}_{i + 1}" for i in range(count)]
    return PolyRing(names, Weights(degrees), name=f"QQ[{symbol}]")


def tag_ring(ring, degrees, symbol=DEFAULT_GENERATOR_SYMBOL):
    """k[x, y] with the x block eliminated first, y graded by degrees."""
    symbol = fresh_symbol(symbol, ring.variables)
    names = list(ring.variables) + [f"{symbol}_{i + 1}" for i in range(len(degrees))]
    parts = [(ring.nvars, ring.order)]
    if degrees:
        parts.append((len(degrees), Weights(tuple(degrees))))
    return PolyRing(names, Blocks(tuple(parts)), name="tag")


class TagIdeal:
    """
    The ideal (y_i - x^m_i) + in(I) of a list of lead monomials

    Its basis yields the kernel of the monomial map y_i -> x^m_i and decides
    whether a monomial factors over the m_i.
    """

    def __init__(self, ring, leads, symbol=DEFAULT_GENERATOR_SYMBOL,
                 initial_ideal=None, seed=None, seed_bound=None):
        """
        Build the tag ideal

        Args:
            ring (PolyRing): Ambient ring (its quotient supplies in(I))
            leads (list): Exponent vectors m_i
            symbol (str): Presentation variable symbol
            initial_ideal (list): Exponents generating in(I) (default: from ring)
            seed (list): Groebner basis of a prefix of this ideal, in the tag ring
            seed_bound (int): Degree the seed is valid through (default: complete)
        """
        self.ring = ring
        self.leads = [tuple(m) for m in leads]
        self.degrees = [sum(m) for m in self.leads]
        if any(d == 0 for d in self.degrees):
            raise InvalidInputError("constant lead monomials cannot be tagged")
        self.symbol = symbol
        self.initial_ideal = ([tuple(e) for e in initial_ideal] if initial_ideal is not None
                              else list(ring.quotient_leads))
        self.tag = tag_ring(ring, self.degrees, symbol)
        self.presentation = presentation_ring(len(self.leads), self.degrees, symbol)
        self.grading = (1,) * ring.nvars + tuple(self.degrees)
        n, s = ring.nvars, len(self.leads)
        one = Fraction(1)
        self.generators = []
        for i, m in enumerate(self.leads):
            y = tuple(1 if j == i else 0 for j in range(s))
            self.generators.append(Polynomial(self.tag, {(0,) * n + y: one, m + (0,) * s: -one}))
        for e in self.initial_ideal:
            self.generators.append(Polynomial(self.tag, {e + (0,) * s: one}))
        self.basis = None
        self._seed = seed
        self._seed_bound = seed_bound
        self._divisors = []
        self._factors = {}

    def extended(self, new_leads):
        """Tag ideal with more monomials, seeded with this basis."""
        grown = TagIdeal(self.ring, self.leads + [tuple(m) for m in new_leads],
                         self.symbol, self.initial_ideal)
        if self.basis is not None:
            positions = list(range(self.tag.nvars))
            grown._seed = [g.embed(grown.tag, positions) for g in self.basis.generators]
            grown._seed_bound = None if self.basis.complete else self.basis.degree_bound
        return grown

    def ensure(self, degree=None, strategy=Strategy.INCREMENTAL):
        """
        Basis valid through the given graded degree (complete when degree is None)

        The incremental strategies continue from the basis at hand; degree by
        degree recomputes from the generators.
        """
        basis = self.basis
        if basis is not None:
            if basis.complete:
                return basis
            if degree is not None and basis.degree_bound is not None and basis.degree_bound >= degree:
                return basis
        if strategy is Strategy.DEGREE_BY_DEGREE and degree is not None:
            seed, seed_bound = (), None
        elif basis is not None:
            seed, seed_bound = basis.generators, basis.degree_bound
        else:
            seed, seed_bound = self._seed or (), self._seed_bound
        basis = buchberger(self.generators, degree_bound=degree, grading=self.grading,
                           basis=seed, basis_bound=seed_bound, ring=self.tag)
        self.basis = basis
        self._divisors = [as_divisor(g) for g in basis.generators]
        return basis

    def factor(self, exponent, strategy=Strategy.INCREMENTAL):
        """Exponents a with prod m_i^a_i = x^exponent, or None when x^exponent does not factor."""
        exponent = tuple(exponent)
        if exponent in self._factors:
            return self._factors[exponent]
        self.ensure(sum(exponent), strategy)
        n, s = self.ring.nvars, len(self.leads)
        normal = divide_terms({exponent + (0,) * s: Fraction(1)}, self._divisors, self.tag.key)
        found = None
        if len(normal) == 1:
            (image, coefficient), = normal.items()
            if not any(image[:n]) and coefficient == 1:
                found = image[n:]
        self._factors[exponent] = found
        return found

    def kernel_elements(self):
        """Basis elements in k[y], mapped to the presentation ring."""
        if self.basis is None:
            self.ensure()
        n = self.ring.nvars
        positions = [None] * n + list(range(len(self.leads)))
        kernel = []
        for g in self.basis.generators:
            if all(not any(e[:n]) for e in g._terms):
                kernel.append(g.embed(self.presentation, positions))
        return kernel

    def graded_degree(self, h):
        """Degree of a presentation-ring polynomial under deg y_i = deg m_i."""
        return _graded_degree(h.lead_monomial(), self.degrees)


def kernel_generators(monomials, ambient_initial_ideal=(), ring=None,
                      symbol=DEFAULT_GENERATOR_SYMBOL):
    """
    Generators of the kernel of y_i -> monomials[i], modulo the ambient initial ideal

    Args:
        monomials (list): Terms whose monomials are the images of y_i
        ambient_initial_ideal (list): Terms generating in(I), empty for polynomial rings
        ring (PolyRing): Ambient ring whose order breaks ties on x (default: GRevLex)
        symbol (str): Presentation variable symbol

    Returns:
        list: Polynomials in the presentation ring
    """
    exponents = [t.exponent for t in monomials]
    if not exponents:
        return []
    if ring is None:
        ring = PolyRing([f"x_{i + 1}" for i in range(len(exponents[0]))], GRevLex())
    initial = [t.exponent for t in ambient_initial_ideal] or None
    tag = TagIdeal(ring, exponents, symbol, initial_ideal=initial)
    tag.ensure()
    return tag.kernel_elements()
