"""
Subalgebra (SAGBI) bases
Subrings, subduction, the degree-by-degree completion loop with resumable
computation objects, and certification.
"""

import dataclasses
from dataclasses import dataclass
from enum import Enum

from .errors import DomainError, InvalidInputError
from .groebner import (
    DEFAULT_GENERATOR_SYMBOL,
    Strategy,
    TagIdeal,
    presentation_ring,
)
from .polynomials import Polynomial, evaluate_map, format_listing
from .progress import ProgressLog

DEFAULT_LIMIT = 20
MASTER_SWITCH_THRESHOLD = 2


class SubductionMethod(Enum):
    """Accepted for compatibility; both names run the same subduction engine."""

    TOP = "top"
    ENGINE = "engine"


@dataclass(frozen=True)
class SagbiOptions:
    limit: int = DEFAULT_LIMIT
    strategy: Strategy = Strategy.MASTER
    subduction_method: SubductionMethod = SubductionMethod.TOP
    auto_subduce: bool = True
    auto_subduce_on_partial_completion: bool = False
    print_level: int = 0
    recompute: bool = False
    renew_options: bool = False

    def __post_init__(self):
        if isinstance(self.strategy, str):
            object.__setattr__(self, "strategy", _enum_value(Strategy, self.strategy))
        if isinstance(self.subduction_method, str):
            object.__setattr__(self, "subduction_method",
                               _enum_value(SubductionMethod, self.subduction_method))
        if not isinstance(self.limit, int) or isinstance(self.limit, bool) or self.limit < 1:
            raise InvalidInputError(f"Limit must be a positive integer, got {self.limit!r}")
        if not isinstance(self.print_level, int) or self.print_level < 0:
            raise InvalidInputError(f"PrintLevel must be a non-negative integer, got {self.print_level!r}")

    def replace(self, **changes):
        return dataclasses.replace(self, **changes)

    def for_resume(self, stored):
        """Options of a resumed run: stored ones unless renewed; Limit and PrintLevel always fresh."""
        if self.renew_options:
            return self.replace(recompute=False, renew_options=False)
        return stored.replace(limit=self.limit, print_level=self.print_level,
                              recompute=False, renew_options=False)


def _enum_value(kind, text):
    for member in kind:
        if member.value == text.lower() or member.name.lower() == text.lower():
            return member
    choices = ", ".join(m.value for m in kind)
    raise InvalidInputError(f"unknown {kind.__name__} '{text}' (choose from {choices})")


class Subring:
    """A finitely generated subalgebra of a polynomial ring or quotient ring."""

    def __init__(self, ambient_ring, generators, generator_symbol=DEFAULT_GENERATOR_SYMBOL):
        self.ambient_ring = ambient_ring
        self.generators = tuple(generators)
        self.generator_symbol = generator_symbol
        # Furthest-advanced computation object
        self.cache = None
        self._graph = None
        self._presentation = None

    @property
    def ring(self):
        return self.ambient_ring

    @property
    def presentation_ring(self):
        if self._presentation is None:
            degrees = [sum(g.lead_monomial()) for g in self.generators]
            self._presentation = presentation_ring(len(self.generators), degrees,
                                                   self.generator_symbol)
        return self._presentation

    def offer(self, basis):
        """Cache a computation object if it supersedes the current one."""
        if basis.subring is not self:
            return False
        if basis.supersedes(self.cache):
            self.cache = basis
            return True
        return False

    def __len__(self):
        return len(self.generators)

    def __str__(self):
        return f"subring of {self.ambient_ring.name} with {len(self.generators)} generators"

    def __repr__(self):
        return f"Subring({format_listing(self.generators)})"


class SAGBIBasis:
    """Resumable state of a subalgebra basis computation."""

    def __init__(self, subring, sagbi_gens, processed_degree, complete, options,
                 reduction_gb=None, pending_flagged=False):
        self.subring = subring
        self.sagbi_gens = list(sagbi_gens)
        self.processed_degree = processed_degree
        self.complete = complete
        self.options = options
        self.reduction_gb = reduction_gb
        self.pending_flagged = pending_flagged
        self._subductor = None
        self._presentation = None

    @property
    def limit(self):
        return self.options.limit

    @property
    def ring(self):
        return self.subring.ambient_ring

    def gens(self):
        return list(self.sagbi_gens)

    @property
    def presentation_ring(self):
        """Presentation ring over the basis elements, named by the subring's symbol."""
        if self._presentation is None:
            degrees = [sum(g.lead_monomial()) for g in self.sagbi_gens]
            self._presentation = presentation_ring(len(self.sagbi_gens), degrees,
                                                   self.subring.generator_symbol)
        return self._presentation

    def subductor(self):
        if self._subductor is None:
            self._subductor = Subductor(self.sagbi_gens)
        return self._subductor

    def supersedes(self, other):
        if other is None:
            return True
        if self.complete != other.complete:
            return self.complete
        return self.processed_degree > other.processed_degree

    def __str__(self):
        prefix = "" if self.complete else "Partial "
        return (f"{prefix}SAGBIBasis Computation Object with {len(self.sagbi_gens)} generators, "
                f"Limit = {self.limit}.")

    def __repr__(self):
        return f"<{self}>"


def make_subring(gens, generator_symbol=None):
    """Subring generated by gens; constants, zeros and duplicates are dropped."""
    gens = list(gens)
    if not gens:
        raise InvalidInputError("a subring needs at least one generator")
    for g in gens:
        if not isinstance(g, Polynomial):
            raise InvalidInputError(f"generator {g!r} is not a polynomial")
        g._check(gens[0])
    kept = []
    for g in gens:
        if g and not g.is_constant() and g not in kept:
            kept.append(g)
    if not kept:
        raise InvalidInputError("all generators are constant; the subring is just the coefficient field")
    return Subring(gens[0].ring, kept, generator_symbol or DEFAULT_GENERATOR_SYMBOL)


class Subductor:
    """Subduction against a frozen list of generators."""

    def __init__(self, gens, tag=None, strategy=Strategy.INCREMENTAL, log=None):
        self.gens = [g for g in gens if g and not g.is_constant()]
        self.strategy = strategy
        self.log = log
        self._powers = {}
        self._products = {}
        self.tag = tag
        if self.tag is None and self.gens:
            self.tag = TagIdeal(self.gens[0].ring, [g.lead_monomial() for g in self.gens])

    def product(self, exponents):
        """prod g_i^a_i, cached."""
        if exponents in self._products:
            return self._products[exponents]
        ring = self.gens[0].ring
        result = ring.one()
        for i, a in enumerate(exponents):
            if a:
                if (i, a) not in self._powers:
                    self._powers[(i, a)] = self.gens[i] ** a
                result = result * self._powers[(i, a)]
        self._products[exponents] = result
        return result

    def subduct(self, f, record=None):
        """
        Remainder of f after repeatedly removing lead terms that factor over the generator leads

        Args:
            f (Polynomial): Polynomial to subduct
            record (dict): Filled with exponent vector a -> coefficient of prod g_i^a_i

        Returns:
            Polynomial: r with f - r in the generated algebra
        """
        if not self.gens:
            return f
        f._check(self.gens[0])
        ring = f.ring
        work = f
        remainder = {}
        tracing = self.log is not None and self.log.enabled(2)
        while work:
            exponent, coefficient = work.terms[0]
            factors = self.tag.factor(exponent, self.strategy)
            if factors is None:
                remainder[exponent] = coefficient
                rest = dict(work._terms)
                del rest[exponent]
                work = Polynomial(ring, rest, normal=True)
                continue
            product = self.product(factors)
            if product.lead_monomial() != exponent:
                raise DomainError("factorization does not reproduce the lead monomial")
            scale = coefficient / product.lead_coefficient()
            work = work - product.scale(scale)
            if record is not None:
                record[factors] = record.get(factors, 0) + scale
            if tracing:
                self.log.emit(2, "SUBDUCT", f"{_term_text(ring, exponent)} = "
                                            f"{_term_text(self.tag.presentation, factors)}")
        return Polynomial(ring, remainder, normal=True)


def _term_text(ring, exponent):
    return str(ring.monomial(exponent))


def subduct(gens, f):
    """Subduction remainder of f against gens."""
    return Subductor(gens).subduct(f)


def subduct_all(gens, polys):
    """Subduct every polynomial of a list against the same generators."""
    subductor = Subductor(gens)
    return [subductor.subduct(f) for f in polys]


def auto_subduce(gens, log=None):
    """Subduct each generator against the others, largest lead first, until no lead moves; zeros are dropped."""
    current = _monic_distinct(gens)
    if not current:
        return []
    key = current[0].ring.key
    while True:
        leads = [g.lead_monomial() for g in current]
        order = sorted(range(len(current)), key=lambda i: key(leads[i]), reverse=True)
        for i in order:
            others = [g for j, g in enumerate(current) if j != i and g is not None]
            remainder = Subductor(others).subduct(current[i])
            if remainder:
                current[i] = remainder.monic()
            else:
                current[i] = None
                if log is not None:
                    log.emit(2, "SUBDUCT", "dropped a redundant generator")
        current = [g for g in current if g is not None]
        if [g.lead_monomial() for g in current] == leads:
            return current


def _monic_distinct(gens):
    result = []
    for g in gens:
        if g and not g.is_constant():
            g = g.monic()
            if g not in result:
                result.append(g)
    return result


class _Completion:
    """One run of the completion loop, from scratch or resumed."""

    def __init__(self, subring, options, log, start=None):
        self.subring = subring
        self.options = options
        self.log = log
        if start is not None:
            self.gens = list(start.sagbi_gens)
            self.degree = start.processed_degree
        else:
            self.gens = _monic_distinct(subring.generators)
            if options.auto_subduce:
                self.gens = auto_subduce(self.gens, log)
            self.degree = 0
        self.tag = TagIdeal(subring.ambient_ring, [g.lead_monomial() for g in self.gens])
        self.settled = set()
        self.previous_added = 0
        self._subductor = None

    def _strategy(self):
        strategy = self.options.strategy
        if strategy is Strategy.MASTER:
            if self.previous_added >= MASTER_SWITCH_THRESHOLD:
                return Strategy.DEGREE_BY_DEGREE
            return Strategy.INCREMENTAL
        return strategy

    def _subductor_for(self, strategy):
        if self._subductor is None:
            self._subductor = Subductor(self.gens, self.tag, strategy, self.log)
        self._subductor.strategy = strategy
        return self._subductor

    def _lift_and_subduct(self, kernel, strategy):
        subductor = self._subductor_for(strategy)
        remainders = []
        for h in kernel:
            if h in self.settled:
                continue
            remainder = subductor.subduct(evaluate_map(h, self.gens))
            if remainder:
                remainders.append(remainder)
            else:
                self.settled.add(h)
        return remainders

    def _absorb(self, remainders):
        """Append new generators, largest lead first; returns the ones added."""
        if not remainders:
            return []
        key = self.subring.ambient_ring.key
        accepted = []
        for r in sorted(remainders, key=lambda p: key(p.lead_monomial()), reverse=True):
            r = r.monic()
            twin = next((a for a in accepted if a.lead_monomial() == r.lead_monomial()), None)
            while twin is not None:
                r = Subductor(self.gens + accepted).subduct(r - twin)
                if not r:
                    break
                r = r.monic()
                twin = next((a for a in accepted if a.lead_monomial() == r.lead_monomial()), None)
            if r:
                accepted.append(r)
        if not accepted:
            return []
        self.gens = self.gens + accepted
        self.tag = self.tag.extended([a.lead_monomial() for a in accepted])
        self.settled = set()
        self._subductor = None
        lowest = min(sum(a.lead_monomial()) for a in accepted)
        self.degree = min(self.degree, lowest)
        return accepted

    def _inter_subduce(self):
        reduced = auto_subduce(self.gens, self.log)
        if reduced == self.gens:
            return
        self.log.emit(1, "SAGBI", f"inter-subduction left {len(reduced)} generators")
        self.gens = reduced
        self.tag = TagIdeal(self.subring.ambient_ring, [g.lead_monomial() for g in reduced])
        self.settled = set()
        self._subductor = None
        self.degree = 0

    def run(self):
        limit = self.options.limit
        complete = False
        self.log.emit(1, "SAGBI", f"{len(self.gens)} generators, processed degree {self.degree}, "
                                  f"Limit = {limit}", self.degree, len(self.gens))
        while True:
            target = self.degree + 1
            strategy = self._strategy()
            basis = self.tag.ensure(min(target, limit), strategy)
            if not basis.complete and target > limit:
                # certification pass
                basis = self.tag.ensure(None, strategy)
            kernel = self.tag.kernel_elements()
            if basis.complete:
                ahead = [self.tag.graded_degree(h) for h in kernel
                         if self.tag.graded_degree(h) >= target]
                if not ahead:
                    leftovers = self._lift_and_subduct(kernel, strategy)
                    if not leftovers:
                        complete = True
                        break
                    added = self._absorb(leftovers)
                    self.log.emit(1, "SAGBI", f"certification added {len(added)} generator(s), "
                                              f"{len(self.gens)} total", self.degree, len(self.gens))
                    self.previous_added = len(added)
                    continue
                target = min(ahead)
            if target > limit:
                self.degree = limit
                break
            current = [h for h in kernel if self.tag.graded_degree(h) == target]
            remainders = self._lift_and_subduct(current, strategy)
            self.degree = target
            added = self._absorb(remainders)
            self.log.emit(1, "SAGBI", f"degree {target}: {len(current)} S-polynomial(s), "
                                      f"{len(added)} new generator(s), {len(self.gens)} total",
                          target, len(self.gens))
            if not added and self.options.auto_subduce_on_partial_completion:
                self._inter_subduce()
            self.previous_added = len(added)
        if complete:
            self.log.emit(1, "SAGBI", f"complete: {len(self.gens)} generators certified",
                          self.degree, len(self.gens))
        else:
            self.log.emit(1, "SAGBI", f"stopped at Limit = {limit} with {len(self.gens)} generators",
                          self.degree, len(self.gens))
        return SAGBIBasis(self.subring, self.gens, self.degree, complete, self.options,
                          reduction_gb=self.tag.basis, pending_flagged=not complete)


def sagbi(source, options=None, log=None):
    """
    Compute (or resume) a subalgebra basis

    Args:
        source: Subring, SAGBIBasis, or list of polynomials
        options (SagbiOptions): Computation options (default: SagbiOptions())
        log (ProgressLog): Trace destination (default: console at options.print_level)

    Returns:
        SAGBIBasis: complete, or partial when the Limit was reached first
    """
    options = options or SagbiOptions()
    if isinstance(source, SAGBIBasis):
        subring, start = source.subring, source
    elif isinstance(source, Subring):
        subring, start = source, source.cache
    else:
        subring, start = make_subring(list(source)), None
    if options.recompute:
        start = None
    run_options = options if start is None else options.for_resume(start.options)
    if log is None:
        log = ProgressLog(run_options.print_level)
    elif log.print_level != run_options.print_level:
        log = log.child(run_options.print_level)

    if start is not None and (start.complete or start.processed_degree >= run_options.limit):
        log.emit(1, "SAGBI", f"reusing {start}", start.processed_degree, len(start.sagbi_gens))
        return start

    result = _Completion(subring, run_options, log, start).run()
    subring.offer(result)
    return result


def _certify(gens, log=None):
    """(verdict, tag basis): verdict is True when every lifted kernel generator subducts to zero."""
    ring = gens[0].ring
    tag = TagIdeal(ring, [g.lead_monomial() for g in gens])
    tag.ensure()
    subductor = Subductor(gens, tag, Strategy.INCREMENTAL, log)
    for h in tag.kernel_elements():
        if subductor.subduct(evaluate_map(h, gens)):
            if log is not None:
                log.emit(1, "CHECK", f"kernel element {h} does not subduct to 0")
            return False, tag.basis
    return True, tag.basis


def is_sagbi(source, log=None):
    """Certify that the generators of a computation object (or subring) form a subalgebra basis."""
    if isinstance(source, SAGBIBasis):
        basis = source
    elif isinstance(source, Subring):
        basis = source.cache
        if basis is None:
            gens = _monic_distinct(source.generators)
            verdict, reduction_gb = _certify(gens, log)
            if verdict:
                top = max(sum(g.lead_monomial()) for g in gens)
                options = SagbiOptions()
                source.offer(SAGBIBasis(source, gens, min(top, options.limit), True, options,
                                        reduction_gb=reduction_gb))
            return verdict
    else:
        raise InvalidInputError(f"cannot certify {source!r}")
    if basis.complete:
        return True
    verdict, reduction_gb = _certify(basis.sagbi_gens, log)
    if verdict:
        basis.complete = True
        basis.pending_flagged = False
        basis.reduction_gb = reduction_gb
        basis.subring.offer(basis)
    return verdict


def subalgebra_basis(source, options=None, log=None):
    """Generators of the (possibly partial) subalgebra basis."""
    return sagbi(source, options, log).gens()


__all__ = [
    "DEFAULT_LIMIT", "SAGBIBasis", "SagbiOptions", "Strategy", "SubductionMethod",
    "Subductor", "Subring", "auto_subduce", "is_sagbi", "make_subring", "sagbi",
    "subalgebra_basis", "subduct", "subduct_all",
]
