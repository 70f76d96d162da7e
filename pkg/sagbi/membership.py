"""
Membership and intersection
Normal forms modulo a subalgebra, quotient coefficients, the Groebner
membership test and intersections of two subalgebras.
"""

from .errors import InvalidInputError, RingMismatchError
from .groebner import buchberger, reduce_modulo, tag_ring
from .orders import Blocks, Lex
from .polynomials import PolyRing, Polynomial, evaluate_map, select_in_subring
from .progress import ProgressLog
from .subalgebra import SAGBIBasis, SagbiOptions, Subductor, Subring, make_subring, sagbi

AUXILIARY_VARIABLE = "t"


class IntersectedSubring(Subring):
    """Subring produced by intersecting two subrings; may have no generators at all."""

    def __init__(self, ambient_ring, generators, original_subrings, composite_certified,
                 generator_symbol=None):
        super().__init__(ambient_ring, generators,
                         generator_symbol or original_subrings[0].generator_symbol)
        self.original_subrings = tuple(original_subrings)
        self.composite_certified = composite_certified

    def __str__(self):
        count = len(self.generators)
        if not count:
            return f"QQ, subring of {self.ambient_ring.name}"
        symbol = self.generator_symbol
        return f"QQ[{symbol}_1..{symbol}_{count}], subring of {self.ambient_ring.name}"


class _GraphIdeal:
    """The ideal I + (y_i - g_i) in k[x, y], with the x block eliminated first."""

    def __init__(self, subring):
        ring = subring.ambient_ring
        degrees = [sum(g.lead_monomial()) for g in subring.generators]
        self.subring = subring
        self.nvars = ring.nvars
        self.tag = tag_ring(ring, degrees, subring.generator_symbol)
        self.x_positions = list(range(ring.nvars))
        self.y_positions = [None] * ring.nvars + list(range(len(degrees)))
        gens = []
        for q in ring.quotient_ideal:
            gens.append(q.embed(self.tag, self.x_positions))
        for i, g in enumerate(subring.generators):
            y = self.tag.variable(ring.nvars + i)
            gens.append(y - g.embed(self.tag, self.x_positions))
        self.basis = buchberger(gens, ring=self.tag)
        self._subductor = None

    def subductor(self):
        if self._subductor is None:
            self._subductor = Subductor(self.subring.generators)
        return self._subductor

    def reduce(self, f):
        """Normal form of f (from the ambient ring) modulo the graph ideal."""
        return reduce_modulo(f.embed(self.tag, self.x_positions), self.basis)

    def y_part(self, h):
        """x-free terms of a tag-ring polynomial, in the presentation ring."""
        terms = {e: c for e, c in h._terms.items() if not any(e[:self.nvars])}
        free = Polynomial(self.tag, terms, normal=True)
        return free.embed(self.subring.presentation_ring, self.y_positions)

    def is_x_free(self, h):
        return all(not any(e[:self.nvars]) for e in h._terms)


def _graph_ideal(subring):
    if subring._graph is None:
        subring._graph = _GraphIdeal(subring)
    return subring._graph


def _check_ring(f, ring):
    if not isinstance(f, Polynomial):
        raise InvalidInputError(f"expected a polynomial, got {f!r}")
    if f.ring is not ring and f.ring != ring:
        raise RingMismatchError(f"{f} is not in {ring.describe()}")


def _complete_basis(source):
    if isinstance(source, SAGBIBasis):
        return source
    if source.cache is not None and source.cache.complete:
        return source.cache
    return None


def normal_form(f, source):
    """
    Remainder r of f modulo a subalgebra, with f - r in the subalgebra

    Args:
        f (Polynomial): Polynomial of the ambient ring
        source: Subring or SAGBIBasis

    Returns:
        Polynomial: subduction remainder when a basis is at hand, otherwise the
        remainder read off the graph ideal, subducted against the generators
    """
    _check_ring(f, source.ring if isinstance(source, SAGBIBasis) else source.ambient_ring)
    basis = _complete_basis(source)
    gens = basis.sagbi_gens if basis is not None else source.generators
    if not gens:
        # constants lie in every subalgebra
        return f - f.constant_coefficient()
    if basis is not None:
        return basis.subductor().subduct(f)
    graph = _graph_ideal(source)
    h_y = graph.y_part(graph.reduce(f))
    return graph.subductor().subduct(f - evaluate_map(h_y, source.generators))


def quotient_coefficients(f, source):
    """q with f = q(generators) + normal_form(f), in the presentation ring."""
    if isinstance(source, SAGBIBasis):
        _check_ring(f, source.ring)
        record = {}
        source.subductor().subduct(f, record)
        return source.presentation_ring.polynomial(record)
    _check_ring(f, source.ambient_ring)
    if not source.generators:
        raise InvalidInputError("the subring has no generators to express coefficients over")
    remainder = normal_form(f, source)
    graph = _graph_ideal(source)
    return graph.y_part(graph.reduce(f - remainder))


def groebner_membership_test(f, subring):
    """True when f lies in the subring, decided by the graph ideal."""
    if isinstance(subring, SAGBIBasis):
        subring = subring.subring
    _check_ring(f, subring.ambient_ring)
    if not subring.generators:
        return f.is_constant()
    graph = _graph_ideal(subring)
    return graph.is_x_free(graph.reduce(f))


def _extended_ring(ring):
    name = AUXILIARY_VARIABLE
    while name in ring.variables:
        name = "_" + name
    order = Blocks(((1, Lex()), (ring.nvars, ring.order)))
    names = [name] + list(ring.variables)
    base = PolyRing(names, order, name=ring.name)
    positions = list(range(1, ring.nvars + 1))
    quotient = [q.embed(base, positions) for q in ring.quotient_ideal]
    if not quotient:
        return base, positions
    return PolyRing(names, order, quotient=quotient, name=ring.name), positions


def subring_intersection(first, second, options=None, log=None):
    """
    Intersect two subrings of the same ambient ring

    Args:
        first (Subring): Left operand
        second (Subring): Right operand
        options (SagbiOptions): Options for the auxiliary subalgebra basis computation
        log (ProgressLog): Trace destination

    Returns:
        IntersectedSubring: full when the auxiliary computation completed
    """
    ring = first.ambient_ring
    if second.ambient_ring is not ring and second.ambient_ring != ring:
        raise RingMismatchError("subrings live in different rings: "
                                f"{ring.describe()} and {second.ambient_ring.describe()}")
    options = options or SagbiOptions()
    log = log or ProgressLog(options.print_level)
    extended, positions = _extended_ring(ring)
    t = extended.variable(0)
    gens = [t * f.embed(extended, positions) for f in first.generators]
    gens += [(1 - t) * g.embed(extended, positions) for g in second.generators]
    gens.append(t)
    log.emit(1, "INTERSECT", f"auxiliary subring with {len(gens)} generators")
    composite = sagbi(make_subring(gens), options.replace(recompute=False, renew_options=False), log)
    back = [None] + list(range(ring.nvars))
    kept = []
    for h in select_in_subring(1, composite.sagbi_gens):
        image = h.embed(ring, back).monic()
        if image and not image.is_constant() and image not in kept:
            kept.append(image)
    result = IntersectedSubring(ring, kept, (first, second), composite.complete)
    if composite.complete:
        result.cache = SAGBIBasis(result, kept, composite.processed_degree, True, options)
    log.emit(1, "INTERSECT", f"{len(kept)} generators, full intersection: "
                             f"{str(composite.complete).lower()}", composite.processed_degree, len(kept))
    return result


def is_full_intersection(subring):
    """True when the intersection was certified to be complete."""
    if not isinstance(subring, IntersectedSubring):
        raise InvalidInputError(f"{subring} is not an intersection")
    return subring.composite_certified


__all__ = [
    "IntersectedSubring", "groebner_membership_test", "is_full_intersection",
    "normal_form", "quotient_coefficients", "subring_intersection",
]
