#!/usr/bin/env python3
"""
Randomized property tests
Subduction soundness, initial algebras and membership checked against
linear algebra on graded pieces, resume determinism and round trips.
"""

import random
import sys
from fractions import Fraction
from itertools import combinations_with_replacement

import pytest

from sagbi.membership import groebner_membership_test, normal_form
from sagbi.parser import parse_polynomial
from sagbi.polynomials import PolyRing
from sagbi.state import load_state, save_state
from sagbi.subalgebra import SAGBIBasis, SagbiOptions, Subductor, Subring, make_subring, sagbi

try:
    import sympy
    from sympy.polys.matrices import DomainMatrix
    SYMPY_AVAILABLE = True
except ImportError:
    SYMPY_AVAILABLE = False

needs_sympy = pytest.mark.skipif(not SYMPY_AVAILABLE, reason="sympy not installed")


def random_coefficient(rng):
    return Fraction(rng.choice([-3, -2, -1, 1, 2, 3]), rng.randint(1, 3))


def random_polynomial(rng, ring, max_terms=4, max_degree=3):
    terms = {}
    for _ in range(rng.randint(1, max_terms)):
        exponent = [0] * ring.nvars
        for _ in range(rng.randint(0, max_degree)):
            exponent[rng.randrange(ring.nvars)] += 1
        terms[tuple(exponent)] = random_coefficient(rng)
    return ring.polynomial(terms)


def monomials_of_degree(nvars, degree):
    """Exponent vectors of total degree degree, in a fixed order."""
    vectors = []
    for chosen in combinations_with_replacement(range(nvars), degree):
        exponent = [0] * nvars
        for i in chosen:
            exponent[i] += 1
        vectors.append(tuple(exponent))
    return vectors


def random_homogeneous(rng, ring, degree):
    terms = {}
    for exponent in monomials_of_degree(ring.nvars, degree):
        if rng.random() < 0.6:
            terms[exponent] = random_coefficient(rng)
    if not terms:
        terms[(degree,) + (0,) * (ring.nvars - 1)] = Fraction(1)
    return ring.polynomial(terms)


def random_generators(rng, ring, count, max_degree=3):
    """Non-constant generators with pairwise distinct lead monomials."""
    gens = []
    while len(gens) < count:
        g = random_polynomial(rng, ring, max_degree=max_degree)
        if g.is_constant():
            continue
        if any(g.lead_monomial() == h.lead_monomial() for h in gens):
            continue
        gens.append(g)
    return gens


def homogeneous_instance(rng, ring):
    count = rng.randint(2, 3)
    gens = []
    while len(gens) < count:
        g = random_homogeneous(rng, ring, rng.randint(1, 3))
        if g.monic() not in [h.monic() for h in gens]:
            gens.append(g)
    return gens


def exponent_vectors(degrees, target):
    """Exponent vectors a with sum a_i * degrees[i] == target."""
    if not degrees:
        if target == 0:
            yield ()
        return
    first, rest = degrees[0], degrees[1:]
    for a in range(target // first + 1):
        for tail in exponent_vectors(rest, target - a * first):
            yield (a,) + tail


def graded_products(gens, degree):
    ring = gens[0].ring
    degrees = [g.total_degree() for g in gens]
    products = []
    for vector in exponent_vectors(degrees, degree):
        p = ring.one()
        for g, a in zip(gens, vector):
            p = p * g ** a
        products.append(p)
    return products


def graded_rank(polys, degree):
    """Rank of the coefficient matrix of homogeneous polys of one degree, over QQ."""
    if not polys:
        return 0
    monomials = monomials_of_degree(polys[0].ring.nvars, degree)
    rows = [[sympy.Rational(c.numerator, c.denominator)
             for c in (Fraction(p.coefficient(m)) for m in monomials)] for p in polys]
    return DomainMatrix.from_list_sympy(len(rows), len(monomials), rows).to_field().rank()


def semigroup_monomials(leads, degree):
    """Monomials of the given total degree in the monoid generated by leads."""
    layers = {0: {(0,) * len(leads[0])}}
    for d in range(1, degree + 1):
        layer = set()
        for lead in leads:
            step = sum(lead)
            if step <= d:
                for m in layers[d - step]:
                    layer.add(tuple(x + y for x, y in zip(m, lead)))
        layers[d] = layer
    return layers[degree]


def test_subduction_is_sound():
    rng = random.Random(11)
    R = PolyRing(["x", "y", "z"])
    for _ in range(100):
        gens = random_generators(rng, R, rng.randint(1, 3))
        f = random_polynomial(rng, R, max_terms=5, max_degree=5)
        subductor = Subductor(gens)
        record = {}
        r = subductor.subduct(f, record)
        expansion = R.zero()
        for exponents, coefficient in record.items():
            expansion = expansion + subductor.product(exponents).scale(coefficient)
        assert expansion + r == f
        for exponent, _ in r.terms:
            assert subductor.tag.factor(exponent, subductor.strategy) is None


@needs_sympy
def test_initial_algebra_matches_graded_ranks():
    rng = random.Random(2024)
    rings = [PolyRing(["x", "y"]), PolyRing(["x", "y", "z"])]
    for case in range(100):
        R = rings[case % 2]
        gens = homogeneous_instance(rng, R)
        basis = sagbi(make_subring(gens), SagbiOptions(limit=8))
        leads = [g.lead_monomial() for g in basis.sagbi_gens]
        top = 8 if basis.complete else min(8, basis.processed_degree)
        for degree in range(1, top + 1):
            rank = graded_rank(graded_products(gens, degree), degree)
            assert len(semigroup_monomials(leads, degree)) == rank


@needs_sympy
def test_membership_matches_graded_ranks():
    rng = random.Random(99)
    R = PolyRing(["x", "y"])
    for _ in range(100):
        gens = homogeneous_instance(rng, R)
        A = make_subring(gens)
        degree = rng.randint(2, 5)
        products = graded_products(gens, degree)
        if products and rng.random() < 0.5:
            f = R.zero()
            for p in products:
                f = f + p.scale(random_coefficient(rng))
        else:
            f = random_homogeneous(rng, R, degree)
        if f.is_zero():
            continue
        rank = graded_rank(products, degree)
        extended = graded_rank(products + [f], degree)
        assert groebner_membership_test(f, A) == (rank == extended)


def test_graph_ideal_normal_form_matches_subduction():
    rng = random.Random(31)
    R = PolyRing(["x", "y"])
    checked = 0
    for _ in range(150):
        gens = [random_homogeneous(rng, R, 1) + random_polynomial(rng, R, max_degree=0),
                random_polynomial(rng, R, max_terms=4, max_degree=2) + R.variable("x") ** 2]
        basis = sagbi(make_subring(gens), SagbiOptions(limit=8))
        if not basis.complete:
            continue
        checked += 1
        f = random_polynomial(rng, R, max_terms=5, max_degree=5)
        assert normal_form(f, make_subring(basis.sagbi_gens)) == normal_form(f, basis)
    assert checked >= 100


def test_resume_reaches_the_same_generators():
    rng = random.Random(5)
    R = PolyRing(["x", "y"])
    for _ in range(100):
        gens = homogeneous_instance(rng, R)
        first = rng.randint(1, 4)
        final = first + rng.randint(1, 3)
        partial = sagbi(make_subring(gens), SagbiOptions(limit=first))
        resumed = sagbi(partial, SagbiOptions(limit=final))
        fresh = sagbi(make_subring(gens), SagbiOptions(limit=final))
        assert resumed.processed_degree <= final
        assert len(resumed.sagbi_gens) == len(fresh.sagbi_gens)
        assert set(resumed.sagbi_gens) == set(fresh.sagbi_gens)
        again = sagbi(partial, SagbiOptions(limit=final))
        assert again.sagbi_gens == resumed.sagbi_gens


def test_printed_polynomials_parse_back():
    rng = random.Random(3)
    R = PolyRing(["x_1", "x_2", "y"])
    for _ in range(200):
        f = random_polynomial(rng, R, max_terms=6, max_degree=4)
        assert parse_polynomial(str(f), R) == f


def test_constructed_objects_survive_a_state_file(tmp_path):
    rng = random.Random(17)
    R = PolyRing(["a", "b", "c"])
    for case in range(100):
        sagbi_gens = [g.monic() for g in random_generators(rng, R, rng.randint(1, 4))]
        subring_gens = [g.scale(rng.randint(1, 5)) for g in sagbi_gens[:2]]
        limit = rng.randint(1, 30)
        options = SagbiOptions(limit=limit, strategy=rng.choice(["degree", "incremental", "master"]),
                               auto_subduce=rng.random() < 0.5)
        subring = Subring(R, subring_gens, rng.choice(["p", "g", "q"]))
        basis = SAGBIBasis(subring, sagbi_gens, rng.randint(0, limit), rng.random() < 0.5, options)
        path = tmp_path / f"state_{case}.csv"
        save_state(basis, path)
        loaded = load_state(path)
        assert loaded.sagbi_gens == basis.sagbi_gens
        assert list(loaded.subring.generators) == list(subring_gens)
        assert loaded.subring.generator_symbol == subring.generator_symbol
        assert loaded.processed_degree == basis.processed_degree
        assert loaded.complete == basis.complete
        assert loaded.options == options


def main():
    from suite_runner import exit_with, run_suite
    exit_with(run_suite("PROPERTY TESTS", sys.modules[__name__]))


if __name__ == "__main__":
    main()
