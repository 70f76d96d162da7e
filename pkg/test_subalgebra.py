#!/usr/bin/env python3
"""
Subalgebra basis tests
Subduction, auto-subduction, the completion loop, resume and certification.
"""

import io
import sys
from fractions import Fraction

import pytest

from sagbi.errors import InvalidInputError, RingMismatchError
from sagbi.groebner import Strategy
from sagbi.polynomials import PolyRing, evaluate_map
from sagbi.progress import ProgressLog
from sagbi.subalgebra import (
    DEFAULT_LIMIT,
    SAGBIBasis,
    SagbiOptions,
    SubductionMethod,
    Subductor,
    auto_subduce,
    is_sagbi,
    make_subring,
    sagbi,
    subalgebra_basis,
    subduct,
    subduct_all,
)


def power_sums():
    R = PolyRing(["x_1", "x_2", "x_3"])
    return make_subring([R.coerce("x_1+x_2+x_3"),
                         R.coerce("x_1^2+x_2^2+x_3^2"),
                         R.coerce("x_1^3+x_2^3+x_3^3")])


def infinite_example():
    R = PolyRing(["x_1", "x_2"])
    return make_subring([R.coerce("x_1+x_2"), R.coerce("x_1*x_2"), R.coerce("x_1*x_2^2")])


def resume_example():
    R = PolyRing(["x", "y"])
    return make_subring([R.coerce("x+y"), R.coerce("x^6"), R.coerce("y^6")])


def _strings(polys):
    return [str(p) for p in polys]


def test_subduction_leaves_the_non_factoring_terms():
    R = PolyRing(["x", "y"])
    gens = [R.coerce("x^2+x"), R.coerce("y^2+1")]
    remainder = subduct(gens, R.coerce("x^2*y^2+x^3*y"))
    assert str(remainder) == "x^3*y-x*y^2"


def test_subduction_records_coefficients():
    R = PolyRing(["x", "y"])
    gens = [R.coerce("x+y"), R.coerce("x*y")]
    f = R.coerce("x^2+y^2+x")
    record = {}
    remainder = Subductor(gens).subduct(f, record)
    assert str(remainder) == "-y"
    P = PolyRing(["p_1", "p_2"])
    q = P.polynomial(record)
    assert evaluate_map(q, gens) + remainder == f


def test_subduction_without_generators_returns_the_input():
    R = PolyRing(["x"])
    assert subduct([], R.coerce("x+5")) == R.coerce("x+5")
    assert subduct_all([R.coerce("x^2")], [R.coerce("x^4+1"), R.coerce("x")]) == [R.zero(), R.variable("x")]


def test_subduction_rejects_foreign_polynomials():
    R = PolyRing(["x", "y"])
    T = PolyRing(["u", "v"])
    with pytest.raises(RingMismatchError):
        subduct([R.variable("x")], T.variable("u"))


def test_auto_subduce_replaces_redundant_power():
    A = resume_example()
    R = A.ambient_ring
    reduced = auto_subduce(A.generators)
    assert len(reduced) == 3
    assert [g.lead_monomial() for g in reduced] == [(1, 0), (5, 1), (0, 6)]
    expected = R.coerce("6*x^5*y+15*x^4*y^2+20*x^3*y^3+15*x^2*y^4+6*x*y^5")
    assert reduced[1] * 6 == expected


def test_auto_subduce_drops_dependent_generators():
    R = PolyRing(["x", "y"])
    reduced = auto_subduce([R.coerce("x+y"), R.coerce("x^2+2*x*y+y^2"), R.coerce("2*x+2*y")])
    assert reduced == [R.coerce("x+y")]


def test_power_sums_complete_with_three_generators():
    A = power_sums()
    basis = sagbi(A)
    assert basis.complete
    assert basis.limit == DEFAULT_LIMIT
    assert sorted(g.lead_monomial() for g in basis.sagbi_gens) == [(1, 0, 0), (1, 1, 0), (1, 1, 1)]
    assert _strings(basis.sagbi_gens) == ["x_1+x_2+x_3", "x_1*x_2+x_1*x_3+x_2*x_3", "x_1*x_2*x_3"]
    assert str(basis) == "SAGBIBasis Computation Object with 3 generators, Limit = 20."
    assert A.cache is basis
    assert is_sagbi(basis)
    assert is_sagbi(A)


def test_infinite_initial_algebra_stops_at_limit():
    A = infinite_example()
    basis = sagbi(A, SagbiOptions(limit=7))
    assert not basis.complete
    assert basis.processed_degree == 7
    expected = ["x_1+x_2", "x_1*x_2"] + [f"x_1*x_2^{k}" for k in range(2, 7)]
    assert sorted(_strings(basis.sagbi_gens)) == sorted(expected)
    assert str(basis) == "Partial SAGBIBasis Computation Object with 7 generators, Limit = 7."
    assert not is_sagbi(basis)
    assert subalgebra_basis(A, SagbiOptions(limit=7)) == basis.gens()


def test_strategies_agree():
    results = []
    for strategy in ("degree", "incremental", "master"):
        basis = sagbi(infinite_example(), SagbiOptions(limit=6, strategy=strategy))
        results.append(_strings(basis.sagbi_gens))
    assert results[0] == results[1] == results[2]


def test_resume_matches_fresh_run():
    A = resume_example()
    partial = sagbi(A, SagbiOptions(limit=5))
    assert not partial.complete
    assert partial.processed_degree == 5
    assert str(partial) == "Partial SAGBIBasis Computation Object with 3 generators, Limit = 5."

    resumed = sagbi(A, SagbiOptions(limit=100))
    assert resumed.complete
    assert A.cache is resumed
    assert sorted(g.lead_monomial() for g in resumed.sagbi_gens) == [(0, 6), (1, 0), (5, 1)]

    fresh = sagbi(resume_example(), SagbiOptions(limit=100))
    assert _strings(fresh.sagbi_gens) == _strings(resumed.sagbi_gens)


def test_complete_object_is_returned_unchanged():
    A = power_sums()
    first = sagbi(A)
    assert sagbi(A, SagbiOptions(limit=50)) is first
    assert sagbi(first) is first
    again = sagbi(A, SagbiOptions(recompute=True))
    assert again is not first
    assert _strings(again.sagbi_gens) == _strings(first.sagbi_gens)


def test_lower_limit_reuses_the_cached_object():
    A = infinite_example()
    deeper = sagbi(A, SagbiOptions(limit=6))
    assert sagbi(A, SagbiOptions(limit=4)) is deeper
    assert A.cache is deeper


def test_resume_keeps_stored_options_unless_renewed():
    stored = SagbiOptions(limit=5, strategy="degree", auto_subduce=False)
    request = SagbiOptions(limit=50, strategy="incremental", print_level=1)
    resumed = request.for_resume(stored)
    assert resumed.strategy is Strategy.DEGREE_BY_DEGREE
    assert resumed.limit == 50
    assert resumed.print_level == 1
    assert not resumed.auto_subduce
    renewed = request.replace(renew_options=True).for_resume(stored)
    assert renewed.strategy is Strategy.INCREMENTAL
    assert renewed.auto_subduce
    assert not renewed.renew_options


def test_options_validation():
    with pytest.raises(InvalidInputError):
        SagbiOptions(limit=0)
    with pytest.raises(InvalidInputError):
        SagbiOptions(strategy="fastest")
    with pytest.raises(InvalidInputError):
        SagbiOptions(print_level=-1)
    assert SagbiOptions(subduction_method="engine").subduction_method is SubductionMethod.ENGINE
    assert SagbiOptions(strategy="DEGREE_BY_DEGREE").strategy is Strategy.DEGREE_BY_DEGREE


def test_make_subring_cleans_generators():
    R = PolyRing(["x", "y"])
    x, y = R.gens()
    A = make_subring([x, R.constant(3), x, R.zero(), y])
    assert A.generators == (x, y)
    assert str(A) == "subring of R with 2 generators"
    with pytest.raises(InvalidInputError):
        make_subring([])
    with pytest.raises(InvalidInputError):
        make_subring([R.one(), R.constant(2)])


def test_supersede_rule():
    A = infinite_example()
    options = SagbiOptions(limit=9)
    low = SAGBIBasis(A, list(A.generators), 3, False, options)
    high = SAGBIBasis(A, list(A.generators), 5, False, options)
    done = SAGBIBasis(A, list(A.generators), 2, True, options)
    assert A.offer(low)
    assert A.offer(high)
    assert not A.offer(low)
    assert A.offer(done)
    assert not A.offer(high)
    assert A.cache is done
    other = infinite_example()
    assert not other.offer(done)


def test_inter_subduction_on_partial_completion_keeps_result():
    plain = sagbi(power_sums())
    inter = sagbi(power_sums(), SagbiOptions(auto_subduce_on_partial_completion=True))
    assert inter.complete
    assert _strings(inter.sagbi_gens) == _strings(plain.sagbi_gens)


def test_without_auto_subduce_still_completes():
    basis = sagbi(power_sums(), SagbiOptions(auto_subduce=False))
    assert basis.complete
    leads = {g.lead_monomial() for g in basis.sagbi_gens}
    assert {(1, 0, 0), (1, 1, 0), (1, 1, 1)} <= leads
    assert (2, 0, 0) in leads


def test_is_sagbi_on_subring_without_computation():
    R = PolyRing(["x", "y"])
    A = make_subring([R.coerce("x"), R.coerce("2*y")])
    assert is_sagbi(A)
    assert A.cache is not None and A.cache.complete
    assert _strings(A.cache.sagbi_gens) == ["x", "y"]
    B = infinite_example()
    assert not is_sagbi(B)
    assert B.cache is None


def test_progress_trace_reports_rounds():
    stream = io.StringIO()
    log = ProgressLog(1, stream)
    sagbi(infinite_example(), SagbiOptions(limit=5, print_level=1), log)
    lines = stream.getvalue().splitlines()
    assert lines[0].startswith("[SAGBI] 3 generators, processed degree 0")
    assert any(line.startswith("[SAGBI] degree 4:") for line in lines)
    assert lines[-1] == "[SAGBI] stopped at Limit = 5 with 5 generators"


def test_subduction_trace_at_level_two():
    stream = io.StringIO()
    R = PolyRing(["x", "y"])
    gens = [R.coerce("x+y"), R.coerce("x*y")]
    Subductor(gens, log=ProgressLog(2, stream)).subduct(R.coerce("x*y"))
    assert stream.getvalue() == "[SUBDUCT] x*y = p_2\n"


def test_fractional_generators_are_made_monic():
    R = PolyRing(["x"])
    basis = sagbi([R.coerce("3/2*x^2")])
    assert basis.complete
    assert basis.sagbi_gens == [R.coerce("x^2")]
    assert basis.sagbi_gens[0].lead_coefficient() == Fraction(1)


def main():
    from suite_runner import exit_with, run_suite
    exit_with(run_suite("SUBALGEBRA TESTS", sys.modules[__name__]))


if __name__ == "__main__":
    main()
