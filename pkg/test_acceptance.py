#!/usr/bin/env python3
"""
End-to-end examples
Quotient rings, translational invariants of screws, a Cox-Nagata ring and
the Grassmannian Gr(3,6) under a matching-field weight.
"""

import io
import os
import sys
from pathlib import Path

import pytest

from sagbi.errors import InvalidInputError
from sagbi.families import grassmannian_ring, pluecker_minors, screws_generators
from sagbi.membership import groebner_membership_test
from sagbi.orders import Lex
from sagbi.polynomials import PolyRing, select_in_subring
from sagbi.subalgebra import SagbiOptions, is_sagbi, make_subring, sagbi
from sagbi_cli import EXIT_OK, CliConfig, run

SESSIONS = Path(__file__).resolve().parent / "sessions"
EXTENDED = os.environ.get("SAGBI_EXTENDED") == "1"

COX_NAGATA_GENERATORS = (
    "x_1", "x_2", "x_3", "x_4", "x_5", "x_6",
    "y_3*x_5*x_6 + x_3*y_5*x_6 - x_3*x_5*y_6",
    "y_2*x_4*x_6 - x_2*y_4*x_6 + x_2*x_4*y_6",
    "y_1*x_4*x_5 + x_1*y_4*x_5 - x_1*x_4*y_5",
    "y_1*x_2*x_3 + x_1*y_2*x_3 + x_1*x_2*y_3",
    "y_2*x_3*x_4*x_5 + x_2*y_3*x_4*x_5 - x_2*x_3*y_4*x_5 + x_2*x_3*x_4*y_5",
    "y_1*x_3*x_4*x_6 + x_1*y_3*x_4*x_6 + x_1*x_3*y_4*x_6 - x_1*x_3*x_4*y_6",
    "y_1*x_2*x_5*x_6 + x_1*y_2*x_5*x_6 - x_1*x_2*y_5*x_6 + x_1*x_2*x_5*y_6",
)


def _monic_set(polys):
    return {p.monic() for p in polys}


def test_quotient_ring_of_determinant_one_matrices():
    names = ["a", "b", "c", "d", "u_1", "u_2", "u_3", "v_1", "v_2", "v_3"]
    S = PolyRing(names, Lex(), quotient=["a*d-b*c-1"], name="S")
    gens = []
    for i in (1, 2, 3):
        gens += [S.coerce(f"a*u_{i}+b*v_{i}"), S.coerce(f"c*u_{i}+d*v_{i}")]
    A = make_subring(gens)
    basis = sagbi(A)
    assert basis.complete
    expected = [S.coerce(f"c*u_{i}+d*v_{i}") for i in (1, 2, 3)]
    expected += [S.coerce(f"a*u_{i}+b*v_{i}") for i in (1, 2, 3)]
    expected += [S.coerce(f"u_{i}*v_{j}-u_{j}*v_{i}") for i, j in ((1, 2), (1, 3), (2, 3))]
    assert len(basis.sagbi_gens) == 9
    assert _monic_set(basis.sagbi_gens) == _monic_set(expected)
    assert is_sagbi(A)


def test_screw_invariants_are_the_t_free_basis_elements():
    ring, gens = screws_generators(1)
    A = make_subring(gens)
    basis = sagbi(A)
    assert basis.complete
    assert is_sagbi(basis)
    invariants = select_in_subring(1, basis.sagbi_gens)
    expected = [ring.coerce(text) for text in ("w_3", "w_2", "w_1", "w_1*v_1+w_2*v_2+w_3*v_3")]
    assert _monic_set(invariants) == _monic_set(expected)
    for g in invariants:
        assert groebner_membership_test(g, A)


def test_cox_nagata_generators_already_form_a_basis():
    names = [f"x_{i}" for i in range(1, 7)] + [f"y_{i}" for i in range(1, 7)]
    R = PolyRing(names)
    RG = make_subring([R.coerce(text) for text in COX_NAGATA_GENERATORS])
    assert is_sagbi(RG)
    assert RG.cache is not None and RG.cache.complete
    assert len(RG.cache.sagbi_gens) == 13
    assert _monic_set(RG.cache.sagbi_gens) == _monic_set(RG.generators)
    assert sagbi(RG) is RG.cache


def test_generator_families():
    names = [f"x_{r}_{c}" for r in (1, 2) for c in (1, 2, 3)]
    R = PolyRing(names, Lex())
    minors = pluecker_minors(R, 2, 3)
    assert minors[0] == R.coerce("x_1_1*x_2_2-x_1_2*x_2_1")
    assert minors[2] == R.coerce("x_1_2*x_2_3-x_1_3*x_2_2")
    assert is_sagbi(make_subring(minors))
    with pytest.raises(InvalidInputError):
        pluecker_minors(R, 3, 3)

    ring, gens = screws_generators(2)
    assert ring.nvars == 15
    assert len(gens) == 12
    assert "w_2_3" in ring.variables
    assert gens[3] == ring.coerce("v_1_1-t_3*w_1_2+t_2*w_1_3")
    with pytest.raises(InvalidInputError):
        screws_generators(0)
    assert grassmannian_ring().nvars == 18


def test_bundled_sessions_certify_their_results():
    checks = {"quotient": 5, "screws": 4, "cox_nagata": 3, "intersection": 6}
    for name, statement in checks.items():
        stdout, stderr = io.StringIO(), io.StringIO()
        status = run(CliConfig(script_path=str(SESSIONS / f"{name}.sagbi")), stdout, stderr)
        assert status == EXIT_OK, stderr.getvalue()
        lines = stdout.getvalue().splitlines()
        assert lines[statement - 1] == f"[{statement}] true", name


@pytest.mark.slow
@pytest.mark.skipif(not EXTENDED, reason="set SAGBI_EXTENDED=1 for the slow examples")
def test_grassmannian_needs_one_extra_generator():
    ring = grassmannian_ring()
    minors = pluecker_minors(ring, 3, 6)
    assert len(minors) == 20
    basis = sagbi(make_subring(minors), SagbiOptions(limit=40))
    assert basis.complete
    assert len(basis.sagbi_gens) == 21
    assert basis.sagbi_gens[:20] == [m.monic() for m in minors]


def main():
    from suite_runner import exit_with, run_suite
    exit_with(run_suite("EXAMPLE TESTS", sys.modules[__name__]))


if __name__ == "__main__":
    main()
