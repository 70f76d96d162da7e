"""
SAGBI toolkit
Exact subalgebra bases over the rationals: subduction, completion,
certification, membership, intersection and resumable computation state.
"""

from .errors import (
    DomainError,
    IncompleteBasisError,
    InvalidInputError,
    NameResolutionError,
    ParseError,
    RingMismatchError,
    SagbiError,
    StateFileError,
)
from .groebner import (
    GroebnerBasis,
    Strategy,
    buchberger,
    elimination_subring,
    initial_ideal_gens,
    kernel_generators,
    reduce_modulo,
    s_polynomial,
)
from .membership import (
    IntersectedSubring,
    groebner_membership_test,
    is_full_intersection,
    normal_form,
    quotient_coefficients,
    subring_intersection,
)
from .orders import Blocks, Eliminate, GRevLex, Lex, MonomialOrder, Weights, compare_monomials
from .parser import parse_order, parse_polynomial, parse_polynomials, parse_variable_list
from .polynomials import (
    PolyRing,
    Polynomial,
    Term,
    evaluate_map,
    format_listing,
    lead_term,
    poly_add,
    poly_mul,
    select_in_subring,
)
from .progress import ProgressLog
from .script import parse_script
from .state import load_state, save_state
from .subalgebra import (
    DEFAULT_LIMIT,
    SAGBIBasis,
    SagbiOptions,
    SubductionMethod,
    Subring,
    auto_subduce,
    is_sagbi,
    make_subring,
    sagbi,
    subalgebra_basis,
    subduct,
    subduct_all,
)

__version__ = "1.0.0"
