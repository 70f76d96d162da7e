"""
Generator families for standard examples
Translational invariants of multi-screws and Pluecker coordinates of Grassmannians.
"""

from itertools import combinations, permutations

from .errors import InvalidInputError
from .orders import Eliminate, Lex, Weights
from .polynomials import PolyRing

# Matching-field weights for Gr(3,6), rows of a 3 x 6 matrix of variables
HEXAGONAL_MATCHING_WEIGHTS = (0, 0, 0, 0, 0, 0,
                              0, 15, 3, 12, 9, 6,
                              0, 7, 14, 21, 28, 35)


def screws_ring(n=1):
    """QQ[t_1..t_3, w.., v..] eliminating the translation block, Lex inside."""
    if n < 1:
        raise InvalidInputError(f"need at least one screw, got {n}")
    names = ["t_1", "t_2", "t_3"]
    for k in range(1, n + 1):
        prefix = "" if n == 1 else f"{k}_"
        names += [f"w_{prefix}{i}" for i in (1, 2, 3)]
        names += [f"v_{prefix}{i}" for i in (1, 2, 3)]
    return PolyRing(names, Eliminate(3, Lex()), name="R")


def screws_generators(n=1):
    """
    Entries of the adjoint action with trivial rotation, for n screws

    Args:
        n (int): Number of screws (w_k, v_k)

    Returns:
        tuple: (ring, generators) with generators w_k and v_k + t x w_k per screw
    """
    ring = screws_ring(n)
    t = ring.gens()[:3]
    gens = []
    for k in range(n):
        block = ring.gens()[3 + 6 * k: 9 + 6 * k]
        w, v = block[:3], block[3:]
        cross = [t[1] * w[2] - t[2] * w[1],
                 t[2] * w[0] - t[0] * w[2],
                 t[0] * w[1] - t[1] * w[0]]
        gens += w
        gens += [v[i] + cross[i] for i in range(3)]
    return ring, gens


def _permutation_sign(perm):
    sign = 1
    seen = [False] * len(perm)
    for start in range(len(perm)):
        if seen[start]:
            continue
        length = 0
        j = start
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def pluecker_minors(ring, rows, cols):
    """Maximal minors of the rows x cols matrix of the ring variables (row-major), by column subsets."""
    if ring.nvars != rows * cols:
        raise InvalidInputError(f"a {rows} x {cols} matrix needs {rows * cols} variables, "
                                f"ring has {ring.nvars}")
    if rows > cols:
        raise InvalidInputError("maximal minors need at least as many columns as rows")
    entry = [[ring.variable(r * cols + c) for c in range(cols)] for r in range(rows)]
    minors = []
    for subset in combinations(range(cols), rows):
        det = ring.zero()
        for perm in permutations(range(rows)):
            term = ring.constant(_permutation_sign(perm))
            for r in range(rows):
                term = term * entry[r][subset[perm[r]]]
            det = det + term
        minors.append(det)
    return minors


def grassmannian_ring(rows=3, cols=6, weights=HEXAGONAL_MATCHING_WEIGHTS):
    """QQ[x_i_j] for a generic rows x cols matrix with a weight order."""
    names = [f"x_{r}_{c}" for r in range(1, rows + 1) for c in range(1, cols + 1)]
    return PolyRing(names, Weights(tuple(weights)), name="R")
