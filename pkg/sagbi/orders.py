"""
Monomial orders
Every order is realised as an integer weight matrix M: a > b iff the first
nonzero entry of M (a - b) is positive.
"""

from dataclasses import dataclass, field
from enum import IntEnum
from functools import lru_cache
from typing import Tuple

import numpy as np

from .errors import InvalidInputError

# exponents stay well inside int64 once multiplied by order weights
MAX_EXPONENT = 2 ** 31 - 1


class Comparison(IntEnum):
    LESS = -1
    EQUAL = 0
    GREATER = 1


@dataclass(frozen=True)
class MonomialOrder:
    """Base class; subclasses supply the rows of their weight matrix."""

    def rows(self, nvars):
        raise NotImplementedError

    def spec(self):
        raise NotImplementedError

    def blocks(self, nvars):
        """Leading variable blocks, as index ranges, for elimination look-ups."""
        raise InvalidInputError(f"order '{self.spec()}' has no block structure")

    def matrix(self, nvars):
        return order_matrix(self, nvars)

    def __str__(self):
        return self.spec()


@dataclass(frozen=True)
class Lex(MonomialOrder):
    def rows(self, nvars):
        return [[1 if j == i else 0 for j in range(nvars)] for i in range(nvars)]

    def spec(self):
        return "lex"


@dataclass(frozen=True)
class GRevLex(MonomialOrder):
    def rows(self, nvars):
        rows = [[1] * nvars]
        # Ties go to the smaller exponent in the last variable
        for i in range(nvars - 1, 0, -1):
            rows.append([-1 if j == i else 0 for j in range(nvars)])
        return rows

    def spec(self):
        return "grevlex"


@dataclass(frozen=True)
class Weights(MonomialOrder):
    weights: Tuple[int, ...] = ()
    tiebreak: MonomialOrder = field(default_factory=GRevLex)

    def __post_init__(self):
        weights = tuple(int(w) for w in self.weights)
        if any(w < 0 for w in weights):
            raise InvalidInputError(f"weight vector {list(weights)} has negative entries")
        object.__setattr__(self, "weights", weights)

    def rows(self, nvars):
        if len(self.weights) != nvars:
            raise InvalidInputError(
                f"weight vector has {len(self.weights)} entries for {nvars} variables")
        return [list(self.weights)] + self.tiebreak.rows(nvars)

    def spec(self):
        text = "weights(" + ",".join(str(w) for w in self.weights) + ")"
        return _with_tiebreak(text, self.tiebreak)

    def blocks(self, nvars):
        heavy = [i for i, w in enumerate(self.weights) if w > 0]
        if not heavy or len(heavy) == nvars:
            return super().blocks(nvars)
        return [heavy, [i for i in range(nvars) if i not in heavy]]


@dataclass(frozen=True)
class Eliminate(MonomialOrder):
    count: int = 1
    tiebreak: MonomialOrder = field(default_factory=GRevLex)

    def __post_init__(self):
        if int(self.count) < 1:
            raise InvalidInputError(f"eliminate block size must be positive, got {self.count}")
        object.__setattr__(self, "count", int(self.count))

    def rows(self, nvars):
        if self.count > nvars:
            raise InvalidInputError(
                f"cannot eliminate {self.count} of {nvars} variables")
        head = [1] * self.count + [0] * (nvars - self.count)
        return [head] + self.tiebreak.rows(nvars)

    def spec(self):
        return _with_tiebreak(f"eliminate({self.count})", self.tiebreak)

    def blocks(self, nvars):
        return [list(range(self.count)), list(range(self.count, nvars))]


@dataclass(frozen=True)
class Blocks(MonomialOrder):
    parts: Tuple[Tuple[int, MonomialOrder], ...] = ()

    def __post_init__(self):
        parts = tuple((int(count), order) for count, order in self.parts)
        if not parts or any(count < 1 for count, _ in parts):
            raise InvalidInputError("block orders need positive block sizes")
        object.__setattr__(self, "parts", parts)

    def rows(self, nvars):
        total = sum(count for count, _ in self.parts)
        if total != nvars:
            raise InvalidInputError(f"blocks cover {total} variables, ring has {nvars}")
        rows = []
        start = 0
        for count, order in self.parts:
            for row in order.rows(count):
                rows.append([0] * start + list(row) + [0] * (nvars - start - count))
            start += count
        return rows

    def spec(self):
        inner = ", ".join(f"{count}:{order.spec()}" for count, order in self.parts)
        return f"blocks({inner})"

    def blocks(self, nvars):
        ranges = []
        start = 0
        for count, _ in self.parts:
            ranges.append(list(range(start, start + count)))
            start += count
        return ranges


def _with_tiebreak(text, tiebreak):
    if tiebreak == GRevLex():
        return text
    return f"{text}:{tiebreak.spec()}"


@lru_cache(maxsize=None)
def order_matrix(order, nvars):
    """Weight matrix of an order on nvars variables; rejects non-global orders."""
    rows = order.rows(nvars) if nvars else []
    matrix = np.array(rows, dtype=np.int64).reshape(len(rows), nvars)
    for column in range(nvars):
        nonzero = np.flatnonzero(matrix[:, column])
        if len(nonzero) == 0 or matrix[nonzero[0], column] <= 0:
            raise InvalidInputError(
                f"order '{order.spec()}' is not global: variable {column + 1} "
                "does not dominate the empty monomial")
    if nvars and np.linalg.matrix_rank(matrix) < nvars:
        raise InvalidInputError(f"order '{order.spec()}' does not separate all monomials")
    matrix.setflags(write=False)
    return matrix


def exponent_array(exponent):
    """int64 array of an exponent vector; rejects exponents above MAX_EXPONENT."""
    if max(exponent, default=0) > MAX_EXPONENT:
        raise InvalidInputError(f"exponent {max(exponent)} exceeds the supported maximum {MAX_EXPONENT}")
    return np.asarray(exponent, dtype=np.int64)


def compare_monomials(order, a, b):
    """Compare two exponent vectors under an order."""
    if len(a) != len(b):
        raise InvalidInputError(f"exponent vectors of lengths {len(a)} and {len(b)}")
    matrix = order_matrix(order, len(a))
    difference = matrix @ (exponent_array(a) - exponent_array(b))
    for value in difference:
        if value > 0:
            return Comparison.GREATER
        if value < 0:
            return Comparison.LESS
    return Comparison.EQUAL


class SortKey:
    """Cached sort keys for one order on a fixed number of variables.

    Larger keys mean larger monomials; Python tuple comparison does the rest.
    """

    def __init__(self, order, nvars):
        self.order = order
        self.nvars = nvars
        self.matrix = order_matrix(order, nvars)
        self._cache = {}

    def __call__(self, exponent):
        key = self._cache.get(exponent)
        if key is None:
            key = tuple((self.matrix @ exponent_array(exponent)).tolist())
            self._cache[exponent] = key
        return key
