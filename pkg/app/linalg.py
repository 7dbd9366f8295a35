"""Exact linear algebra over the rationals.

Sparse rows are dicts ``variable -> Fraction`` with no zero values. They are
used for the large, very sparse commutation systems; the small dense
systems go through sympy.
"""

from __future__ import annotations

import logging
from collections.abc import Hashable, Iterable, Sequence
from fractions import Fraction

import sympy

from app.errors import SolverError
from app.utils.rational import to_fraction, to_sympy

logger = logging.getLogger(__name__)

SparseRow = dict[Hashable, Fraction]


def iadd_coef(row: SparseRow, coef: Fraction, other: SparseRow) -> SparseRow:
    """In place ``row += coef * other``, dropping zeros."""
    if coef == 0:
        return row
    for k, x in other.items():
        value = row.get(k, 0) + coef * x
        if value == 0:
            row.pop(k, None)
        else:
            row[k] = value
    return row


class SparseEliminator:
    """Incremental reduced row echelon form over sparse rows.

    Every stored pivot row has pivot coefficient 1 and contains no other
    pivot variable.
    """

    def __init__(self, order: Sequence[Hashable]):
        self._rank = {v: i for i, v in enumerate(order)}
        self.variables = list(order)
        self.pivots: dict[Hashable, SparseRow] = {}

    def add(self, row: SparseRow) -> bool:
        """Add an equation ``row == 0``; return True if it was independent."""
        row = {k: Fraction(v) for k, v in row.items() if v != 0}
        for k in [k for k in row if k in self.pivots]:
            coef = row.get(k, 0)
            if coef:
                iadd_coef(row, -coef, self.pivots[k])
        if not row:
            return False
        pivot = min(row, key=self._rank.__getitem__)
        scale = 1 / row[pivot]
        row = {k: v * scale for k, v in row.items()}
        for other in self.pivots.values():
            coef = other.get(pivot, 0)
            if coef:
                iadd_coef(other, -coef, row)
        self.pivots[pivot] = row
        return True

    def nullspace(self) -> list[SparseRow]:
        """Basis of the solution space, one vector per free variable, in variable order."""
        basis = []
        for free in self.variables:
            if free in self.pivots:
                continue
            vec: SparseRow = {free: Fraction(1)}
            for p, row in self.pivots.items():
                coef = row.get(free, 0)
                if coef:
                    vec[p] = -coef
            basis.append(vec)
        return basis


def sparse_nullspace(
    rows: Iterable[SparseRow], variables: Sequence[Hashable]
) -> list[SparseRow]:
    elim = SparseEliminator(variables)
    count = 0
    for row in rows:
        elim.add(row)
        count += 1
    logger.debug(
        "sparse system: %d equations, %d unknowns, rank %d",
        count,
        len(variables),
        len(elim.pivots),
    )
    return elim.nullspace()


def solve_square(
    matrix: Sequence[Sequence[Fraction]], rhs: Sequence[Fraction]
) -> list[Fraction]:
    """Solve ``matrix · x = rhs`` exactly.

    Raises:
        SolverError: If the system is singular.
    """
    a = sympy.Matrix([[to_sympy(x) for x in row] for row in matrix])
    b = sympy.Matrix([to_sympy(x) for x in rhs])
    if a.rows and a.det() == 0:
        raise SolverError(f"singular {a.rows}x{a.cols} system")
    if not a.rows:
        return []
    x = a.LUsolve(b)
    return [to_fraction(v) for v in x]


def dense_nullspace(matrix: Sequence[Sequence[Fraction]]) -> list[list[Fraction]]:
    """Exact nullspace basis of a dense rational matrix."""
    a = sympy.Matrix([[to_sympy(x) for x in row] for row in matrix])
    return [[to_fraction(v) for v in vec] for vec in a.nullspace()]
