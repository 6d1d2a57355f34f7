"""Dense exact linear algebra over Q (fractions.Fraction).

Small and deliberately boring: row-reduce, rank, nullspace, affine solve,
determinant. Canonical RREF output is what makes bases deterministic across
the package, so nothing here may depend on dict ordering or hashing.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence, Union

Matrix = list[list[Fraction]]


def _copy(rows: Sequence[Sequence[Fraction]]) -> Matrix:
    return [[Fraction(x) for x in row] for row in rows]


def rref(rows: Sequence[Sequence[Fraction]]) -> tuple[Matrix, list[int]]:
    """Reduced row echelon form. Returns (nonzero rows, pivot columns)."""
    m = _copy(rows)
    if not m:
        return [], []
    ncols = len(m[0])
    pivots: list[int] = []
    r = 0
    for col in range(ncols):
        pivot_row = None
        for i in range(r, len(m)):
            if m[i][col]:
                pivot_row = i
                break
        if pivot_row is None:
            continue
        m[r], m[pivot_row] = m[pivot_row], m[r]
        inv = Fraction(1) / m[r][col]
        m[r] = [x * inv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][col]:
                factor = m[i][col]
                m[i] = [a - factor * b for a, b in zip(m[i], m[r])]
        pivots.append(col)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def rank(rows: Sequence[Sequence[Fraction]]) -> int:
    return len(rref(rows)[0])


def nullspace(rows: Sequence[Sequence[Fraction]], ncols: int) -> list[list[Fraction]]:
    """Canonical basis of {v : A v = 0}, one vector per free column."""
    reduced, pivots = rref(rows)
    pivot_set = set(pivots)
    free = [c for c in range(ncols) if c not in pivot_set]
    basis = []
    for fc in free:
        v = [Fraction(0)] * ncols
        v[fc] = Fraction(1)
        for r, pc in enumerate(pivots):
            v[pc] = -reduced[r][fc]
        basis.append(v)
    return basis


def in_row_space(vec: Sequence[Fraction], reduced: Matrix, pivots: Sequence[int]) -> bool:
    """Whether vec lies in the span of an already-reduced row set."""
    v = [Fraction(x) for x in vec]
    for r, pc in enumerate(pivots):
        if v[pc]:
            factor = v[pc]
            v = [a - factor * b for a, b in zip(v, reduced[r])]
    return not any(v)


def solve_affine(augmented: Sequence[Sequence[Fraction]], nunknowns: int) -> Union[str, list[Fraction]]:
    """Solve A x = b given rows [a_1..a_n, b].

    Returns the unique solution vector, or "inconsistent", or
    "underdetermined" when the solution is not unique.
    """
    reduced, pivots = rref(augmented)
    if nunknowns in pivots:
        return "inconsistent"
    if len(pivots) < nunknowns:
        return "underdetermined"
    sol = [Fraction(0)] * nunknowns
    for r, pc in enumerate(pivots):
        sol[pc] = reduced[r][nunknowns]
    return sol


def det(rows: Sequence[Sequence[Fraction]]) -> Fraction:
    """Determinant of a square matrix by fraction-free-ish elimination."""
    m = _copy(rows)
    n = len(m)
    if any(len(row) != n for row in m):
        raise ValueError("determinant needs a square matrix")
    sign = 1
    result = Fraction(1)
    for col in range(n):
        pivot_row = None
        for i in range(col, n):
            if m[i][col]:
                pivot_row = i
                break
        if pivot_row is None:
            return Fraction(0)
        if pivot_row != col:
            m[col], m[pivot_row] = m[pivot_row], m[col]
            sign = -sign
        pivot = m[col][col]
        result *= pivot
        for i in range(col + 1, n):
            if m[i][col]:
                factor = m[i][col] / pivot
                m[i] = [a - factor * b for a, b in zip(m[i], m[col])]
    return result * sign
