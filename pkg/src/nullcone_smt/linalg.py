"""Small exact linear algebra over the rationals (and a prime field for rank bounds)."""

from __future__ import annotations

from collections.abc import Hashable, Mapping, Sequence
from fractions import Fraction
from numbers import Rational

from .errors import InvariantViolation

# 2**61 - 1 is prime
PRIME = 2305843009213693951


def _eliminate(matrix: list[list[Fraction]], ncols: int) -> list[int]:
    """In-place reduced row echelon form on the first ``ncols`` columns; returns pivot columns."""
    pivots: list[int] = []
    row = 0
    for col in range(ncols):
        pivot = next((r for r in range(row, len(matrix)) if matrix[r][col]), None)
        if pivot is None:
            continue
        matrix[row], matrix[pivot] = matrix[pivot], matrix[row]
        inv = 1 / matrix[row][col]
        matrix[row] = [v * inv for v in matrix[row]]
        prow = matrix[row]
        for r in range(len(matrix)):
            if r != row and matrix[r][col]:
                f = matrix[r][col]
                matrix[r] = [a - f * b for a, b in zip(matrix[r], prow)]
        pivots.append(col)
        row += 1
        if row == len(matrix):
            break
    return pivots


def solve_columns(columns: Sequence[Mapping[Hashable, Rational]], target: Mapping[Hashable, Rational],
                  require_unique: bool = True) -> list[Fraction] | None:
    """Find ``c`` with ``sum_i c_i * columns[i] == target`` (vectors as sparse dicts).

    Returns ``None`` when no solution exists.  Free variables are set to zero;
    with ``require_unique`` a non-trivial kernel raises :class:`InvariantViolation`.
    """
    keys = sorted({k for col in columns for k in col} | set(target))
    index = {k: r for r, k in enumerate(keys)}
    ncols = len(columns)
    matrix = [[Fraction(0)] * (ncols + 1) for _ in keys]
    for c, col in enumerate(columns):
        for k, v in col.items():
            matrix[index[k]][c] = Fraction(v)
    for k, v in target.items():
        matrix[index[k]][ncols] = Fraction(v)
    pivots = _eliminate(matrix, ncols)
    for r in range(len(pivots), len(matrix)):
        if matrix[r][ncols]:
            return None
    if require_unique and len(pivots) != ncols:
        raise InvariantViolation(f"solution not unique: rank {len(pivots)} < {ncols} unknowns")
    solution = [Fraction(0)] * ncols
    for r, col in enumerate(pivots):
        solution[col] = matrix[r][ncols]
    return solution


def in_span(columns: Sequence[Mapping[Hashable, Rational]], target: Mapping[Hashable, Rational]) -> bool:
    return solve_columns(columns, target, require_unique=False) is not None


def rank_exact(rows: Sequence[Sequence[Rational]]) -> int:
    if not rows:
        return 0
    matrix = [[Fraction(v) for v in r] for r in rows]
    return len(_eliminate(matrix, len(matrix[0])))


def _mod(v: Rational, p: int) -> int:
    v = Fraction(v)
    den = v.denominator % p
    if den == 0:
        raise ZeroDivisionError("denominator divisible by the modulus")
    return v.numerator * pow(den, -1, p) % p


def rank_mod_p(rows: Sequence[Sequence[Rational]], p: int = PRIME) -> int:
    """Rank over GF(p); a lower bound for the rank over the rationals."""
    if not rows:
        return 0
    matrix = [[_mod(v, p) for v in r] for r in rows]
    ncols = len(matrix[0])
    rank = 0
    for col in range(ncols):
        pivot = next((r for r in range(rank, len(matrix)) if matrix[r][col]), None)
        if pivot is None:
            continue
        matrix[rank], matrix[pivot] = matrix[pivot], matrix[rank]
        inv = pow(matrix[rank][col], -1, p)
        prow = [v * inv % p for v in matrix[rank]]
        matrix[rank] = prow
        for r in range(rank + 1, len(matrix)):
            f = matrix[r][col]
            if f:
                matrix[r] = [(a - f * b) % p for a, b in zip(matrix[r], prow)]
        rank += 1
        if rank == len(matrix):
            break
    return rank


def column_rank(rows: Sequence[Sequence[Rational]]) -> int:
    """Exact rank, taking the modular fast path whenever it already certifies full column rank."""
    if not rows:
        return 0
    ncols = len(rows[0])
    try:
        r = rank_mod_p(rows)
    except ZeroDivisionError:
        r = -1
    if r == ncols:
        return r
    return rank_exact(rows)
