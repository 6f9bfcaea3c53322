"""Small exact linear algebra over the rationals (Gaussian elimination)."""
from __future__ import annotations

from fractions import Fraction

Matrix = list[list[Fraction]]


def _echelon(rows: Matrix) -> tuple[Matrix, list[int]]:
    """Row-reduce in place, returning (echelon rows, pivot column indices)."""
    rows = [list(r) for r in rows]
    m = len(rows)
    n = len(rows[0]) if m else 0
    pivots: list[int] = []
    r = 0
    for c in range(n):
        pivot = next((i for i in range(r, m) if rows[i][c] != 0), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        pv = rows[r][c]
        rows[r] = [x / pv for x in rows[r]]
        for i in range(m):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == m:
            break
    return rows, pivots


def rank(rows: Matrix) -> int:
    if not rows:
        return 0
    _, pivots = _echelon(rows)
    return len(pivots)


def solve_exact(rows: Matrix, rhs: list[Fraction]) -> list[Fraction]:
    """Solve A x = b exactly.  A may have more rows than columns; the system
    must be consistent and determine x uniquely, else ValueError."""
    m = len(rows)
    n = len(rows[0])
    aug = [list(rows[i]) + [Fraction(rhs[i])] for i in range(m)]
    red, pivots = _echelon(aug)
    if n in pivots:
        raise ValueError("inconsistent linear system")
    if len(pivots) < n:
        raise ValueError("underdetermined linear system")
    x = [Fraction(0)] * n
    for i, c in enumerate(pivots):
        x[c] = red[i][n]
    return x


def nullspace(rows: Matrix) -> list[list[Fraction]]:
    """Basis of the right kernel of A."""
    if not rows:
        return []
    n = len(rows[0])
    red, pivots = _echelon(rows)
    free = [c for c in range(n) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * n
        v[f] = Fraction(1)
        for i, c in enumerate(pivots):
            v[c] = -red[i][f]
        basis.append(v)
    return basis
