"""Small exact linear-algebra helpers over Q."""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence


def solve_linear(
    rows: Sequence[Sequence[Fraction]], rhs: Sequence[Fraction]
) -> list[Fraction] | None:
    """One particular solution x of (rows) x = rhs, or None if inconsistent.

    Free variables are set to zero.  Everything is exact.
    """
    m = len(rows)
    if m == 0:
        return []
    n = len(rows[0])
    a = [[Fraction(v) for v in row] + [Fraction(rhs[i])] for i, row in enumerate(rows)]
    pivots: list[tuple[int, int]] = []
    row = 0
    for col in range(n):
        sel = None
        for r in range(row, m):
            if a[r][col] != 0:
                sel = r
                break
        if sel is None:
            continue
        a[row], a[sel] = a[sel], a[row]
        pv = a[row][col]
        a[row] = [v / pv for v in a[row]]
        for r in range(m):
            if r != row and a[r][col] != 0:
                f = a[r][col]
                a[r] = [v - f * w for v, w in zip(a[r], a[row])]
        pivots.append((row, col))
        row += 1
        if row == m:
            break
    for r in range(row, m):
        if a[r][n] != 0:
            return None
    x = [Fraction(0)] * n
    for r, c in pivots:
        x[c] = a[r][n]
    return x
