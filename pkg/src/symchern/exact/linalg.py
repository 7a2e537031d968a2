"""Exact symmetric congruence diagonalization over Q."""

from __future__ import annotations

from fractions import Fraction
from typing import List, Sequence, Tuple

Matrix = List[List[Fraction]]


def congruence_diagonalize(m: Sequence[Sequence[Fraction]]) -> Tuple[Matrix, List[Fraction]]:
    """Return ``(P, d)`` with ``P`` invertible and ``P M P^T = diag(d)``.

    Symmetric Gaussian elimination.  A zero pivot with a nonzero off-diagonal
    entry ``M[i][j]`` is repaired by the congruence ``row_i += row_j``, which
    puts ``2 M[i][j] + M[j][j]`` on the diagonal (nonzero after choosing a
    nonzero diagonal when one exists).
    """
    size = len(m)
    a = [[Fraction(x) for x in row] for row in m]
    if any(len(row) != size for row in a):
        raise ValueError("matrix must be square")
    for i in range(size):
        for j in range(i):
            if a[i][j] != a[j][i]:
                raise ValueError("matrix must be symmetric")
    p = [[Fraction(int(i == j)) for j in range(size)] for i in range(size)]

    def add_multiple(dst: int, src: int, f: Fraction) -> None:
        # row_dst += f row_src, col_dst += f col_src, on the full matrix
        for c in range(size):
            a[dst][c] += f * a[src][c]
        for r in range(size):
            a[r][dst] += f * a[r][src]
        for c in range(size):
            p[dst][c] += f * p[src][c]

    active = list(range(size))
    while active:
        k = next((i for i in active if a[i][i] != 0), None)
        if k is None:
            pair = next(
                ((i, j) for i in active for j in active if i != j and a[i][j] != 0), None
            )
            if pair is None:
                break
            i, j = pair
            add_multiple(i, j, Fraction(1))
            k = i
        pivot = a[k][k]
        for r in active:
            if r != k and a[r][k] != 0:
                add_multiple(r, k, -a[r][k] / pivot)
        active.remove(k)
    return p, [a[i][i] for i in range(size)]


def inertia(m: Sequence[Sequence[Fraction]]) -> Tuple[int, int, int]:
    """``(positives, negatives, zeros)`` of a rational symmetric matrix."""
    _, d = congruence_diagonalize(m)
    pos = sum(1 for x in d if x > 0)
    neg = sum(1 for x in d if x < 0)
    return pos, neg, len(d) - pos - neg
