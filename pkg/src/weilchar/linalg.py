"""Dense matrices over a FieldSpec, stored as lists of lists of indices."""

from __future__ import annotations

import random
from typing import Sequence

from .finite_field import FieldSpec

Matrix = list[list[int]]


def identity(n: int) -> Matrix:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def transpose(A: Sequence[Sequence[int]]) -> Matrix:
    return [list(col) for col in zip(*A)]


def matmul(F: FieldSpec, A: Sequence[Sequence[int]], B: Sequence[Sequence[int]]) -> Matrix:
    cols = list(zip(*B))
    out = []
    for row in A:
        new = []
        for col in cols:
            s = 0
            for x, y in zip(row, col):
                if x and y:
                    s = F.add(s, F.mul(x, y))
            new.append(s)
        out.append(new)
    return out


def vecmat(F: FieldSpec, v: Sequence[int], A: Sequence[Sequence[int]]) -> list[int]:
    return matmul(F, [list(v)], A)[0]


def _echelon(F: FieldSpec, A: Sequence[Sequence[int]]) -> tuple[int, int]:
    """Row-reduce a copy of A; return (rank, determinant if square else 0)."""
    M = [list(r) for r in A]
    rows = len(M)
    cols = len(M[0]) if rows else 0
    rank, det = 0, 1
    for c in range(cols):
        piv = next((r for r in range(rank, rows) if M[r][c]), None)
        if piv is None:
            det = 0
            continue
        if piv != rank:
            M[rank], M[piv] = M[piv], M[rank]
            det = F.neg(det)
        pv = M[rank][c]
        det = F.mul(det, pv)
        inv = F.inv(pv)
        for r in range(rank + 1, rows):
            if M[r][c]:
                f = F.mul(M[r][c], inv)
                M[r] = [F.sub(x, F.mul(f, y)) for x, y in zip(M[r], M[rank])]
        rank += 1
    if rows != cols or rank < rows:
        det = 0
    return rank, det


def rank(F: FieldSpec, A: Sequence[Sequence[int]]) -> int:
    return _echelon(F, A)[0]


def det(F: FieldSpec, A: Sequence[Sequence[int]]) -> int:
    if len(A) == 0:
        return 1
    return _echelon(F, A)[1]


def random_invertible(F: FieldSpec, n: int, rng: random.Random) -> Matrix:
    while True:
        M = [[rng.randrange(F.q) for _ in range(n)] for _ in range(n)]
        if det(F, M):
            return M
