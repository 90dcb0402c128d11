"""Exact Gaussian elimination over a cyclotomic field."""

from __future__ import annotations

from typing import Sequence

from .scalars import CycloNum, CyclotomicField


def rref(rows: Sequence[Sequence[CycloNum]], fld: CyclotomicField) -> tuple[list[list[CycloNum]], list[int]]:
    """Reduced row echelon form and pivot columns."""
    mat = [list(r) for r in rows]
    if not mat:
        return [], []
    ncols = len(mat[0])
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        pr = next((i for i in range(r, len(mat)) if mat[i][c]), None)
        if pr is None:
            continue
        mat[r], mat[pr] = mat[pr], mat[r]
        inv = mat[r][c].inverse()
        mat[r] = [x * inv for x in mat[r]]
        for i in range(len(mat)):
            if i != r and mat[i][c]:
                f = mat[i][c]
                mat[i] = [a - f * b for a, b in zip(mat[i], mat[r])]
        pivots.append(c)
        r += 1
        if r == len(mat):
            break
    return mat[:r], pivots


def rank(rows: Sequence[Sequence[CycloNum]], fld: CyclotomicField) -> int:
    return len(rref(rows, fld)[1])


def nullspace(rows: Sequence[Sequence[CycloNum]], ncols: int, fld: CyclotomicField) -> list[list[CycloNum]]:
    """Basis of {x : M x = 0}, one vector per free column."""
    red, pivots = rref(rows, fld) if rows else ([], [])
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        vec = [fld.zero] * ncols
        vec[fc] = fld.one
        for row, pc in zip(red, pivots):
            vec[pc] = -row[fc]
        basis.append(vec)
    return basis
