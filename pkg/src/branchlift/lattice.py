"""Exact integer row reduction for sublattices of Z^m."""

from __future__ import annotations

import math
from collections.abc import Sequence


def _echelon(rows: list[list[int]], ncols: int) -> int:
    """Row-reduce ``rows`` in place over Z on the first ``ncols`` columns.

    Only unimodular row operations are used, so the row lattice is unchanged.
    Pivots end up positive with the entries above them reduced into
    [0, pivot). Returns the number of pivot rows; rows after them are zero
    in the first ``ncols`` columns.
    """
    piv = 0
    for col in range(ncols):
        found = False
        while True:
            nz = [i for i in range(piv, len(rows)) if rows[i][col]]
            if not nz:
                break
            found = True
            best = min(nz, key=lambda i: abs(rows[i][col]))
            rows[piv], rows[best] = rows[best], rows[piv]
            p = rows[piv][col]
            clean = True
            for i in range(piv + 1, len(rows)):
                if rows[i][col]:
                    q = rows[i][col] // p
                    rows[i] = [x - q * y for x, y in zip(rows[i], rows[piv])]
                    if rows[i][col]:
                        clean = False
            if clean:
                break
        if not found:
            continue
        if rows[piv][col] < 0:
            rows[piv] = [-x for x in rows[piv]]
        p = rows[piv][col]
        for i in range(piv):
            q = rows[i][col] // p
            if q:
                rows[i] = [x - q * y for x, y in zip(rows[i], rows[piv])]
        piv += 1
        if piv == len(rows):
            break
    return piv


def hermite_basis(vectors: Sequence[Sequence[int]], dim: int) -> list[tuple[int, ...]]:
    """Row-style Hermite normal form basis of the lattice spanned by ``vectors``."""
    rows = [list(v) for v in vectors]
    for v in rows:
        if len(v) != dim:
            raise ValueError(f"vector {v} is not in Z^{dim}")
    rank = _echelon(rows, dim)
    return [tuple(r) for r in rows[:rank]]


def lattice_index(basis: Sequence[Sequence[int]], dim: int) -> int:
    """Index in Z^dim of a full-rank lattice given by a Hermite basis; 0 if not full rank."""
    if len(basis) != dim:
        return 0
    return math.prod(basis[i][i] for i in range(dim))


def kernel_mod(
    matrix: Sequence[Sequence[int]], moduli: Sequence[int]
) -> list[tuple[int, ...]]:
    """Hermite basis of {v in Z^m : sum_i v_i * matrix[i][j] = 0 mod moduli[j] for all j}.

    ``matrix`` has m rows and one column per modulus.
    """
    m = len(matrix)
    r = len(moduli)
    # Left kernel of [matrix; diag(moduli)], tracking only the v part.
    rows = [list(matrix[i]) + [int(i == t) for t in range(m)] for i in range(m)]
    for j, n in enumerate(moduli):
        rows.append([n if t == j else 0 for t in range(r)] + [0] * m)
    rank = _echelon(rows, r)
    kernel = [row[r:] for row in rows[rank:]]
    return hermite_basis(kernel, m)
