"""Small dense exact linear algebra over Q (leftmost-pivot RREF)."""

from __future__ import annotations

from typing import Sequence

from .polyring import QQ

_ZERO = QQ(0)
_ONE = QQ(1)

Vector = list
Matrix = list


def rref(rows: Matrix) -> tuple[Matrix, list[int]]:
    """Reduced row echelon form; returns (reduced nonzero rows, pivot columns)."""
    work = [[QQ(x) for x in row] for row in rows]
    ncols = len(work[0]) if work else 0
    pivots: list[int] = []
    reduced: Matrix = []
    for row in work:
        for prow, pcol in zip(reduced, pivots):
            c = row[pcol]
            if c:
                for j in range(pcol, ncols):
                    row[j] = row[j] - c * prow[j]
        lead = next((j for j in range(ncols) if row[j]), None)
        if lead is None:
            continue
        inv = _ONE / row[lead]
        row = [x * inv for x in row]
        # back-eliminate the new pivot from earlier rows
        for prow in reduced:
            c = prow[lead]
            if c:
                for j in range(lead, ncols):
                    prow[j] = prow[j] - c * row[j]
        # keep rows ordered by pivot column
        at = next((idx for idx, pc in enumerate(pivots) if pc > lead), len(pivots))
        reduced.insert(at, row)
        pivots.insert(at, lead)
    return reduced, pivots


def rank(rows: Matrix) -> int:
    return len(rref(rows)[1])


def kernel_basis(rows: Matrix, ncols: int) -> Matrix:
    """Basis of the right null space of the matrix with the given rows."""
    if not rows:
        return [[_ONE if i == j else _ZERO for j in range(ncols)] for i in range(ncols)]
    reduced, pivots = rref(rows)
    pivot_set = set(pivots)
    basis: Matrix = []
    for free in range(ncols):
        if free in pivot_set:
            continue
        vec = [_ZERO] * ncols
        vec[free] = _ONE
        for prow, pcol in zip(reduced, pivots):
            if prow[free]:
                vec[pcol] = -prow[free]
        basis.append(vec)
    return basis


def solve_in_span(
    columns: Matrix, targets: Matrix
) -> list[Vector] | None:
    """Express each target vector as a combination of the given columns.

    ``columns`` and ``targets`` are lists of equal-length vectors.  Returns
    one coefficient vector per target (aligned with ``columns``), or None
    when some target lies outside the span.
    """
    ncols = len(columns)
    ntargets = len(targets)
    height = len(columns[0]) if columns else (len(targets[0]) if targets else 0)
    for v in list(columns) + list(targets):
        if len(v) != height:
            raise ValueError("inconsistent vector lengths")
    aug = [
        [QQ(columns[j][i]) for j in range(ncols)]
        + [QQ(targets[t][i]) for t in range(ntargets)]
        for i in range(height)
    ]
    reduced, pivots = rref(aug)
    # any pivot inside the target block means that target is independent
    if any(p >= ncols for p in pivots):
        return None
    out: list[Vector] = []
    for t in range(ntargets):
        coeffs = [_ZERO] * ncols
        for prow, pcol in zip(reduced, pivots):
            coeffs[pcol] = prow[ncols + t]
        out.append(coeffs)
    return out


def matrix_vector(rows: Matrix, vec: Sequence) -> Vector:
    return [sum((r[j] * vec[j] for j in range(len(vec))), _ZERO) for r in rows]
