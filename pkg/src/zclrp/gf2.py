"""F2 linear algebra on int-packed row vectors (bit c of a row = column c).

Thin layer over the active kernel's row reduction.
"""

from __future__ import annotations

from ._kernels import rref

__all__ = ["rref", "nullspace", "pivot_of"]


def pivot_of(row: int) -> int:
    """Column of the lowest set bit."""
    return (row & -row).bit_length() - 1


def nullspace(rows: list[int], width: int) -> list[int]:
    """Canonical (rref) basis of {v : M v = 0} for the matrix with the given rows."""
    reduced = rref(rows, width)
    pivots = [pivot_of(r) for r in reduced]
    pivot_set = set(pivots)
    basis = []
    for free in range(width):
        if free in pivot_set:
            continue
        v = 1 << free
        for p, row in zip(pivots, reduced):
            if (row >> free) & 1:
                v |= 1 << p
        basis.append(v)
    return rref(basis, width)
