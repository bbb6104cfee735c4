"""GF(2) linear algebra on integer bitsets (one int per row)."""

from __future__ import annotations


def row_reduce(rows: list[int]) -> tuple[list[int], list[int]]:
    """Reduce to row-echelon form; returns (basis rows, pivot columns).

    Pivot of a row is its highest set bit.  Zero rows are dropped.  The basis
    is fully reduced: each pivot bit appears in exactly one basis row.
    """
    basis: list[int] = []
    pivots: list[int] = []
    for row in rows:
        row = reduce_against(row, basis, pivots)
        if row == 0:
            continue
        piv = row.bit_length() - 1
        for i, b in enumerate(basis):
            if (b >> piv) & 1:
                basis[i] = b ^ row
        basis.append(row)
        pivots.append(piv)
    return basis, pivots


def reduce_against(vec: int, basis: list[int], pivots: list[int]) -> int:
    """Reduce vec modulo the span of an echelon basis."""
    for b, piv in zip(basis, pivots):
        if (vec >> piv) & 1:
            vec ^= b
    return vec


def rank(rows: list[int]) -> int:
    return len(row_reduce(rows)[0])


def in_rowspace(vec: int, basis: list[int], pivots: list[int]) -> bool:
    return reduce_against(vec, basis, pivots) == 0


def kernel(rows: list[int], width: int) -> list[int]:
    """Basis of {v : parity(v & row) = 0 for every row}, vectors of `width` bits.

    Works on the transpose with an identity tag: reduce the columns of the
    input matrix; tag rows whose column part vanishes span the kernel.
    """
    cols: list[int] = []
    tags: list[int] = []
    for j in range(width):
        col = 0
        for i, row in enumerate(rows):
            col |= ((row >> j) & 1) << i
        cols.append(col)
        tags.append(1 << j)
    out: list[int] = []
    basis: list[tuple[int, int]] = []  # (col, tag) with distinct pivot bits
    for col, tag in zip(cols, tags):
        for bcol, btag in basis:
            piv = bcol.bit_length() - 1
            if (col >> piv) & 1:
                col ^= bcol
                tag ^= btag
        if col == 0:
            out.append(tag)
        else:
            basis.append((col, tag))
    return out
