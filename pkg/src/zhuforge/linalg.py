"""Exact linear algebra over Fraction.

Two small tools used throughout the package: an incremental row-space
builder for sparse vectors indexed by arbitrary hashable coordinates
(words, monomials), and dense matrix helpers for the finite-dimensional
models.  Everything is exact; no floats anywhere.
"""

from __future__ import annotations

from fractions import Fraction

ZERO = Fraction(0)


class SpanBuilder:
    """Incrementally built row-echelon span of sparse Fraction vectors.

    A vector is a dict mapping coordinates to nonzero Fractions.  ``keyfn``
    must be a total order on coordinates; the largest coordinate of a row
    is its pivot.  Stored rows are normalized to pivot coefficient 1, and
    every stored row's pivot is maximal within that row, so elimination
    always makes strict progress.
    """

    def __init__(self, keyfn=None):
        self.keyfn = keyfn if keyfn is not None else (lambda c: c)
        self.rows: dict = {}

    def __len__(self) -> int:
        return len(self.rows)

    def reduce(self, vec: dict):
        """Eliminate known pivots from `vec`.

        Returns (residue, pivot): pivot is None when the vector lies in
        the span, otherwise the residue's maximal coordinate.
        """
        vec = {c: x for c, x in vec.items() if x}
        while vec:
            p = max(vec, key=self.keyfn)
            row = self.rows.get(p)
            if row is None:
                return vec, p
            c = vec[p]
            for coord, rx in row.items():
                nx = vec.get(coord, ZERO) - c * rx
                if nx:
                    vec[coord] = nx
                else:
                    vec.pop(coord, None)
        return {}, None

    def add(self, vec: dict) -> bool:
        """Insert `vec` into the span; True iff it enlarged the span."""
        vec, p = self.reduce(vec)
        if p is None:
            return False
        lead = vec[p]
        self.rows[p] = {c: x / lead for c, x in vec.items()}
        return True

    def contains(self, vec: dict) -> bool:
        _, p = self.reduce(vec)
        return p is None

    def residue(self, vec: dict) -> dict:
        """Fully reduce `vec`, eliminating every pivot coordinate.

        Unlike `reduce`, which stops at the first coordinate that is not
        a pivot, this keeps going, so the result has no pivot coordinate
        in its support at all.
        """
        vec = {c: x for c, x in vec.items() if x}
        out: dict = {}
        while vec:
            p = max(vec, key=self.keyfn)
            row = self.rows.get(p)
            if row is None:
                out[p] = vec.pop(p)
                continue
            c = vec[p]
            for coord, rx in row.items():
                nx = vec.get(coord, ZERO) - c * rx
                if nx:
                    vec[coord] = nx
                else:
                    vec.pop(coord, None)
        return out


# ----------------------------------------------------------------------
# dense matrices (lists of lists of Fraction)

def mat_zero(n: int):
    return [[ZERO] * n for _ in range(n)]


def mat_identity(n: int):
    return [[Fraction(1) if r == c else ZERO for c in range(n)]
            for r in range(n)]


def mat_scale(a, c):
    c = Fraction(c)
    return [[x * c for x in row] for row in a]


def mat_add(a, b):
    return [[x + y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def mat_mul(a, b):
    n, m = len(a), len(b[0])
    inner = len(b)
    out = [[ZERO] * m for _ in range(n)]
    for r in range(n):
        ar = a[r]
        orow = out[r]
        for k in range(inner):
            x = ar[k]
            if not x:
                continue
            bk = b[k]
            for c in range(m):
                if bk[c]:
                    orow[c] += x * bk[c]
    return out


def mat_is_zero(a) -> bool:
    return all(not x for row in a for x in row)


def mat_from_rows(rows):
    """Normalize a nested sequence of numbers into Fraction rows."""
    return [[Fraction(x) for x in row] for row in rows]
