"""Exact linear algebra over Fraction: RREF, kernels, incremental row spans.

Everything is deterministic: no pivot-size heuristics, columns are processed
left to right and the first row with a nonzero entry wins. Vectors and
matrices are plain lists of Fractions.
"""

from __future__ import annotations

from fractions import Fraction


def rref(mat):
    """Reduced row echelon form. Returns (rows, pivot_columns); input unchanged."""
    rows = [list(map(Fraction, r)) for r in mat]
    if not rows:
        return [], []
    ncols = len(rows[0])
    pivots = []
    r = 0
    for c in range(ncols):
        pr = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if pr is None:
            continue
        rows[r], rows[pr] = rows[pr], rows[r]
        inv = 1 / rows[r][c]
        rows[r] = [v * inv for v in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows[:r], pivots


def rank(mat):
    return len(rref(mat)[1])


def kernel_basis(mat, ncols):
    """Basis of the right kernel of `mat` (rows of length ncols).

    One basis vector per free column, free columns in increasing order, each
    vector carrying 1 at its own free column. Deterministic.
    """
    rows, pivots = rref(mat)
    pivot_set = set(pivots)
    basis = []
    for free in range(ncols):
        if free in pivot_set:
            continue
        vec = [Fraction(0)] * ncols
        vec[free] = Fraction(1)
        for r, p in enumerate(pivots):
            vec[p] = -rows[r][free]
        basis.append(vec)
    return basis


class SpanQ:
    """Incremental row space over Q, kept in reduced echelon form."""

    def __init__(self, ncols):
        self.ncols = ncols
        self.rows = []       # echelon rows, pivot columns strictly increasing
        self.pivots = []

    @property
    def dim(self):
        return len(self.rows)

    def reduce(self, vec):
        """Residual of vec after elimination against the span (fresh list)."""
        v = list(map(Fraction, vec))
        for row, p in zip(self.rows, self.pivots):
            if v[p] != 0:
                f = v[p]
                v = [a - f * b for a, b in zip(v, row)]
        return v

    def contains(self, vec):
        return all(a == 0 for a in self.reduce(vec))

    def add(self, vec):
        """Insert vec; returns True if it enlarged the span."""
        v = self.reduce(vec)
        p = next((i for i, a in enumerate(v) if a != 0), None)
        if p is None:
            return False
        inv = 1 / v[p]
        v = [a * inv for a in v]
        for i in range(len(self.rows)):
            if self.rows[i][p] != 0:
                f = self.rows[i][p]
                self.rows[i] = [a - f * b for a, b in zip(self.rows[i], v)]
        at = next((i for i, q in enumerate(self.pivots) if q > p), len(self.pivots))
        self.rows.insert(at, v)
        self.pivots.insert(at, p)
        return True


def det(mat):
    """Determinant by Laplace expansion along the first row.

    Entries only need ring arithmetic (+, -, *), so this works for Fractions
    and for Polynomials alike. Intended for the small matrices (n <= 3) that
    show up in Hessian cofactor computations.
    """
    n = len(mat)
    if n == 0:
        raise ValueError("empty matrix")
    if n == 1:
        return mat[0][0]
    if n == 2:
        return mat[0][0] * mat[1][1] - mat[0][1] * mat[1][0]
    total = None
    for j in range(n):
        minor = [row[:j] + row[j + 1:] for row in mat[1:]]
        term = mat[0][j] * det(minor)
        if j % 2:
            term = -term
        total = term if total is None else total + term
    return total
