"""Exact integer and rational matrix routines.

Everything here works on plain Python lists of ints (or Fractions) so the
arithmetic never leaves the exact domain.  Matrices are lists of rows.
"""

from __future__ import annotations

from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

Matrix = List[List[int]]


def identity(n: int) -> Matrix:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def transpose(a: Sequence[Sequence]) -> list:
    return [list(col) for col in zip(*a)]


def matvec(a: Sequence[Sequence], x: Sequence) -> list:
    return [sum(aij * xj for aij, xj in zip(row, x)) for row in a]


def matmul(a: Sequence[Sequence], b: Sequence[Sequence]) -> list:
    bt = list(zip(*b))
    return [[sum(x * y for x, y in zip(row, col)) for col in bt] for row in a]


def bilinear(g: Sequence[Sequence[int]], x: Sequence, y: Sequence):
    return sum(xi * sum(gij * yj for gij, yj in zip(row, y)) for xi, row in zip(x, g))


def det(a: Sequence[Sequence[int]]) -> int:
    """Determinant by fraction-free (Bareiss) elimination."""
    m = [list(row) for row in a]
    n = len(m)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def xgcd(a: int, b: int) -> Tuple[int, int, int]:
    """Return (g, s, t) with s*a + t*b = g = gcd(a, b) >= 0."""
    s0, s1, t0, t1 = 1, 0, 0, 1
    while b:
        q, r = divmod(a, b)
        a, b = b, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if a < 0:
        a, s0, t0 = -a, -s0, -t0
    return a, s0, t0


class ColumnEchelon:
    """Unimodular column reduction ``A @ U = H`` of an integer matrix.

    ``H`` has its nonzero columns first, each with a pivot below the
    pivot of the previous one and zeros above it.  The trailing columns of
    ``U`` form a basis of the integer kernel of ``A``.
    """

    def __init__(self, a: Sequence[Sequence[int]], ncols: Optional[int] = None):
        h = [list(row) for row in a]
        n = ncols if ncols is not None else (len(h[0]) if h else 0)
        u = identity(n)
        pivot_rows: List[int] = []
        k = 0
        for i, row in enumerate(h):
            if k == n:
                break
            for j in range(k + 1, n):
                x, y = row[k], row[j]
                if y == 0:
                    continue
                if x != 0 and y % x == 0:
                    f = y // x
                    _colop_sub(h, u, j, k, f)
                    continue
                g, s, t = xgcd(x, y)
                _colop_mix(h, u, k, j, s, t, -y // g, x // g)
            if row[k] != 0:
                if row[k] < 0:
                    _colop_neg(h, u, k)
                pivot_rows.append(i)
                k += 1
        self.h = h
        self.u = u
        self.rank = k
        self.pivot_rows = pivot_rows
        self.ncols = n

    def kernel(self) -> Matrix:
        """Kernel basis vectors (as a list of vectors)."""
        return [[self.u[i][j] for i in range(self.ncols)] for j in range(self.rank, self.ncols)]

    def solve(self, b: Sequence[int]) -> Optional[List[int]]:
        """One integer solution of ``A x = b``, or None if there is none."""
        h = self.h
        y = [0] * self.ncols
        for j, i in enumerate(self.pivot_rows):
            rest = b[i] - sum(h[i][l] * y[l] for l in range(j))
            q, r = divmod(rest, h[i][j])
            if r:
                return None
            y[j] = q
        for i in range(len(h)):
            if sum(h[i][l] * y[l] for l in range(self.rank)) != b[i]:
                return None
        return matvec(self.u, y)


def _colop_sub(h, u, j, k, f):
    # col_j -= f * col_k
    for row in h:
        row[j] -= f * row[k]
    for row in u:
        row[j] -= f * row[k]


def _colop_neg(h, u, k):
    for row in h:
        row[k] = -row[k]
    for row in u:
        row[k] = -row[k]


def _colop_mix(h, u, k, j, s, t, p, q):
    # (col_k, col_j) <- (s col_k + t col_j, p col_k + q col_j), det = sq - tp = 1
    for mat in (h, u):
        for row in mat:
            a, b = row[k], row[j]
            row[k] = s * a + t * b
            row[j] = p * a + q * b


def solve_mod2(a: Sequence[Sequence[int]], b: Sequence[int]) -> Optional[List[int]]:
    """Solve ``a x = b`` over GF(2); returns a 0/1 vector or None."""
    n = len(a[0]) if a else 0
    rows = []
    for row, bi in zip(a, b):
        mask = 0
        for j, v in enumerate(row):
            if v & 1:
                mask |= 1 << j
        rows.append([mask, bi & 1])
    pivots = []
    r = 0
    for col in range(n):
        bit = 1 << col
        sel = next((i for i in range(r, len(rows)) if rows[i][0] & bit), None)
        if sel is None:
            continue
        rows[r], rows[sel] = rows[sel], rows[r]
        for i in range(len(rows)):
            if i != r and rows[i][0] & bit:
                rows[i][0] ^= rows[r][0]
                rows[i][1] ^= rows[r][1]
        pivots.append(col)
        r += 1
    if any(mask == 0 and rhs for mask, rhs in rows[r:]):
        return None
    x = [0] * n
    for i, col in enumerate(pivots):
        x[col] = rows[i][1]
    return x


def lll_reduce(basis: List[List[int]], form: Sequence[Sequence[int]], delta=Fraction(3, 4)) -> List[List[int]]:
    """LLL-reduce integer vectors with respect to a positive definite form.

    ``basis`` holds ambient vectors; inner products are ``u^T form v``.  The
    result spans the same lattice.  Exact rational Gram-Schmidt throughout.
    """
    b = [list(v) for v in basis]
    n = len(b)
    if n <= 1:
        return b

    def ip(u, v):
        return bilinear(form, u, v)

    gram = [[ip(b[i], b[j]) for j in range(n)] for i in range(n)]

    def gso():
        mu = [[Fraction(0)] * n for _ in range(n)]
        bn = [Fraction(0)] * n
        for i in range(n):
            for j in range(i):
                s = Fraction(gram[i][j])
                for l in range(j):
                    s -= mu[j][l] * mu[i][l] * bn[l]
                mu[i][j] = s / bn[j]
            s = Fraction(gram[i][i])
            for l in range(i):
                s -= mu[i][l] * mu[i][l] * bn[l]
            bn[i] = s
        return mu, bn

    def add_multiple(i, j, f):
        # b_i -= f b_j, keeping the integer Gram matrix in sync
        b[i] = [x - f * y for x, y in zip(b[i], b[j])]
        gii = gram[i][i] - 2 * f * gram[i][j] + f * f * gram[j][j]
        for l in range(n):
            gram[i][l] -= f * gram[j][l]
        for l in range(n):
            gram[l][i] = gram[i][l]
        gram[i][i] = gii

    mu, bn = gso()
    k = 1
    while k < n:
        for j in range(k - 1, -1, -1):
            f = round(mu[k][j])
            if f:
                add_multiple(k, j, f)
                for l in range(j):
                    mu[k][l] -= f * mu[j][l]
                mu[k][j] -= f
        if bn[k] >= (delta - mu[k][k - 1] ** 2) * bn[k - 1]:
            k += 1
        else:
            b[k], b[k - 1] = b[k - 1], b[k]
            gram[k], gram[k - 1] = gram[k - 1], gram[k]
            for row in gram:
                row[k], row[k - 1] = row[k - 1], row[k]
            mu, bn = gso()
            k = max(k - 1, 1)
    return b


def ldl(q: Sequence[Sequence[int]]) -> Tuple[List[List[Fraction]], List[Fraction]]:
    """Factor a positive definite ``q = R^T diag(D) R`` with R unit upper triangular.

    Returns (R, D).  Raises ValueError when q is not positive definite.
    """
    n = len(q)
    r = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    d: List[Fraction] = [Fraction(0)] * n
    for i in range(n):
        s = Fraction(q[i][i]) - sum((r[l][i] ** 2 * d[l] for l in range(i)), Fraction(0))
        if s <= 0:
            raise ValueError("form is not positive definite")
        d[i] = s
        for j in range(i + 1, n):
            t = Fraction(q[i][j]) - sum((r[l][i] * r[l][j] * d[l] for l in range(i)), Fraction(0))
            r[i][j] = t / s
    return r, d


def solve_rational(a: Sequence[Sequence], b: Sequence) -> List[Fraction]:
    """Solve a nonsingular square system exactly."""
    n = len(a)
    m = [[Fraction(v) for v in row] + [Fraction(bi)] for row, bi in zip(a, b)]
    for c in range(n):
        p = next(i for i in range(c, n) if m[i][c] != 0)
        m[c], m[p] = m[p], m[c]
        pv = m[c][c]
        for i in range(n):
            if i != c and m[i][c] != 0:
                f = m[i][c] / pv
                m[i] = [x - f * y for x, y in zip(m[i], m[c])]
    return [m[i][n] / m[i][i] for i in range(n)]


def inverse_rational(a: Sequence[Sequence[int]]) -> List[List[Fraction]]:
    """Exact inverse of a nonsingular square matrix by Gauss-Jordan."""
    n = len(a)
    m = [[Fraction(v) for v in row] + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(a)]
    for c in range(n):
        p = next(i for i in range(c, n) if m[i][c] != 0)
        m[c], m[p] = m[p], m[c]
        pv = m[c][c]
        m[c] = [x / pv for x in m[c]]
        for i in range(n):
            f = m[i][c]
            if i != c and f != 0:
                m[i] = [x - f * y for x, y in zip(m[i], m[c])]
    return [row[n:] for row in m]
