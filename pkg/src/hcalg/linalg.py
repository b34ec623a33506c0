"""Exact linear algebra over Q (and fraction-free rank over Q[k]).

Matrices are lists of rows; vectors are lists or tuples.  Everything is exact,
so results are deterministic and can be compared with ``==``.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .rational import KPoly

Matrix = list[list[Fraction]]


def zeros(r: int, c: int) -> Matrix:
    return [[Fraction(0)] * c for _ in range(r)]


def identity(n: int) -> Matrix:
    m = zeros(n, n)
    for i in range(n):
        m[i][i] = Fraction(1)
    return m


def transpose(m: Sequence[Sequence], ncols: int | None = None) -> Matrix:
    if not m:
        return [[] for _ in range(ncols or 0)]
    return [list(col) for col in zip(*m)]


def matmul(a: Sequence[Sequence], b: Sequence[Sequence], inner: int | None = None, ncols: int | None = None) -> Matrix:
    """Product of an r x n and an n x c matrix; ``ncols`` is needed when ``b`` has no rows."""
    if ncols is None:
        ncols = len(b[0]) if b else 0
    out = zeros(len(a), ncols)
    for i, row in enumerate(a):
        oi = out[i]
        for t, x in enumerate(row):
            if x:
                bt = b[t]
                for j in range(ncols):
                    y = bt[j]
                    if y:
                        oi[j] += x * y
    return out


def matvec(a: Sequence[Sequence], v: Sequence) -> list:
    return [sum((x * y for x, y in zip(row, v) if x and y), Fraction(0)) for row in a]


def rref(m: Sequence[Sequence], ncols: int | None = None) -> tuple[Matrix, list[int]]:
    """Reduced row echelon form; returns the nonzero rows and their pivot columns."""
    rows = [list(r) for r in m]
    if ncols is None:
        ncols = len(rows[0]) if rows else 0
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, len(rows)) if rows[i][c]), None)
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        piv = rows[r][c]
        if piv != 1:
            rows[r] = [x / piv for x in rows[r]]
        pr = rows[r]
        for i in range(len(rows)):
            if i != r and rows[i][c]:
                f = rows[i][c]
                ri = rows[i]
                for j in range(c, ncols):
                    if pr[j]:
                        ri[j] -= f * pr[j]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows[:r], pivots


def rank(m: Sequence[Sequence], ncols: int | None = None) -> int:
    return len(rref(m, ncols)[1])


def nullspace(m: Sequence[Sequence], ncols: int) -> Matrix:
    """Basis of {v : m v = 0}, one vector per free column (standard RREF basis)."""
    r, piv = rref(m, ncols)
    free = [c for c in range(ncols) if c not in set(piv)]
    basis = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for row, p in zip(r, piv):
            if row[f]:
                v[p] = -row[f]
        basis.append(v)
    return basis


def row_basis(vectors: Sequence[Sequence], ncols: int) -> Matrix:
    """Canonical (RREF) basis of the span of ``vectors``."""
    return rref(vectors, ncols)[0]


def in_span(basis: Sequence[Sequence], v: Sequence, ncols: int) -> bool:
    return rank(list(basis) + [list(v)], ncols) == rank(basis, ncols)


def coordinates(basis: Sequence[Sequence], v: Sequence) -> list[Fraction] | None:
    """Solve ``sum_i c_i basis[i] = v``; ``None`` if ``v`` is outside the span.

    ``basis`` must be linearly independent.
    """
    n = len(basis)
    ncols = len(v)
    # augmented system: columns are basis vectors
    aug = [[basis[i][j] for i in range(n)] + [v[j]] for j in range(ncols)]
    r, piv = rref(aug, n + 1)
    if n in piv:
        return None
    if len(piv) != n:
        raise ValueError("basis is linearly dependent")
    c = [Fraction(0)] * n
    for row, p in zip(r, piv):
        c[p] = row[n]
    return c


def intersect(u: Sequence[Sequence], w: Sequence[Sequence], ncols: int) -> Matrix:
    """Canonical basis of span(u) ∩ span(w)."""
    if not u or not w:
        return []
    # solve a.u = b.w
    m = transpose([list(x) for x in u] + [[-y for y in x] for x in w], ncols)
    ker = nullspace(m, len(u) + len(w))
    vecs = []
    for k in ker:
        vec = [Fraction(0)] * ncols
        for i, ui in enumerate(u):
            if k[i]:
                for j in range(ncols):
                    vec[j] += k[i] * ui[j]
        vecs.append(vec)
    return row_basis(vecs, ncols)


def subspace_sum(u: Sequence[Sequence], w: Sequence[Sequence], ncols: int) -> Matrix:
    return row_basis(list(u) + list(w), ncols)


def restrict(op: Sequence[Sequence], basis: Sequence[Sequence]) -> Matrix | None:
    """Matrix R with op(b_j) = sum_i R[i][j] b_i, or ``None`` if span(basis) is not op-stable."""
    n = len(basis)
    out = zeros(n, n)
    for j, b in enumerate(basis):
        img = matvec(op, b)
        c = coordinates(basis, img)
        if c is None:
            return None
        for i in range(n):
            out[i][j] = c[i]
    return out


def trace(m: Sequence[Sequence]) -> Fraction:
    return sum((m[i][i] for i in range(len(m))), Fraction(0))


def det(m: Sequence[Sequence]) -> Fraction:
    rows = [list(r) for r in m]
    n = len(rows)
    d = Fraction(1)
    for c in range(n):
        p = next((i for i in range(c, n) if rows[i][c]), None)
        if p is None:
            return Fraction(0)
        if p != c:
            rows[c], rows[p] = rows[p], rows[c]
            d = -d
        piv = rows[c][c]
        d *= piv
        for i in range(c + 1, n):
            if rows[i][c]:
                f = rows[i][c] / piv
                for j in range(c, n):
                    rows[i][j] -= f * rows[c][j]
    return d


def inverse(m: Sequence[Sequence]) -> Matrix:
    n = len(m)
    aug = [list(m[i]) + identity(n)[i] for i in range(n)]
    r, piv = rref(aug, 2 * n)
    if piv[:n] != list(range(n)) or len(piv) < n:
        raise ZeroDivisionError("singular matrix")
    return [row[n:] for row in r]


def charpoly(m: Sequence[Sequence]) -> list[Fraction]:
    """Coefficients c_0..c_n of det(t I - m), lowest degree first (Faddeev-LeVerrier)."""
    n = len(m)
    coeffs = [Fraction(0)] * (n + 1)
    coeffs[n] = Fraction(1)
    mk = zeros(n, n)
    ident = identity(n)
    for k in range(1, n + 1):
        prev = coeffs[n - k + 1]
        base = [[mk[i][j] + prev * ident[i][j] for j in range(n)] for i in range(n)]
        mk = matmul(m, base, ncols=n)
        coeffs[n - k] = -trace(mk) / k
    return coeffs


def poly_from_roots(roots: Sequence) -> list[Fraction]:
    """Coefficients (lowest first) of prod (t - r)."""
    p = [Fraction(1)]
    for r in roots:
        q = [Fraction(0)] * (len(p) + 1)
        for i, a in enumerate(p):
            q[i + 1] += a
            q[i] -= r * a
        p = q
    return p


def fraction_free_rank(m: Sequence[Sequence], ncols: int | None = None) -> int:
    """Rank over the fraction field of Q[k] by Bareiss elimination.

    Entries may be ints, Fractions or :class:`KPoly`.
    """
    rows = [[KPoly.lift(x) for x in r] for r in m]
    if ncols is None:
        ncols = len(rows[0]) if rows else 0
    prev = KPoly.lift(1)
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, len(rows)) if rows[i][c]), None)
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        piv = rows[r][c]
        for i in range(r + 1, len(rows)):
            a = rows[i][c]
            rows[i] = [
                (piv * rows[i][j] - a * rows[r][j]).exact_div(prev) if j > c else KPoly()
                for j in range(ncols)
            ]
        prev = piv
        r += 1
        if r == len(rows):
            break
    return r
