"""Independent reference computations used to cross-check the library.

Nothing here imports hcalg.  Weights come from textbook Cartan matrices
and Kostant's multiplicity formula, Killing forms from explicit matrix Lie
algebras through sympy, and sl2 normal forms from a string rewriter.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import product

import sympy

# A[i][j] = <alpha_j, alpha_i-check>; simple roots ordered as in the library
CARTAN = {
    ("A", 1): ((2,),),
    ("A", 2): ((2, -1), (-1, 2)),
    ("A", 3): ((2, -1, 0), (-1, 2, -1), (0, -1, 2)),
    ("B", 2): ((2, -1), (-2, 2)),
    ("B", 3): ((2, -1, 0), (-1, 2, -1), (0, -2, 2)),
    ("C", 3): ((2, -1, 0), (-1, 2, -2), (0, -1, 2)),
    ("G", 2): ((2, -3), (-1, 2)),
    ("D", 4): ((2, -1, 0, 0), (-1, 2, -1, -1), (0, -1, 2, 0), (0, -1, 0, 2)),
}

WEYL_ORDER = {("A", 1): 2, ("A", 2): 6, ("A", 3): 24, ("B", 2): 8, ("B", 3): 48, ("C", 3): 48, ("G", 2): 12, ("D", 4): 192}

# degrees of the basic invariants
DEGREES = {("A", 1): (2,), ("A", 2): (2, 3), ("A", 3): (2, 3, 4), ("B", 2): (2, 4), ("B", 3): (2, 4, 6), ("G", 2): (2, 6)}


def poincare_harmonics(key) -> list[int]:
    """Coefficients of prod_i (1 + q + ... + q^(d_i - 1))."""
    coeffs = [1]
    for d in DEGREES[key]:
        new = [0] * (len(coeffs) + d - 1)
        for i, c in enumerate(coeffs):
            for j in range(d):
                new[i + j] += c
        coeffs = new
    return coeffs


def invariant_dims(key, max_degree: int) -> list[int]:
    """Dimensions of the degree-d invariants: partitions of d into the basic degrees."""
    out = []
    for d in range(max_degree + 1):
        cnt = 0
        degs = DEGREES[key]
        for e in product(*[range(d // g + 1) for g in degs]):
            if sum(a * g for a, g in zip(e, degs)) == d:
                cnt += 1
        out.append(cnt)
    return out


class Lattice:
    """Root data in Dynkin label coordinates, built from a Cartan matrix alone."""

    def __init__(self, key):
        A = CARTAN[key]
        self.A = A
        self.l = l = len(A)
        self.simple = [tuple(A[i][j] for i in range(l)) for j in range(l)]
        self.Ainv = sympy.Matrix(A).inv()  # labels -> simple-root coefficients
        roots = set(self.simple)
        frontier = list(roots)
        while frontier:
            nxt = []
            for r in frontier:
                for i in range(l):
                    s = self.reflect(i, r)
                    if s not in roots:
                        roots.add(s)
                        nxt.append(s)
            frontier = nxt
        self.positive = sorted(r for r in roots if all(c >= 0 for c in self.coeffs(r)))
        self.rho = tuple(1 for _ in range(l))
        # d_j = (alpha_j, alpha_j)/2 up to scale, from d_i a_ij = d_j a_ji
        d = [None] * l
        d[0] = sympy.Integer(1)
        while None in d:
            for i in range(l):
                for j in range(l):
                    if A[i][j] and d[i] is not None and d[j] is None:
                        d[j] = d[i] * sympy.Integer(A[i][j]) / A[j][i]
        self.d = d

    def reflect(self, i: int, mu):
        a = self.simple[i]
        return tuple(m - mu[i] * x for m, x in zip(mu, a))

    def coeffs(self, mu):
        return tuple(sympy.Rational(x) for x in self.Ainv * sympy.Matrix(mu))

    def signed_orbit(self, mu):
        """w(mu) -> sgn(w) for regular mu (the map w -> w(mu) is then injective)."""
        seen = {mu: 0}
        frontier = [mu]
        while frontier:
            nxt = []
            for m in frontier:
                for i in range(self.l):
                    s = self.reflect(i, m)
                    if s not in seen:
                        seen[s] = seen[m] + 1
                        nxt.append(s)
            frontier = nxt
        return {m: (-1) ** n for m, n in seen.items()}

    def partition_count(self, mu) -> int:
        c = self.coeffs(mu)
        if any(x.q != 1 for x in c):
            return 0
        pos = tuple(tuple(int(x) for x in self.coeffs(r)) for r in self.positive)
        return _kostant(tuple(int(x) for x in c), pos)

    def multiplicity(self, lam, mu) -> int:
        """Kostant: sum_w sgn(w) P(w(lam + rho) - (mu + rho))."""
        lr = tuple(a + b for a, b in zip(lam, self.rho))
        return sum(
            sign * self.partition_count(tuple(a - b - c for a, b, c in zip(img, mu, self.rho)))
            for img, sign in self.signed_orbit(lr).items()
        )

    def form(self, mu, root) -> sympy.Rational:
        """(mu, root) with (omega_i, alpha_j) = delta_ij d_j."""
        c = self.coeffs(root)
        return sum(mu[j] * c[j] * self.d[j] for j in range(self.l))

    def weyl_dimension(self, lam) -> int:
        lr = tuple(a + 1 for a in lam)
        num = sympy.Integer(1)
        for r in self.positive:
            num *= self.form(lr, r) / self.form(self.rho, r)
        return int(num)


@lru_cache(maxsize=None)
def lattice(key) -> Lattice:
    return Lattice(key)


@lru_cache(maxsize=None)
def _kostant(c: tuple, pos: tuple) -> int:
    if any(x < 0 for x in c):
        return 0
    if not pos:
        return 1 if all(x == 0 for x in c) else 0
    first, rest = pos[0], pos[1:]
    total = 0
    cur = c
    while all(x >= 0 for x in cur):
        total += _kostant(cur, rest)
        cur = tuple(x - y for x, y in zip(cur, first))
    return total


def kostant_weights(key, lam) -> dict[tuple, int]:
    """All weights with multiplicity, keys in Dynkin labels."""
    L = lattice(key)
    out = {}
    # weights lie in lam - Q+, bounded by the height of lam - w0 lam; search the box
    frontier = {tuple(lam)}
    seen = set()
    while frontier:
        nxt = set()
        for mu in frontier:
            if mu in seen:
                continue
            seen.add(mu)
            m = L.multiplicity(tuple(lam), mu)
            if m:
                out[mu] = m
                for r in L.simple:
                    nxt.add(tuple(a - b for a, b in zip(mu, r)))
        frontier = nxt
    return out


# ---------------------------------------------------------------------------
# Killing forms of explicit matrix algebras


def _matrix_algebra(kind: str):
    """Basis of a split matrix Lie algebra and a diagonal Cartan parametrisation."""
    if kind == "sl2":
        n = 2
        t = sympy.symbols("t0")
        diag = [t, -t]
        cond = lambda X: [X.trace()]
        tvars = [t]
    elif kind == "sl3":
        n = 3
        t0, t1 = sympy.symbols("t0 t1")
        diag = [t0, t1, -t0 - t1]
        cond = lambda X: [X.trace()]
        tvars = [t0, t1]
    elif kind == "so5":
        n = 5
        t0, t1 = sympy.symbols("t0 t1")
        diag = [t0, t1, 0, -t1, -t0]
        J = sympy.Matrix(5, 5, lambda i, j: 1 if i + j == 4 else 0)
        cond = lambda X: list(X.T * J + J * X)
        tvars = [t0, t1]
    elif kind == "sp4":
        n = 4
        t0, t1 = sympy.symbols("t0 t1")
        diag = [t0, t1, -t1, -t0]
        J = sympy.Matrix([[0, 0, 0, 1], [0, 0, 1, 0], [0, -1, 0, 0], [-1, 0, 0, 0]])
        cond = lambda X: list(X.T * J + J * X)
        tvars = [t0, t1]
    else:
        raise ValueError(kind)
    xs = sympy.symbols(f"x0:{n * n}")
    X = sympy.Matrix(n, n, xs)
    eqs = [e for e in cond(X) if e != 0]
    sol = sympy.linsolve(eqs, xs) if eqs else [xs]
    gen = list(sol)[0]
    free = sorted(set().union(*[sympy.sympify(g).free_symbols for g in gen]), key=str)
    basis = []
    for f in free:
        basis.append(sympy.Matrix(n, n, [sympy.sympify(g).subs({v: (1 if v == f else 0) for v in free}) for g in gen]))
    return n, basis, diag, tvars


def killing_root_lengths(kind: str) -> list[Fraction]:
    """Sorted distinct values of <alpha, alpha> for the dual Killing form."""
    n, basis, diag, tvars = _matrix_algebra(kind)
    flat = sympy.Matrix([list(b) for b in basis]).T  # columns are basis vectors

    def coords(M):
        sol = flat.solve_least_squares(sympy.Matrix(list(M)))
        return sol

    def ad(H):
        return sympy.Matrix.hstack(*[coords(H * b - b * H) for b in basis])

    Hs = []
    for v in tvars:
        d = [sympy.sympify(x).subs({u: (1 if u == v else 0) for u in tvars}) for x in diag]
        Hs.append(sympy.diag(*d))
    ads = [ad(H) for H in Hs]
    B = sympy.Matrix(len(Hs), len(Hs), lambda i, j: (ads[i] * ads[j]).trace())
    Binv = B.inv()
    roots = set()
    for b in basis:
        for i in range(n):
            for j in range(n):
                if i != j and b[i, j] != 0:
                    f = [sympy.sympify(diag[i] - diag[j]).coeff(v) for v in tvars]
                    if any(f):
                        roots.add(tuple(f))
    vals = set()
    for r in roots:
        v = sympy.Matrix(r)
        vals.add((v.T * Binv * v)[0, 0])
    return sorted(Fraction(int(sympy.fraction(x)[0]), int(sympy.fraction(x)[1])) for x in vals)


# ---------------------------------------------------------------------------
# sl2 normal form by string rewriting, letters f < h < e


_RULES = {
    ("h", "f"): [(1, "fh"), (-2, "f")],
    ("e", "f"): [(1, "fe"), (1, "h")],
    ("e", "h"): [(1, "he"), (-2, "e")],
}
_ORDER = {"f": 0, "h": 1, "e": 2}


def sl2_normal_form(word: str) -> dict[tuple[int, int, int], int]:
    """Coefficients of f^a h^b e^c in the normal form of a word over {e, f, h}."""
    out: dict[tuple[int, int, int], int] = {}
    todo = [(word, 1)]
    while todo:
        w, c = todo.pop()
        for i in range(len(w) - 1):
            if _ORDER[w[i]] > _ORDER[w[i + 1]]:
                for cc, rep in _RULES[(w[i], w[i + 1])]:
                    todo.append((w[:i] + rep + w[i + 2 :], c * cc))
                break
        else:
            key = (w.count("f"), w.count("h"), w.count("e"))
            out[key] = out.get(key, 0) + c
    return {k: v for k, v in out.items() if v}


# ---------------------------------------------------------------------------
# Omega_W from explicit matrices of W(B2)


def omega_w_b2_explicit() -> dict[str, Fraction]:
    """Scalars of sum <a,a>(1 - s_a) for the five irreducibles of W(B2).

    Killing lengths: long roots 1/3, short roots 1/6 (from so5 above).
    """
    long_len, short_len = Fraction(1, 3), Fraction(1, 6)
    # reflections in e1 - e2, e1 + e2 (long), e1, e2 (short) as 2x2 integer matrices
    refl = {
        "e1-e2": ((0, 1), (1, 0)),
        "e1+e2": ((0, -1), (-1, 0)),
        "e1": ((-1, 0), (0, 1)),
        "e2": ((1, 0), (0, -1)),
    }
    length = {"e1-e2": long_len, "e1+e2": long_len, "e1": short_len, "e2": short_len}
    short = {"e1", "e2"}
    reps = {
        "triv": lambda a: 1,
        "sgn": lambda a: -1,
        "tau": lambda a: -1 if a in short else 1,
        "tau_sgn": lambda a: 1 if a in short else -1,
    }
    out = {}
    for name, rho in reps.items():
        out[name] = sum((length[a] * (1 - rho(a)) for a in refl), Fraction(0))
    M = [[Fraction(0)] * 2 for _ in range(2)]
    for a, s in refl.items():
        for i in range(2):
            for j in range(2):
                M[i][j] += length[a] * ((1 if i == j else 0) - s[i][j])
    assert M[0][1] == M[1][0] == 0 and M[0][0] == M[1][1]
    out["refl"] = M[0][0]
    return out


# ---------------------------------------------------------------------------
# frozen values (computed once by the oracles above, then pinned)

# dominant weight multiplicities, Dynkin labels
FROZEN_DOMINANT = {
    ("A", 2, (2, 1)): {(2, 1): 1, (0, 2): 1, (1, 0): 2},
    ("B", 2, (1, 2)): {(1, 2): 1, (2, 0): 1, (0, 2): 2, (1, 0): 3, (0, 0): 3},
    ("B", 2, (2, 1)): {(2, 1): 1, (0, 3): 1, (1, 1): 2, (0, 1): 3},
    ("G", 2, (1, 1)): {(1, 1): 1, (2, 0): 2, (0, 1): 2, (1, 0): 4, (0, 0): 4},
}
# zero weight multiplicities of the B2 irreps of dimension <= 40 lying in the root lattice
FROZEN_B2_ZERO = {(0, 0): 1, (1, 0): 1, (0, 2): 2, (2, 0): 2, (3, 0): 2, (0, 4): 3, (1, 2): 3}
