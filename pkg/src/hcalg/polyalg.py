"""Polynomials on the weight space with the Weyl group action.

A :class:`Polynomial` in ``n`` variables is a dict from exponent tuples to
nonzero coefficients.  Coefficients are Fractions, or :class:`KPoly` when a
formal parameter is carried along.  The variables are the working
coordinates of :mod:`hcalg.rootsys`, so a polynomial is a function on the
weight space and ``w`` acts by ``(w f)(x) = f(w^-1 x)``.

Monomials are ordered graded-lexicographically: first by total degree, then
by the exponent tuple compared lexicographically (ascending).  Serialization
and all echelon bases use that order.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import Iterable, Mapping, Sequence

from . import linalg
from .errors import DimensionMismatch, NotDivisible
from .rational import KPoly, Q, qstr

Exp = tuple[int, ...]


def _coef(x):
    if isinstance(x, (KPoly, Fraction)):
        return x
    return Q(x)


class Polynomial:
    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms: Mapping[Exp, object] | None = None):
        self.n = n
        t = {}
        if terms:
            for e, c in terms.items():
                if len(e) != n:
                    raise DimensionMismatch(f"exponent {e} has wrong length for {n} variables")
                if c:
                    t[tuple(e)] = _coef(c)
        self.terms: dict[Exp, object] = t

    # -- constructors -------------------------------------------------------
    @classmethod
    def zero(cls, n: int) -> "Polynomial":
        return cls(n)

    @classmethod
    def constant(cls, n: int, c) -> "Polynomial":
        return cls(n, {(0,) * n: c})

    @classmethod
    def monomial(cls, e: Sequence[int], c=1) -> "Polynomial":
        return cls(len(e), {tuple(e): c})

    @classmethod
    def variable(cls, n: int, i: int) -> "Polynomial":
        e = [0] * n
        e[i] = 1
        return cls(n, {tuple(e): 1})

    @classmethod
    def linear(cls, coeffs: Sequence, const=0) -> "Polynomial":
        n = len(coeffs)
        t = {}
        for i, c in enumerate(coeffs):
            if c:
                e = [0] * n
                e[i] = 1
                t[tuple(e)] = c
        if const:
            t[(0,) * n] = const
        return cls(n, t)

    # -- basic properties ---------------------------------------------------
    def __bool__(self):
        return bool(self.terms)

    @property
    def degree(self) -> float:
        """Total degree; ``-inf`` for the zero polynomial."""
        if not self.terms:
            return float("-inf")
        return max(sum(e) for e in self.terms)

    def is_homogeneous(self) -> bool:
        return len({sum(e) for e in self.terms}) <= 1

    def homogeneous_part(self, d: int) -> "Polynomial":
        return Polynomial(self.n, {e: c for e, c in self.terms.items() if sum(e) == d})

    def coefficient(self, e: Sequence[int]):
        return self.terms.get(tuple(e), Fraction(0))

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.n == other.n and self.terms == other.terms
        if isinstance(other, (int, Fraction, KPoly)):
            return self == Polynomial.constant(self.n, other)
        return NotImplemented

    def __hash__(self):
        return hash((self.n, frozenset(self.terms.items())))

    # -- arithmetic ---------------------------------------------------------
    def _check(self, other: "Polynomial"):
        if self.n != other.n:
            raise DimensionMismatch(f"{self.n} vs {other.n} variables")

    def _lift(self, other):
        if isinstance(other, Polynomial):
            self._check(other)
            return other
        return Polynomial.constant(self.n, other)

    def __add__(self, other):
        other = self._lift(other)
        t = dict(self.terms)
        for e, c in other.terms.items():
            v = t.get(e, 0) + c
            if v:
                t[e] = v
            else:
                t.pop(e, None)
        out = Polynomial(self.n)
        out.terms = t
        return out

    __radd__ = __add__

    def __neg__(self):
        out = Polynomial(self.n)
        out.terms = {e: -c for e, c in self.terms.items()}
        return out

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def scale(self, c) -> "Polynomial":
        if not c:
            return Polynomial(self.n)
        out = Polynomial(self.n)
        out.terms = {e: v * c for e, v in self.terms.items() if v * c}
        return out

    def __mul__(self, other):
        if not isinstance(other, Polynomial):
            return self.scale(other)
        self._check(other)
        t: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                t[e] = t.get(e, 0) + c1 * c2
        return Polynomial(self.n, t)

    def __rmul__(self, other):
        return self.scale(other)

    def __truediv__(self, c):
        return self.scale(1 / Q(c))

    def __pow__(self, k: int):
        out = Polynomial.constant(self.n, 1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    # -- calculus / evaluation ---------------------------------------------
    def __call__(self, point: Sequence):
        if len(point) != self.n:
            raise DimensionMismatch("point has wrong dimension")
        acc = Fraction(0)
        for e, c in self.terms.items():
            m = c
            for x, k in zip(point, e):
                if k:
                    m = m * Q(x) ** k if not isinstance(x, KPoly) else m * _kpow(x, k)
            acc = acc + m
        return acc

    def diff(self, i: int) -> "Polynomial":
        t = {}
        for e, c in self.terms.items():
            if e[i]:
                f = list(e)
                f[i] -= 1
                t[tuple(f)] = c * e[i]
        return Polynomial(self.n, t)

    def directional(self, v: Sequence) -> "Polynomial":
        out = Polynomial(self.n)
        for i, x in enumerate(v):
            if x:
                out = out + self.diff(i).scale(Q(x))
        return out

    def substitute_linear(self, m: Sequence[Sequence], shift: Sequence | None = None) -> "Polynomial":
        """g(x) = f(M x + shift), for an n x n matrix M."""
        n = self.n
        forms = [Polynomial.linear(list(m[r]), (shift[r] if shift else 0)) for r in range(n)]
        powers: list[list[Polynomial]] = [[Polynomial.constant(n, 1)] for _ in range(n)]
        out_t: dict = {}
        for e, c in self.terms.items():
            term = Polynomial.constant(n, c)
            for r, k in enumerate(e):
                if k:
                    pw = powers[r]
                    while len(pw) <= k:
                        pw.append(pw[-1] * forms[r])
                    term = term * pw[k]
            for e2, c2 in term.terms.items():
                out_t[e2] = out_t.get(e2, 0) + c2
        return Polynomial(n, out_t)

    def map_coefficients(self, fn) -> "Polynomial":
        return Polynomial(self.n, {e: fn(c) for e, c in self.terms.items()})

    def specialize(self, k0) -> "Polynomial":
        return self.map_coefficients(lambda c: c(k0) if isinstance(c, KPoly) else c)

    # -- output -------------------------------------------------------------
    def sorted_terms(self) -> list[tuple[Exp, object]]:
        return sorted(self.terms.items(), key=lambda t: (sum(t[0]), t[0]))

    def to_json(self) -> list[dict]:
        return [{"exp": list(e), "coef": qstr(c)} for e, c in self.sorted_terms()]

    @classmethod
    def from_json(cls, n: int, data: Iterable[Mapping]) -> "Polynomial":
        return cls(n, {tuple(d["exp"]): Q(d["coef"]) for d in data})

    def __repr__(self):
        return f"Polynomial({self.n}, {self})"

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for e, c in self.sorted_terms():
            mono = "*".join(f"x{i}" + (f"^{k}" if k > 1 else "") for i, k in enumerate(e) if k)
            cs = qstr(c)
            if isinstance(c, KPoly) and not c.is_constant():
                cs = f"({cs})"
            if not mono:
                parts.append(cs)
            elif cs == "1":
                parts.append(mono)
            elif cs == "-1":
                parts.append("-" + mono)
            else:
                parts.append(f"{cs}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")


def _kpow(x: KPoly, k: int) -> KPoly:
    out = KPoly.lift(1)
    for _ in range(k):
        out = out * x
    return out


# ---------------------------------------------------------------------------
# monomial bases


@lru_cache(maxsize=None)
def monomials(n: int, d: int) -> tuple[Exp, ...]:
    """Exponents of total degree d in graded-lex (ascending) order."""
    if n == 0:
        return ((),) if d == 0 else ()
    out = []

    def rec(prefix, left, slots):
        if slots == 1:
            out.append(tuple(prefix + [left]))
            return
        for a in range(left + 1):
            rec(prefix + [a], left - a, slots - 1)

    rec([], d, n)
    return tuple(sorted(out))


def dim_homogeneous(n: int, d: int) -> int:
    return comb(d + n - 1, n - 1)


def to_vector(f: Polynomial, d: int) -> list:
    """Coefficient vector of a homogeneous degree-d polynomial in the monomial basis."""
    return [f.terms.get(e, Fraction(0)) for e in monomials(f.n, d)]


def from_vector(n: int, d: int, v: Sequence) -> Polynomial:
    return Polynomial(n, {e: c for e, c in zip(monomials(n, d), v) if c})


# ---------------------------------------------------------------------------
# Weyl group action


def weyl_act(W, w: int, f: Polynomial) -> Polynomial:
    """(w f)(x) = f(w^-1 x)."""
    if f.n != W.rs.rank:
        raise DimensionMismatch(f"polynomial in {f.n} variables, root system of rank {W.rs.rank}")
    if w == W.identity:
        return f
    return f.substitute_linear(W.matrices[W.inv(w)])


def reflect(rs, root: int, f: Polynomial) -> Polynomial:
    """s_alpha f; reflections are involutions so no inverse is needed."""
    return f.substitute_linear(rs.reflection_matrix(root))


def root_form(rs, root: int) -> Polynomial:
    """The coroot alpha-check as a linear function on the weight space."""
    return Polynomial.linear(list(rs.coroots[root]))


def divide_linear(f: Polynomial, L: Sequence) -> Polynomial:
    """Exact quotient f / L for a nonzero linear form L (coefficient vector)."""
    n = f.n
    p = max(i for i, c in enumerate(L) if c)
    cp = Q(L[p])
    rest = [(i, Q(c)) for i, c in enumerate(L) if c and i != p]
    work = dict(f.terms)
    q: dict = {}
    while work:
        e = max(work, key=lambda x: (x[p], x))
        c = work[e]
        if e[p] == 0:
            raise NotDivisible(f"linear form {list(L)} does not divide the polynomial")
        t = list(e)
        t[p] -= 1
        t = tuple(t)
        qc = c / cp
        q[t] = q.get(t, 0) + qc
        del work[e]
        for i, ci in rest:
            u = list(t)
            u[i] += 1
            u = tuple(u)
            v = work.get(u, 0) - qc * ci
            if v:
                work[u] = v
            else:
                work.pop(u, None)
    return Polynomial(n, q)


def _root_for_form(rs, L: Sequence) -> int:
    L = [Q(x) for x in L]
    for i in rs.positive:
        c = rs.coroots[i]
        piv = next(j for j, x in enumerate(c) if x)
        if L[piv] and all(L[j] * c[piv] == c[j] * L[piv] for j in range(rs.rank)):
            return i
    raise ValueError(f"{L} is not proportional to a coroot")


def divided_difference(rs, L, f: Polynomial) -> Polynomial:
    """(f - s_L f) / L.

    ``L`` is either a root index (then the linear form is its coroot) or a
    coefficient vector proportional to a coroot; s_L is the matching reflection.
    """
    if isinstance(L, int):
        root, form = L, list(rs.coroots[L])
    else:
        root, form = _root_for_form(rs, L), list(L)
    return divide_linear(f - reflect(rs, root, f), form)


# ---------------------------------------------------------------------------
# invariants and harmonics


def reynolds(W, f: Polynomial) -> Polynomial:
    out = Polynomial(f.n)
    for w in range(len(W)):
        out = out + weyl_act(W, w, f)
    return out.scale(Fraction(1, len(W)))


def _echelon_polys(n: int, d: int, polys: Iterable[Polynomial]) -> list[Polynomial]:
    rows = [to_vector(p, d) for p in polys]
    basis, _ = linalg.rref(rows, dim_homogeneous(n, d))
    return [from_vector(n, d, r) for r in basis]


def invariant_basis(rs, W, d: int) -> list[Polynomial]:
    """Echelon basis of the degree-d W-invariants (Reynolds average of monomials)."""
    n = rs.rank
    return _echelon_polys(n, d, (reynolds(W, Polynomial.monomial(e)) for e in monomials(n, d)))


def apply_constant_coefficient(rs, b: Polynomial, f: Polynomial) -> Polynomial:
    """partial(b) f, where x_r in b becomes the derivative along the r-th row of G^-1.

    G is the standard form, so this identifies the weight space with its
    dual W-equivariantly.
    """
    ginv = linalg.inverse([list(r) for r in rs.gram])
    out = Polynomial(f.n)
    for e, c in b.terms.items():
        g = f
        for r, k in enumerate(e):
            for _ in range(k):
                g = g.directional(ginv[r])
                if not g:
                    break
            if not g:
                break
        if g:
            out = out + g.scale(c)
    return out


class GradedBasis:
    """Monomial, invariant and harmonic bases degree by degree up to ``max_degree``."""

    def __init__(self, rs, W, max_degree: int):
        self.rs, self.W, self.max_degree = rs, W, max_degree
        n = rs.rank
        self.monomials = {d: [Polynomial.monomial(e) for e in monomials(n, d)] for d in range(max_degree + 1)}
        self.invariants = {d: invariant_basis(rs, W, d) for d in range(max_degree + 1)}
        self.harmonics = {d: self._harmonics(d) for d in range(max_degree + 1)}

    def _harmonics(self, d: int) -> list[Polynomial]:
        n = self.rs.rank
        rows = []
        mons = monomials(n, d)
        for e in range(1, d + 1):
            for b in self.invariants[e]:
                imgs = [to_vector(apply_constant_coefficient(self.rs, b, Polynomial.monomial(m)), d - e) for m in mons]
                for r in range(dim_homogeneous(n, d - e)):
                    rows.append([imgs[c][r] for c in range(len(mons))])
        ker = linalg.nullspace(rows, len(mons)) if rows else linalg.identity(len(mons))
        basis, _ = linalg.rref(ker, len(mons))
        return [from_vector(n, d, r) for r in basis]

    def harmonic_dims(self) -> list[int]:
        return [len(self.harmonics[d]) for d in range(self.max_degree + 1)]

    def invariant_dims(self) -> list[int]:
        return [len(self.invariants[d]) for d in range(self.max_degree + 1)]

    def total_harmonic_dim(self) -> int:
        return sum(self.harmonic_dims())

    def top_harmonic_degree(self) -> int:
        return max(d for d in range(self.max_degree + 1) if self.harmonics[d])

    def all_harmonics(self) -> list[Polynomial]:
        return [h for d in range(self.max_degree + 1) for h in self.harmonics[d]]

    def multiplication_rank(self, d: int) -> int:
        """Rank of S^W (x) H_W -> S^d restricted to degree d."""
        n = self.rs.rank
        prods = [
            to_vector(a * h, d)
            for e in range(d + 1)
            for a in self.invariants[e]
            for h in self.harmonics[d - e]
        ]
        return linalg.rank(prods, dim_homogeneous(n, d)) if prods else 0

    def product_count(self, d: int) -> int:
        return sum(len(self.invariants[e]) * len(self.harmonics[d - e]) for e in range(d + 1))


def harmonic_basis(rs, W, max_degree: int | None = None) -> GradedBasis:
    if max_degree is None:
        max_degree = rs.n_pos
    return GradedBasis(rs, W, max_degree)
