"""The degenerate affine Hecke algebra, its polynomial module and the modules A(lambda).

Elements are written in the normal form sum_w f_w (x) w with the polynomials
on the left.  Polynomials are functions on the weight space (elements of
S(a)), so an element xi of a is a linear polynomial and alpha(xi) is its value
at the root alpha.  The cross relation

    s_alpha . xi = s_alpha(xi) . s_alpha - k(alpha) alpha(xi)

extends to arbitrary polynomials as

    s_alpha . f = (s_alpha f) . s_alpha - k(alpha) (f - s_alpha f) / alpha-check,

by induction on the degree: both sides satisfy the same twisted Leibniz rule
and agree on linear f, where (xi - s_alpha xi) / alpha-check = alpha(xi).

The polynomial module is H / sum_w H (w - 1), identified with S(a) through
f -> f (x) 1.  There a simple reflection acts by
s_alpha * f = s_alpha f - k(alpha) (f - s_alpha f) / alpha-check.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from typing import Sequence

from . import linalg
from .errors import ParameterMismatch
from .polyalg import (
    GradedBasis,
    Polynomial,
    divide_linear,
    invariant_basis,
    monomials,
    reflect,
    to_vector,
)
from .rational import KPoly, Q, qstr
from .rootsys import MultiplicityFunction, RootSystem, WeylGroup, orbit_parameters


def coxeter_exponent(a: int, b: int) -> int:
    return {0: 2, 1: 3, 2: 4, 3: 6}[a * b]


class HeckeAlgebra:
    def __init__(self, rs: RootSystem, W: WeylGroup, k):
        if isinstance(k, MultiplicityFunction):
            k = k.hecke_parameters()
        self.rs, self.W = rs, W
        self.k_given = k
        kk = orbit_parameters(rs, k)
        self.k = {i: kk[i] for i in rs.positive}
        self.generic = any(isinstance(v, KPoly) and not v.is_constant() for v in self.k.values())
        self._move_cache: dict[tuple[int, tuple], dict[int, Polynomial]] = {}
        self.n = rs.rank

    def simple_k(self, i: int):
        return self.k[i]

    # -- rewriting -----------------------------------------------------------
    def delta(self, i: int, f: Polynomial) -> Polynomial:
        """(f - s_i f) / alpha_i-check."""
        d = f - reflect(self.rs, i, f)
        if not d:
            return Polynomial(f.n)
        return divide_linear(d, self.rs.coroots[i])

    def _move_monomial(self, w: int, e: tuple) -> dict[int, Polynomial]:
        key = (w, e)
        hit = self._move_cache.get(key)
        if hit is not None:
            return hit
        W = self.W
        if w == W.identity:
            out = {w: Polynomial.monomial(e)}
        else:
            word = W.words[w]
            i = word[0]
            rest = W.from_word(word[1:])
            inner = self._move_monomial(rest, e)
            si = W.simple_reflection(i)
            ki = self.k[i]
            out: dict[int, Polynomial] = {}
            for u, g in inner.items():
                su = W.mul(si, u)
                _acc(out, su, reflect(self.rs, i, g))
                if ki:
                    _acc(out, u, -self.delta(i, g).scale(ki))
        self._move_cache[key] = out
        return out

    def move(self, w: int, f: Polynomial) -> dict[int, Polynomial]:
        """w . f rewritten as sum_u g_u (x) u."""
        out: dict[int, Polynomial] = {}
        for e, c in f.terms.items():
            for u, g in self._move_monomial(w, e).items():
                _acc(out, u, g.scale(c))
        return out

    # -- elements ------------------------------------------------------------
    def element(self, terms: dict | None = None) -> "HeckeElement":
        return HeckeElement(self, {w: p for w, p in (terms or {}).items() if p})

    def poly(self, f: Polynomial) -> "HeckeElement":
        return self.element({self.W.identity: f})

    def group(self, w: int) -> "HeckeElement":
        return self.element({w: Polynomial.constant(self.n, 1)})

    def one(self) -> "HeckeElement":
        return self.group(self.W.identity)

    def mul(self, a: "HeckeElement", b: "HeckeElement") -> "HeckeElement":
        if a.H is not self or b.H is not self:
            raise ParameterMismatch("elements belong to different Hecke algebras")
        out: dict[int, Polynomial] = {}
        for w, f in a.terms.items():
            for v, g in b.terms.items():
                for u, h in self.move(w, g).items():
                    _acc(out, self.W.mul(u, v), f * h)
        return self.element(out)

    # -- the polynomial module ----------------------------------------------
    def sh_simple(self, i: int, f: Polynomial) -> Polynomial:
        ki = self.k[i]
        out = reflect(self.rs, i, f)
        if ki:
            out = out - self.delta(i, f).scale(ki)
        return out

    def sh_act(self, w, f: Polynomial) -> Polynomial:
        """Action of w (element index or reduced word) on S(a) viewed as the Hecke module."""
        word = self.W.words[w] if isinstance(w, int) else tuple(w)
        for i in reversed(word):
            f = self.sh_simple(i, f)
        return f

    def sh_matrix(self, i: int, max_degree: int) -> list[list]:
        """Matrix of s_i * on S^{<= max_degree} in the graded monomial basis."""
        basis = filtered_monomials(self.n, max_degree)
        index = {e: t for t, e in enumerate(basis)}
        m = [[Fraction(0)] * len(basis) for _ in basis]
        for c, e in enumerate(basis):
            img = self.sh_simple(i, Polynomial.monomial(e))
            for e2, v in img.terms.items():
                m[index[e2]][c] = v
        return m


def _acc(out: dict, key, p: Polynomial):
    if not p:
        return
    q = out.get(key)
    q = p if q is None else q + p
    if q:
        out[key] = q
    else:
        out.pop(key, None)


@dataclass(eq=False)
class HeckeElement:
    H: HeckeAlgebra
    terms: dict = field(default_factory=dict)

    def __add__(self, other: "HeckeElement"):
        out = dict(self.terms)
        for w, p in other.terms.items():
            _acc(out, w, p)
        return self.H.element(out)

    def __neg__(self):
        return self.H.element({w: -p for w, p in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, HeckeElement):
            return self.H.mul(self, other)
        return self.H.element({w: p.scale(other) for w, p in self.terms.items()})

    def __eq__(self, other):
        return isinstance(other, HeckeElement) and self.terms == other.terms

    def __bool__(self):
        return bool(self.terms)

    def to_json(self) -> list[dict]:
        W = self.H.W
        items = sorted(self.terms.items(), key=lambda t: (len(W.words[t[0]]), W.words[t[0]]))
        return [{"word": list(W.words[w]), "poly": p.to_json()} for w, p in items]


def hecke_mul(H: HeckeAlgebra, a: HeckeElement, b: HeckeElement) -> HeckeElement:
    return H.mul(a, b)


def filtered_monomials(n: int, max_degree: int) -> list[tuple]:
    return [e for d in range(max_degree + 1) for e in monomials(n, d)]


def _filtered_vector(f: Polynomial, basis: Sequence[tuple]) -> list:
    return [f.terms.get(e, Fraction(0)) for e in basis]


# ---------------------------------------------------------------------------
# checks


def center_check(H: HeckeAlgebra, f: Polynomial) -> dict:
    """Does f commute with every simple reflection?  Compared with W-invariance."""
    witnesses = []
    fe = H.poly(f)
    for i in H.rs.simple:
        s = H.group(H.W.simple_reflection(i))
        if fe * s != s * fe:
            witnesses.append(i)
    invariant = all(reflect(H.rs, i, f) == f for i in H.rs.simple)
    central = not witnesses
    return {"central": central, "invariant": invariant, "pass": central == invariant, "witnesses": witnesses}


def group_relations_check(H: HeckeAlgebra, max_degree: int) -> dict:
    """(s_i *)^2 = 1 and the braid relations as operators on S^{<= max_degree}."""
    basis = filtered_monomials(H.n, max_degree)
    cart = H.rs.cartan
    failures = []
    for e in basis:
        f = Polynomial.monomial(e)
        for i in H.rs.simple:
            if H.sh_simple(i, H.sh_simple(i, f)) != f:
                failures.append({"relation": [i, i], "exp": list(e)})
        for i, j in product(H.rs.simple, repeat=2):
            if i >= j:
                continue
            m = coxeter_exponent(cart[i][j], cart[j][i])
            lhs = f
            rhs = f
            for t in range(m):
                lhs = H.sh_simple(i if t % 2 == 0 else j, lhs)
                rhs = H.sh_simple(j if t % 2 == 0 else i, rhs)
            if lhs != rhs:
                failures.append({"relation": [i, j, m], "exp": list(e)})
    return {"pass": not failures, "checked": len(basis), "failures": failures[:3]}


def classical_invariants(H: HeckeAlgebra, max_degree: int) -> dict[int, list[Polynomial]]:
    return {d: invariant_basis(H.rs, H.W, d) for d in range(max_degree + 1)}


def sh_fixed_space(H: HeckeAlgebra, max_degree: int) -> list[Polynomial]:
    """Basis of {f in S^{<= d} : s_i * f = f for all i} (rational k only)."""
    if H.generic:
        raise ParameterMismatch("fixed-space basis needs a numeric parameter; use sh_fixed_check for generic k")
    basis = filtered_monomials(H.n, max_degree)
    rows = []
    for i in H.rs.simple:
        m = H.sh_matrix(i, max_degree)
        for r in range(len(basis)):
            rows.append([m[r][c] - (1 if r == c else 0) for c in range(len(basis))])
    ker = linalg.nullspace(rows, len(basis))
    # reverse graded order so echelon pivots sit on top-degree monomials
    rev = list(reversed(range(len(basis))))
    ech, _ = linalg.rref([[v[c] for c in rev] for v in ker], len(basis))
    out = []
    for row in ech:
        v = [Fraction(0)] * len(basis)
        for t, c in enumerate(rev):
            v[c] = row[t]
        out.append(Polynomial(H.n, {e: x for e, x in zip(basis, v) if x}))
    return out


def sh_fixed_check(H: HeckeAlgebra, max_degree: int) -> dict:
    """Compare the Hecke-fixed space in S^{<= d} with the classical invariants.

    Works for rational and formal k: the invariants are checked to be fixed
    exactly, and the rank of the stacked (s_i * - 1) is computed over Q(k).
    Reports the fixed dimensions degree by degree.
    """
    inv = classical_invariants(H, max_degree)
    dims_inv = [len(inv[d]) for d in range(max_degree + 1)]
    fixed_ok = all(H.sh_simple(i, f) == f for d in inv for f in inv[d] for i in H.rs.simple)
    fixed_dims = []
    prev = 0
    for d in range(max_degree + 1):
        basis = filtered_monomials(H.n, d)
        rows = []
        for i in H.rs.simple:
            m = H.sh_matrix(i, d)
            for r in range(len(basis)):
                rows.append([m[r][c] - (1 if r == c else 0) for c in range(len(basis))])
        if H.generic:
            rk = linalg.fraction_free_rank(rows, len(basis))
        else:
            rk = linalg.rank(rows, len(basis))
        total = len(basis) - rk
        fixed_dims.append(total - prev)
        prev = total
    ok = fixed_ok and fixed_dims == dims_inv
    return {"pass": ok, "fixed_dims": fixed_dims, "invariant_dims": dims_inv, "invariants_fixed": fixed_ok}


def eigenspace_generators(H: HeckeAlgebra, i: int, max_degree: int):
    """The stated generators of the +1 and -1 eigenspaces of s_i * in S^{<= d}.

    +1: y^a (alpha-check)^{2b};  -1: y^a (alpha-check)^{2b} (alpha-check + k(alpha)),
    where y runs over a basis of the linear forms vanishing at alpha.
    """
    rs = H.rs
    n = H.n
    alpha = rs.roots[i]
    ann = linalg.nullspace([list(alpha)], n)
    ys = [Polynomial.linear(v) for v in ann]
    cor = Polynomial.linear(list(rs.coroots[i]))
    shifted = cor + H.k[i]
    plus, minus = [], []
    for d in range(max_degree + 1):
        for b in range(d // 2 + 1):
            a_deg = d - 2 * b
            for ex in monomials(n - 1, a_deg):
                g = cor ** (2 * b)
                for y, p in zip(ys, ex):
                    if p:
                        g = g * y ** p
                plus.append(g)
                if d + 1 <= max_degree:
                    minus.append(g * shifted)
    return plus, minus


def eigenspace_check(H: HeckeAlgebra, i: int, max_degree: int) -> dict:
    plus, minus = eigenspace_generators(H, i, max_degree)
    ok_plus = all(H.sh_simple(i, g) == g for g in plus)
    ok_minus = all(H.sh_simple(i, g) == -g for g in minus)
    basis = filtered_monomials(H.n, max_degree)
    rows = [_filtered_vector(g, basis) for g in plus + minus]
    rk = linalg.fraction_free_rank(rows, len(basis)) if H.generic else linalg.rank(rows, len(basis))
    spans = rk == len(basis) == len(rows)
    return {
        "pass": ok_plus and ok_minus and spans,
        "plus_dim": len(plus),
        "minus_dim": len(minus),
        "total_dim": len(basis),
        "plus_ok": ok_plus,
        "minus_ok": ok_minus,
        "direct_sum": spans,
    }


# ---------------------------------------------------------------------------
# A(lambda)


class ALambda:
    """S(a) / (f - f(lambda) : f invariant) with the Hecke action, in a harmonic basis."""

    def __init__(self, H: HeckeAlgebra, lam: Sequence, graded: GradedBasis | None = None):
        if H.generic:
            raise ParameterMismatch("A(lambda) needs a numeric parameter")
        rs = H.rs
        self.H, self.rs = H, rs
        self.lam = tuple(Q(x) for x in lam)
        top = rs.n_pos + 1
        gb = graded if graded is not None and graded.max_degree >= top else GradedBasis(rs, H.W, top)
        self.graded = gb
        self.basis = [h for d in range(rs.n_pos + 1) for h in gb.harmonics[d]]
        self.dim = len(self.basis)
        self._index = {}
        n = rs.rank
        # per degree: product basis b*h and the inverse of its coordinate matrix
        self._decomp = {}
        pos = 0
        hpos = {}
        for d in range(rs.n_pos + 1):
            hpos[d] = pos
            pos += len(gb.harmonics[d])
        for d in range(top + 1):
            labels = []
            cols = []
            for e in range(d + 1):
                if d - e > rs.n_pos:
                    continue
                for b in gb.invariants[e]:
                    val = b(self.lam)
                    for t, h in enumerate(gb.harmonics[d - e]):
                        labels.append((val, hpos[d - e] + t))
                        cols.append(to_vector(b * h, d))
            mat = linalg.transpose(cols) if cols else []
            inv = linalg.inverse(mat) if cols else []
            self._decomp[d] = (monomials(n, d), labels, inv)
        self.X = [self._matrix(lambda f, r=r: f * Polynomial.variable(n, r)) for r in range(n)]
        self.S = [self._matrix(lambda f, i=i: H.sh_simple(i, f)) for i in rs.simple]

    def reduce(self, f: Polynomial) -> list[Fraction]:
        """Coordinates of the class of f in the harmonic basis."""
        out = [Fraction(0)] * self.dim
        for d in range(int(f.degree) + 1 if f else 0):
            part = f.homogeneous_part(d)
            if not part:
                continue
            if d not in self._decomp:
                raise ValueError("degree beyond the precomputed range")
            mons, labels, inv = self._decomp[d]
            v = to_vector(part, d)
            c = linalg.matvec(inv, v)
            for (val, idx), x in zip(labels, c):
                if x and val:
                    out[idx] += x * val
        return out

    def _matrix(self, op) -> list[list[Fraction]]:
        cols = [self.reduce(op(b)) for b in self.basis]
        return linalg.transpose(cols)

    def dominant(self) -> bool:
        """lambda(alpha-check) not a negative integer for alpha > 0."""
        for a in self.rs.positive:
            v = self.rs.pair(self.lam, a)
            if v.denominator == 1 and v < 0:
                return False
        return True

    def relations_check(self) -> dict:
        """Defining relations of the Hecke algebra as matrix identities."""
        rs, H = self.rs, self.H
        n = self.dim
        ident = linalg.identity(n)
        fails = []
        S, X = self.S, self.X

        def mm(a, b):
            return linalg.matmul(a, b, ncols=n)

        for i in rs.simple:
            if mm(S[i], S[i]) != ident:
                fails.append(f"s{i}^2")
        for i, j in product(rs.simple, repeat=2):
            if i < j:
                m = coxeter_exponent(rs.cartan[i][j], rs.cartan[j][i])
                a = b = ident
                for t in range(m):
                    a = mm(a, S[i] if t % 2 == 0 else S[j])
                    b = mm(b, S[j] if t % 2 == 0 else S[i])
                if a != b:
                    fails.append(f"braid {i},{j}")
        for r, s in product(range(rs.rank), repeat=2):
            if mm(X[r], X[s]) != mm(X[s], X[r]):
                fails.append(f"x{r} x{s}")
        for i in rs.simple:
            refl = rs.reflection_matrix(i)
            for r in range(rs.rank):
                # s_i(x_r) = sum_s M[r][s] x_s as functions: (s_i f)(x) = f(s_i x)
                sx = [[sum((refl[r][s] * X[s][p][q] for s in range(rs.rank)), Fraction(0)) for q in range(n)] for p in range(n)]
                rhs = mm(sx, S[i])
                c = H.k[i] * rs.roots[i][r]
                rhs = [[rhs[p][q] - (c if p == q else 0) for q in range(n)] for p in range(n)]
                if mm(S[i], X[r]) != rhs:
                    fails.append(f"cross s{i} x{r}")
        return {"pass": not fails, "failures": fails}

    def spectrum_check(self) -> dict:
        """Characteristic polynomials of generic linear forms match prod_w (t - p(w lambda))."""
        rs, W = self.rs, self.H.W
        orbit = [W.act(w, self.lam) for w in range(len(W))]
        forms = [tuple(1 if j == r else 0 for j in range(rs.rank)) for r in range(rs.rank)]
        forms.append(tuple(Fraction(1, 1 + 3 * j) + j for j in range(rs.rank)))
        ok = True
        for c in forms:
            m = [[sum((c[r] * self.X[r][p][q] for r in range(rs.rank)), Fraction(0)) for q in range(self.dim)] for p in range(self.dim)]
            want = linalg.poly_from_roots([sum((a * b for a, b in zip(c, mu)), Fraction(0)) for mu in orbit])
            if linalg.charpoly(m) != want:
                ok = False
        return {"pass": ok and self.dim == len(W), "dim": self.dim, "order": len(W)}

    def to_json(self) -> dict:
        return {
            "lambda": [qstr(x) for x in self.lam],
            "dim": self.dim,
            "dominant": self.dominant(),
            "X": [[[qstr(x) for x in row] for row in m] for m in self.X],
            "S": [[[qstr(x) for x in row] for row in m] for m in self.S],
        }


def build_A_lambda(H: HeckeAlgebra, lam: Sequence, graded: GradedBasis | None = None) -> ALambda:
    return ALambda(H, lam, graded)


def _spin(gens: Sequence, ops: Sequence, n: int) -> list:
    """Smallest subspace containing ``gens`` and stable under ``ops`` (incremental echelon)."""
    pivots: dict[int, list] = {}

    def reduce(v):
        v = list(v)
        for c in range(n):
            if v[c] and c in pivots:
                row = pivots[c]
                f = v[c]
                v = [x - f * y for x, y in zip(v, row)]
        return v

    queue = []
    for g in gens:
        r = reduce(g)
        lead = next((c for c in range(n) if r[c]), None)
        if lead is None:
            continue
        r = [x / r[lead] for x in r]
        pivots[lead] = r
        queue.append(r)
    while queue and len(pivots) < n:
        v = queue.pop()
        for op in ops:
            r = reduce(linalg.matvec(op, v))
            lead = next((c for c in range(n) if r[c]), None)
            if lead is None:
                continue
            r = [x / r[lead] for x in r]
            pivots[lead] = r
            queue.append(r)
    if len(pivots) == n:
        return linalg.identity(n)
    return linalg.row_basis(list(pivots.values()), n)


def _power(m, k, n):
    out = linalg.identity(n)
    base = m
    while k:
        if k & 1:
            out = linalg.matmul(out, base, ncols=n)
        k >>= 1
        if k:
            base = linalg.matmul(base, base, ncols=n)
    return out


def submodule_lattice(M: ALambda) -> dict:
    """Submodules spun up from joint eigenvectors of the polynomial part, closed under + and intersection."""
    rs, W = M.rs, M.H.W
    n = M.dim
    ops = list(M.X) + list(M.S)
    points = sorted({W.act(w, M.lam) for w in range(len(W))})
    gens = []
    eig_points = []
    for mu in points:
        eig_rows = []
        for r in range(rs.rank):
            eig_rows.extend([[M.X[r][p][q] - (mu[r] if p == q else 0) for q in range(n)] for p in range(n)])
        eig = linalg.nullspace(eig_rows, n)
        if eig:
            eig_points.append(mu)
        gens.extend(eig)
    # n distinct joint eigenvalues force one-dimensional generalized eigenspaces
    complete = len(eig_points) == n
    if not complete:
        complete = True
        for mu in points:
            gen_rows = []
            for r in range(rs.rank):
                a = [[M.X[r][p][q] - (mu[r] if p == q else 0) for q in range(n)] for p in range(n)]
                gen_rows.extend(_power(a, n, n))
            if n - linalg.rank(gen_rows, n) not in (0, 1):
                complete = False
    subs: set = set()

    def key(b):
        return tuple(tuple(r) for r in b)

    subs.add(())
    subs.add(key(linalg.identity(n)))
    for v in gens:
        subs.add(key(_spin([v], ops, n)))
    changed = True
    while changed:
        changed = False
        cur = list(subs)
        for a, b in product(cur, repeat=2):
            if a >= b:
                continue
            for c in (linalg.subspace_sum(list(a), list(b), n), linalg.intersect(list(a), list(b), n)):
                kc = key(c)
                if kc not in subs:
                    subs.add(kc)
                    changed = True
    ordered = sorted(subs, key=lambda b: (len(b), b))
    dims = [len(b) for b in ordered]

    def contains(big, small):
        return all(linalg.in_span(list(big), list(v), n) for v in small)

    hasse = []
    for i, a in enumerate(ordered):
        for j, b in enumerate(ordered):
            if dims[i] < dims[j] and contains(b, a):
                between = any(
                    dims[i] < dims[t] < dims[j] and contains(ordered[t], a) and contains(b, ordered[t])
                    for t in range(len(ordered))
                )
                if not between:
                    hasse.append([i, j])
    return {"dims": dims, "hasse": hasse, "complete": complete, "bases": [[[qstr(x) for x in r] for r in b] for b in ordered]}


def is_irreducible(M: ALambda) -> bool:
    return submodule_lattice(M)["dims"] == [0, M.dim]


def rank1_hc_polynomial(i: int, j: int, m_alpha, m_2alpha) -> Polynomial:
    """prod_{t < i+j} (h + delta + 2t) * prod_{t < i} (h + 1 + 2t), h = a/2 + m_alpha/2, delta = m_2alpha.

    Returned as a polynomial in the single variable a = alpha-check.
    """
    m, delta = Q(m_alpha), Q(m_2alpha)
    h = Polynomial.linear([Fraction(1, 2)], m / 2)
    out = Polynomial.constant(1, 1)
    for t in range(i + j):
        out = out * (h + delta + 2 * t)
    for t in range(i):
        out = out * (h + 1 + 2 * t)
    return out
