"""Rational Dunkl operators.

Dunkl operators act on functions on the Cartan space a.  We identify a with
the weight space through the standard form G, so the same
:class:`~hcalg.polyalg.Polynomial` type is used: a vector ``xi`` in working
coordinates is a point of a, a root ``alpha`` is the linear function
``x -> <alpha, x> = (G alpha) . x``, and ``s_alpha`` acts by the same
reflection matrix.  With this identification

    T(xi) f = d_xi f + sum_{alpha > 0} k(alpha) <alpha, xi> (f - s_alpha f) / <alpha, .>

where the sum runs over the reduced positive roots.  For a non-reduced
system the root 2 alpha has the same reflection and the same divided
difference, so it simply adds k(2 alpha) to the coefficient of alpha.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from . import linalg
from .polyalg import Polynomial, divide_linear, monomials, reflect, weyl_act
from .rational import Q
from .rootsys import MultiplicityFunction, RootSystem, orbit_parameters


def geometric_parameters(mf: MultiplicityFunction) -> tuple[Fraction, ...]:
    """Per-orbit Dunkl parameters k(alpha) = m(alpha)/2 + m(2 alpha)/2."""
    return mf.dunkl_parameters()


@dataclass(eq=False)
class DunklOperator:
    rs: RootSystem
    xi: tuple
    k: object  # scalar, per-orbit sequence or mapping; KPoly allowed
    k2: object = 0  # parameter of 2 alpha on the short orbit of type B

    def __post_init__(self):
        rs = self.rs
        self.xi = tuple(Q(x) for x in self.xi)
        kk = orbit_parameters(rs, self.k)
        k2 = orbit_parameters(rs, self.k2) if self.k2 else {i: 0 for i in range(rs.n_roots)}
        self._terms = []
        for a in rs.positive:
            form = [sum((rs.gram[r][s] * rs.roots[a][s] for s in range(rs.rank)), Fraction(0)) for r in range(rs.rank)]
            pair = sum((f * x for f, x in zip(form, self.xi)), Fraction(0))
            c = (kk[a] + k2[a]) * pair
            if c:
                self._terms.append((a, form, c))

    def __call__(self, f: Polynomial) -> Polynomial:
        out = f.directional(self.xi)
        for a, form, c in self._terms:
            diff = f - reflect(self.rs, a, f)
            if diff:
                out = out + divide_linear(diff, form).scale(c)
        return out

    apply = __call__


def dunkl_apply(op: DunklOperator, f: Polynomial) -> Polynomial:
    return op(f)


def dunkl_operators(rs: RootSystem, k, k2=0) -> list[DunklOperator]:
    """T(xi_i) for the coordinate directions xi_i."""
    n = rs.rank
    return [DunklOperator(rs, tuple(1 if j == i else 0 for j in range(n)), k, k2) for i in range(n)]


def dunkl_commutator_check(rs: RootSystem, k, xi: Sequence, eta: Sequence, max_degree: int, k2=0) -> dict:
    """T(xi) T(eta) f = T(eta) T(xi) f for every monomial of degree <= max_degree."""
    a, b = DunklOperator(rs, tuple(xi), k, k2), DunklOperator(rs, tuple(eta), k, k2)
    checked = 0
    for d in range(max_degree + 1):
        for e in monomials(rs.rank, d):
            f = Polynomial.monomial(e)
            lhs, rhs = a(b(f)), b(a(f))
            checked += 1
            if lhs != rhs:
                return {"pass": False, "checked": checked, "counterexample": {"exp": list(e), "difference": (lhs - rhs).to_json()}}
    return {"pass": True, "checked": checked, "counterexample": None}


def equivariance_check(rs: RootSystem, W, k, xi: Sequence, max_degree: int, k2=0) -> dict:
    """w T(xi) = T(w xi) w on all monomials of degree <= max_degree and all w."""
    op = DunklOperator(rs, tuple(xi), k, k2)
    checked = 0
    for w in range(len(W)):
        wxi = linalg.matvec(W.matrices[w], op.xi)
        opw = DunklOperator(rs, tuple(wxi), k, k2)
        for d in range(max_degree + 1):
            for e in monomials(rs.rank, d):
                f = Polynomial.monomial(e)
                checked += 1
                if weyl_act(W, w, op(f)) != opw(weyl_act(W, w, f)):
                    return {"pass": False, "checked": checked, "counterexample": {"w": list(W.words[w]), "exp": list(e)}}
    return {"pass": True, "checked": checked, "counterexample": None}
