"""Exact scalars: rationals as ``p/q`` strings and polynomials in a formal parameter."""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Union

Scalar = Union[int, Fraction, "KPoly"]


def Q(x) -> Fraction:
    """Coerce ints, Fractions and ``"p/q"`` strings to a Fraction."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x.strip())
    raise TypeError(f"cannot read {x!r} as an exact rational")


def qstr(x) -> str:
    """Canonical string for an exact scalar: lowest terms, positive denominator."""
    if isinstance(x, KPoly):
        return str(x)
    x = Q(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def qvec(xs: Iterable) -> tuple[Fraction, ...]:
    return tuple(Q(x) for x in xs)


class KPoly:
    """Univariate polynomial over Q in the formal Hecke parameter ``k``.

    Instances are immutable and mix freely with ints and Fractions under
    ``+ - *``; division is only by nonzero rationals, or exact via
    :meth:`exact_div`.
    """

    __slots__ = ("c",)

    def __init__(self, coeffs: Iterable = ()):
        c = [Q(x) for x in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self.c = tuple(c)

    @classmethod
    def gen(cls) -> "KPoly":
        return cls((0, 1))

    @staticmethod
    def lift(x) -> "KPoly":
        return x if isinstance(x, KPoly) else KPoly((x,))

    @property
    def degree(self) -> int:
        return len(self.c) - 1

    def is_constant(self) -> bool:
        return len(self.c) <= 1

    def constant(self) -> Fraction:
        return self.c[0] if self.c else Fraction(0)

    def __call__(self, k0) -> Fraction:
        acc = Fraction(0)
        for a in reversed(self.c):
            acc = acc * k0 + a
        return acc

    def __bool__(self):
        return bool(self.c)

    def __eq__(self, other):
        if isinstance(other, KPoly):
            return self.c == other.c
        if isinstance(other, (int, Fraction)):
            return self.c == KPoly((other,)).c
        return NotImplemented

    def __hash__(self):
        if len(self.c) <= 1:
            return hash(self.constant())
        return hash(self.c)

    def __neg__(self):
        return KPoly(-a for a in self.c)

    def __add__(self, other):
        if not isinstance(other, (KPoly, int, Fraction)):
            return NotImplemented
        o = KPoly.lift(other).c
        n = max(len(self.c), len(o))
        return KPoly(
            (self.c[i] if i < len(self.c) else 0) + (o[i] if i < len(o) else 0)
            for i in range(n)
        )

    __radd__ = __add__

    def __sub__(self, other):
        if not isinstance(other, (KPoly, int, Fraction)):
            return NotImplemented
        return self + (-KPoly.lift(other))

    def __rsub__(self, other):
        return KPoly.lift(other) - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return KPoly(a * other for a in self.c)
        if not isinstance(other, KPoly):
            return NotImplemented
        if not self.c or not other.c:
            return KPoly()
        out = [Fraction(0)] * (len(self.c) + len(other.c) - 1)
        for i, a in enumerate(self.c):
            if a:
                for j, b in enumerate(other.c):
                    out[i + j] += a * b
        return KPoly(out)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise ZeroDivisionError("KPoly division by zero")
            return KPoly(a / other for a in self.c)
        if isinstance(other, KPoly) and other.is_constant():
            return self / other.constant()
        return NotImplemented

    def divmod(self, other: "KPoly") -> tuple["KPoly", "KPoly"]:
        other = KPoly.lift(other)
        if not other:
            raise ZeroDivisionError("KPoly division by zero")
        r = list(self.c)
        q = [Fraction(0)] * max(len(r) - len(other.c) + 1, 0)
        lead = other.c[-1]
        for shift in range(len(q) - 1, -1, -1):
            t = r[shift + len(other.c) - 1] / lead
            q[shift] = t
            if t:
                for j, b in enumerate(other.c):
                    r[shift + j] -= t * b
        return KPoly(q), KPoly(r)

    def exact_div(self, other) -> "KPoly":
        q, r = self.divmod(KPoly.lift(other))
        if r:
            raise ArithmeticError(f"{other} does not divide {self}")
        return q

    def __repr__(self):
        return f"KPoly({[qstr(a) for a in self.c]})"

    def __str__(self):
        if not self.c:
            return "0"
        parts = []
        for i, a in enumerate(self.c):
            if not a:
                continue
            mono = "" if i == 0 else ("k" if i == 1 else f"k^{i}")
            if mono and a == 1:
                parts.append(mono)
            elif mono and a == -1:
                parts.append("-" + mono)
            elif mono:
                parts.append(f"{qstr(a)}*{mono}")
            else:
                parts.append(qstr(a))
        return "+".join(parts).replace("+-", "-")


def is_zero(x) -> bool:
    return not x


def specialize(x, k0):
    """Evaluate a scalar at ``k = k0`` (identity on rationals)."""
    return x(k0) if isinstance(x, KPoly) else x
