"""Irreducible characters of small Weyl groups, built constructively and checked.

Seed characters are the trivial, sign and reflection characters, and for two
root lengths the characters that are -1 exactly on the short (``τ``) or long
(``τ⊗sgn``) reflections.  New irreducibles are obtained from products and
from the symmetric/exterior square of known ones by subtracting the
projections onto characters already found; a remainder of norm 1 is a new
irreducible.  Names record the construction; remainders carry a trailing
``°``.  Completeness is certified by sum of squared degrees = |W| and the
orthogonality relations are checked on construction.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations_with_replacement
from typing import Sequence

from . import linalg
from .errors import NonIntegralMultiplicity
from .rational import qstr


class CharacterTable:
    def __init__(self, W, max_rounds: int = 6):
        self.W = W
        rs = W.rs
        self.classes = W.conjugacy_classes
        self.sizes = [len(c) for c in self.classes]
        self.reps = [c[0] for c in self.classes]
        self._class_of = {}
        for n, c in enumerate(self.classes):
            for w in c:
                self._class_of[w] = n
        order = len(W)
        self.order = order
        # class of w^2 for symmetric/exterior squares
        self._sq = [self._class_of[W.mul(r, r)] for r in self.reps]
        self.chars: dict[str, tuple[Fraction, ...]] = {}

        def by_rep(fn):
            return tuple(Fraction(fn(r)) for r in self.reps)

        long_set = {i for i in rs.simple if rs.is_long(i)}
        alt = len(long_set) not in (0, rs.rank)
        seeds = [("triv", by_rep(lambda w: 1)), ("sgn", by_rep(lambda w: (-1) ** W.length(w)))]
        if alt:
            seeds.append(("τ", by_rep(lambda w: (-1) ** sum(1 for i in W.words[w] if i not in long_set))))
            seeds.append(("τ⊗sgn", by_rep(lambda w: (-1) ** sum(1 for i in W.words[w] if i in long_set))))
        seeds.append(("refl", by_rep(lambda w: linalg.trace(W.matrices[w]))))
        for name, ch in seeds:
            self._offer(name, ch)
        for _ in range(max_rounds):
            if self.complete():
                break
            known = list(self.chars.items())
            for name, ch in known:
                self._offer(f"Sym²{name}", self._sym2(ch))
                self._offer(f"Λ²{name}", self._alt2(ch))
            for (n1, c1), (n2, c2) in combinations_with_replacement(known, 2):
                if c1[0] == 1 and c2[0] == 1:
                    continue
                self._offer(f"{n1}⊗{n2}", tuple(a * b for a, b in zip(c1, c2)))
        self.check()

    # -- construction --------------------------------------------------------
    def inner(self, a: Sequence, b: Sequence) -> Fraction:
        return sum((s * x * y for s, x, y in zip(self.sizes, a, b)), Fraction(0)) / self.order

    def _sym2(self, ch):
        return tuple((ch[c] * ch[c] + ch[self._sq[c]]) / 2 for c in range(len(ch)))

    def _alt2(self, ch):
        return tuple((ch[c] * ch[c] - ch[self._sq[c]]) / 2 for c in range(len(ch)))

    def _offer(self, name: str, ch):
        rem = list(ch)
        stripped = False
        for other in self.chars.values():
            m = self.inner(rem, other)
            if m:
                stripped = True
                rem = [x - m * y for x, y in zip(rem, other)]
        if rem[0] > 0 and self.inner(rem, rem) == 1:
            self.chars[name + ("°" if stripped else "")] = tuple(rem)

    def complete(self) -> bool:
        return sum(ch[0] ** 2 for ch in self.chars.values()) == self.order

    def check(self) -> None:
        if not self.complete():
            raise RuntimeError(f"character catalog incomplete for {self.W.rs.name}")
        names = list(self.chars)
        for i, a in enumerate(names):
            for b in names[i:]:
                want = 1 if a == b else 0
                if self.inner(self.chars[a], self.chars[b]) != want:
                    raise RuntimeError(f"row orthogonality fails for {a}, {b}")
        for c1 in range(len(self.classes)):
            for c2 in range(len(self.classes)):
                s = sum((ch[c1] * ch[c2] for ch in self.chars.values()), Fraction(0))
                want = Fraction(self.order, self.sizes[c1]) if c1 == c2 else 0
                if s != want:
                    raise RuntimeError("column orthogonality fails")

    # -- queries -------------------------------------------------------------
    @property
    def names(self) -> list[str]:
        return list(self.chars)

    def degree(self, name: str) -> int:
        return int(self.chars[name][0])

    def value(self, name: str, w: int) -> Fraction:
        return self.chars[name][self._class_of[w]]

    def class_of(self, w: int) -> int:
        return self._class_of[w]

    def class_function(self, traces: Sequence) -> tuple[Fraction, ...]:
        """Per-class values from per-element traces (checked to be class functions)."""
        vals = []
        for c in self.classes:
            v = {Fraction(traces[w]) for w in c}
            if len(v) != 1:
                raise NonIntegralMultiplicity("trace is not constant on a conjugacy class")
            vals.append(v.pop())
        return tuple(vals)

    def decompose(self, traces: Sequence) -> dict[str, int]:
        cf = self.class_function(traces)
        out = {}
        for name, ch in self.chars.items():
            m = self.inner(cf, ch)
            if m.denominator != 1 or m < 0:
                raise NonIntegralMultiplicity(f"multiplicity {m} of {name}")
            if m:
                out[name] = int(m)
        if sum(m * self.degree(n) for n, m in out.items()) != cf[self._class_of[self.W.identity]]:
            raise NonIntegralMultiplicity("constituents do not add up to the dimension")
        return out

    def to_json(self) -> dict:
        return {
            "classes": [list(self.W.words[r]) for r in self.reps],
            "sizes": self.sizes,
            "characters": {n: [qstr(x) for x in ch] for n, ch in self.chars.items()},
        }


def w_character_of(matrices: Sequence, table: CharacterTable) -> dict[str, int]:
    """Constituents of the W-module given by one matrix per group element."""
    return table.decompose([linalg.trace(m) for m in matrices])


def omega_w_scalar(rs, table: CharacterTable, name: str) -> Fraction:
    """Scalar of sum_{alpha > 0} <alpha, alpha> (1 - s_alpha) on the irreducible ``name``."""
    W = table.W
    deg = table.chars[name][table.class_of(W.identity)]
    total = Fraction(0)
    for a in rs.positive:
        s = W.reflection(a)
        total += rs.killing(rs.roots[a], rs.roots[a]) * (1 - table.value(name, s) / deg)
    return total
