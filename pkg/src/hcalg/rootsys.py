"""Root systems, Weyl groups, multiplicity functions and Chevalley structure constants.

Roots are stored in the classical orthonormal ``e_i`` realisation (the
*ambient* coordinates).  For types A and G2 the roots span a hyperplane of the
ambient space; there the first ``rank`` ambient coordinates are used as
*working* coordinates on the weight space (the last one is minus their sum).
For the other types the working and ambient coordinates coincide.  Every
weight-space computation in the library uses working coordinates.

Positive roots are ordered by height and then by their simple-root
coefficients in decreasing lexicographic order, so the simple roots come
first; the negative roots follow in the same order.
"""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from itertools import combinations, product
from typing import Mapping, Sequence

from . import linalg
from .errors import JacobiFailure, OrbitMissingMultiplicity, UnsupportedType
from .rational import Q, qstr

Vec = tuple[Fraction, ...]

MAX_RANK = 4
# long roots of squared length 2 after this rescaling of the ambient dot product
_FORM_SCALE = {"A": 1, "B": 1, "C": Fraction(1, 2), "D": 1, "E": 1, "F": 1, "G": Fraction(1, 3)}


def _dual_coxeter(family: str, rank: int) -> int:
    return {
        "A": rank + 1,
        "B": 2 * rank - 1,
        "C": rank + 1,
        "D": 2 * rank - 2,
        "F": 9,
        "G": 4,
    }[family]


def _unit(n: int, i: int, c=1) -> list[Fraction]:
    v = [Fraction(0)] * n
    v[i] = Fraction(c)
    return v


def _ambient_roots(family: str, rank: int) -> tuple[int, list[Vec], list[Vec]]:
    """(ambient dimension, all roots, simple roots) in e_i coordinates."""
    n = rank

    def vec(*pairs, dim):
        v = [Fraction(0)] * dim
        for i, c in pairs:
            v[i] += Fraction(c)
        return tuple(v)

    roots: list[Vec] = []
    if family == "A":
        dim = n + 1
        for i in range(dim):
            for j in range(dim):
                if i != j:
                    roots.append(vec((i, 1), (j, -1), dim=dim))
        simple = [vec((i, 1), (i + 1, -1), dim=dim) for i in range(n)]
        return dim, roots, simple
    if family in ("B", "C", "D"):
        dim = n
        for i, j in combinations(range(n), 2):
            for si, sj in product((1, -1), repeat=2):
                roots.append(vec((i, si), (j, sj), dim=dim))
        if family != "D":
            c = 1 if family == "B" else 2
            for i in range(n):
                roots.append(vec((i, c), dim=dim))
                roots.append(vec((i, -c), dim=dim))
        simple = [vec((i, 1), (i + 1, -1), dim=dim) for i in range(n - 1)]
        if family == "B":
            simple.append(vec((n - 1, 1), dim=dim))
        elif family == "C":
            simple.append(vec((n - 1, 2), dim=dim))
        else:
            simple.append(vec((n - 2, 1), (n - 1, 1), dim=dim))
        return dim, roots, simple
    if family == "F":
        dim = 4
        for i in range(4):
            roots.append(vec((i, 1), dim=4))
            roots.append(vec((i, -1), dim=4))
        for i, j in combinations(range(4), 2):
            for si, sj in product((1, -1), repeat=2):
                roots.append(vec((i, si), (j, sj), dim=4))
        half = Fraction(1, 2)
        for signs in product((1, -1), repeat=4):
            roots.append(tuple(half * s for s in signs))
        simple = [
            vec((1, 1), (2, -1), dim=4),
            vec((2, 1), (3, -1), dim=4),
            vec((3, 1), dim=4),
            (half, -half, -half, -half),
        ]
        return dim, roots, simple
    if family == "G":
        dim = 3
        for i in range(3):
            for j in range(3):
                if i != j:
                    roots.append(vec((i, 1), (j, -1), dim=3))
            others = [j for j in range(3) if j != i]
            roots.append(vec((i, 2), (others[0], -1), (others[1], -1), dim=3))
            roots.append(vec((i, -2), (others[0], 1), (others[1], 1), dim=3))
        simple = [vec((0, 1), (1, -1), dim=3), vec((0, -2), (1, 1), (2, 1), dim=3)]
        return dim, roots, simple
    raise UnsupportedType(f"unknown family {family!r}")


def _check_type(family: str, rank: int) -> None:
    ok = {
        "A": rank >= 1,
        "B": rank >= 2,
        "C": rank >= 2,
        "D": rank >= 4,
        "E": False,
        "F": rank == 4,
        "G": rank == 2,
    }
    if family == "E":
        raise UnsupportedType(f"{family}{rank}: type E is not supported")
    if family not in ok or not ok[family]:
        raise UnsupportedType(f"{family}{rank} is not a valid (family, rank) pair")
    if rank > MAX_RANK:
        raise UnsupportedType(f"{family}{rank}: rank cap is {MAX_RANK}")


@dataclass(eq=False)
class RootSystem:
    family: str
    rank: int
    ambient_dim: int
    ambient_roots: tuple[Vec, ...]
    roots: tuple[Vec, ...]  # working coordinates; positives first, simple first
    n_pos: int
    gram: tuple[Vec, ...]  # standard form on working coordinates
    lift_matrix: tuple[Vec, ...] = field(repr=False)

    @property
    def name(self) -> str:
        return f"{self.family}{self.rank}"

    @property
    def n_roots(self) -> int:
        return len(self.roots)

    @property
    def positive(self) -> range:
        return range(self.n_pos)

    @property
    def simple(self) -> range:
        return range(self.rank)

    def negative_of(self, i: int) -> int:
        return i + self.n_pos if i < self.n_pos else i - self.n_pos

    @cached_property
    def index(self) -> dict[Vec, int]:
        return {r: i for i, r in enumerate(self.roots)}

    def root_index(self, v: Sequence) -> int | None:
        return self.index.get(tuple(Q(x) for x in v))

    # -- forms ---------------------------------------------------------------
    def inner(self, u: Sequence, v: Sequence) -> Fraction:
        g = self.gram
        return sum((u[i] * g[i][j] * v[j] for i in range(self.rank) for j in range(self.rank) if u[i] and v[j]), Fraction(0))

    @cached_property
    def dual_coxeter(self) -> int:
        return _dual_coxeter(self.family, self.rank)

    @cached_property
    def killing_gram(self) -> tuple[Vec, ...]:
        s = Fraction(1, 2 * self.dual_coxeter)
        return tuple(tuple(x * s for x in row) for row in self.gram)

    def killing(self, u: Sequence, v: Sequence) -> Fraction:
        return self.inner(u, v) / (2 * self.dual_coxeter)

    # -- coroots, Cartan matrix, weights ------------------------------------
    @cached_property
    def coroots(self) -> tuple[Vec, ...]:
        """alpha-check of each root as a linear functional on working coordinates."""
        out = []
        for a in self.roots:
            ga = [sum((self.gram[i][j] * a[j] for j in range(self.rank)), Fraction(0)) for i in range(self.rank)]
            n = self.inner(a, a)
            out.append(tuple(2 * x / n for x in ga))
        return tuple(out)

    def pair(self, lam: Sequence, i: int) -> Fraction:
        """lam(alpha_i-check)."""
        c = self.coroots[i]
        return sum((c[j] * lam[j] for j in range(self.rank)), Fraction(0))

    def dynkin(self, lam: Sequence) -> tuple[Fraction, ...]:
        return tuple(self.pair(lam, i) for i in self.simple)

    @cached_property
    def cartan(self) -> tuple[tuple[int, ...], ...]:
        """cartan[i][j] = alpha_j(alpha_i-check)."""
        return tuple(tuple(int(self.pair(self.roots[j], i)) for j in self.simple) for i in self.simple)

    @cached_property
    def fundamental_weights(self) -> tuple[Vec, ...]:
        c = [list(self.coroots[i]) for i in self.simple]
        inv = linalg.inverse(c)
        return tuple(tuple(inv[r][i] for r in range(self.rank)) for i in self.simple)

    def from_dynkin(self, labels: Sequence) -> Vec:
        out = [Fraction(0)] * self.rank
        for i, a in enumerate(labels):
            for r in range(self.rank):
                out[r] += Q(a) * self.fundamental_weights[i][r]
        return tuple(out)

    @cached_property
    def simple_coefficients(self) -> tuple[tuple[int, ...], ...]:
        """Coefficients of each root in the simple roots."""
        m = [[self.roots[i][r] for i in self.simple] for r in range(self.rank)]
        inv = linalg.inverse(m)
        out = []
        for a in self.roots:
            c = linalg.matvec(inv, a)
            out.append(tuple(int(x) for x in c))
        return tuple(out)

    def height(self, i: int) -> int:
        return sum(self.simple_coefficients[i])

    @cached_property
    def coroot_coefficients(self) -> tuple[tuple[int, ...], ...]:
        """Coefficients of each coroot in the simple coroots."""
        m = [[self.coroots[i][r] for i in self.simple] for r in range(self.rank)]
        inv = linalg.inverse(m)
        return tuple(tuple(int(x) for x in linalg.matvec(inv, c)) for c in self.coroots)

    @cached_property
    def rho(self) -> Vec:
        s = [Fraction(0)] * self.rank
        for i in self.positive:
            for r in range(self.rank):
                s[r] += self.roots[i][r]
        return tuple(x / 2 for x in s)

    @cached_property
    def highest_root(self) -> int:
        return max(self.positive, key=lambda i: (self.height(i), self.simple_coefficients[i]))

    def is_long(self, i: int) -> bool:
        return self.inner(self.roots[i], self.roots[i]) == max(self.inner(a, a) for a in self.roots)

    def reflect(self, i: int, lam: Sequence) -> Vec:
        p = self.pair(lam, i)
        a = self.roots[i]
        return tuple(Q(lam[r]) - p * a[r] for r in range(self.rank))

    def reflection_matrix(self, i: int) -> list[list[Fraction]]:
        a, c = self.roots[i], self.coroots[i]
        return [[(1 if r == s else 0) - a[r] * c[s] for s in range(self.rank)] for r in range(self.rank)]

    def string_down(self, i: int, j: int) -> int:
        """Largest p with root_j - p root_i a root."""
        p = 0
        a, b = self.roots[i], self.roots[j]
        while self.root_index(tuple(b[r] - (p + 1) * a[r] for r in range(self.rank))) is not None:
            p += 1
        return p

    def add_roots(self, i: int, j: int) -> int | None:
        a, b = self.roots[i], self.roots[j]
        return self.root_index(tuple(x + y for x, y in zip(a, b)))

    def ambient(self, v: Sequence) -> Vec:
        return tuple(sum((row[r] * v[r] for r in range(self.rank)), Fraction(0)) for row in self.lift_matrix)

    @cached_property
    def orbits(self) -> tuple[tuple[int, ...], ...]:
        """W-orbits of roots, ordered by their first simple root."""
        seen: dict[int, int] = {}
        orbits: list[list[int]] = []
        for start in self.simple:
            if start in seen:
                continue
            orb = {start}
            queue = deque([start])
            while queue:
                i = queue.popleft()
                for s in self.simple:
                    j = self.root_index(self.reflect(s, self.roots[i]))
                    if j not in orb:
                        orb.add(j)
                        queue.append(j)
            for i in orb:
                seen[i] = len(orbits)
            orbits.append(sorted(orb))
        return tuple(tuple(o) for o in orbits)

    @cached_property
    def orbit_names(self) -> tuple[str, ...]:
        if len(self.orbits) == 1:
            return ("all",)
        return tuple("long" if self.is_long(o[0]) else "short" for o in self.orbits)

    def orbit_of(self, i: int) -> int:
        for n, o in enumerate(self.orbits):
            if i in o:
                return n
        raise KeyError(i)

    def to_json(self) -> dict:
        return {
            "family": self.family,
            "rank": self.rank,
            "roots": [[qstr(x) for x in r] for r in self.ambient_roots],
            "simple": list(self.simple),
            "cartan": [list(r) for r in self.cartan],
            "killing": [[qstr(x) for x in row] for row in killing_pairing(self)],
        }


def build_root_system(family: str, rank: int) -> RootSystem:
    family = family.upper()
    _check_type(family, rank)
    dim, roots, simple = _ambient_roots(family, rank)
    # working coordinates
    drop = dim - rank
    if drop:
        lift = [[Fraction(1) if r == c else Fraction(0) for c in range(rank)] for r in range(rank)]
        lift.append([Fraction(-1)] * rank)
    else:
        lift = [[Fraction(1) if r == c else Fraction(0) for c in range(rank)] for r in range(rank)]
    scale = Fraction(_FORM_SCALE[family])
    gram = [
        [scale * sum((lift[t][r] * lift[t][c] for t in range(dim)), Fraction(0)) for c in range(rank)]
        for r in range(rank)
    ]

    def work(v):
        return tuple(v[:rank])

    simple_w = [work(s) for s in simple]
    inv = linalg.inverse([[s[r] for s in simple_w] for r in range(rank)])
    coeffs = {}
    for r in roots:
        c = linalg.matvec(inv, work(r))
        assert all(x.denominator == 1 for x in c), "root outside the root lattice"
        coeffs[r] = tuple(int(x) for x in c)
    pos = [r for r in roots if all(c >= 0 for c in coeffs[r])]
    pos.sort(key=lambda r: (sum(coeffs[r]), tuple(-c for c in coeffs[r])))
    neg = [tuple(-x for x in r) for r in pos]
    amb = tuple(pos + neg)
    rs = RootSystem(
        family=family,
        rank=rank,
        ambient_dim=dim,
        ambient_roots=amb,
        roots=tuple(work(r) for r in amb),
        n_pos=len(pos),
        gram=tuple(tuple(row) for row in gram),
        lift_matrix=tuple(tuple(row) for row in lift),
    )
    assert all(rs.roots[i] == simple_w[i] for i in range(rank))
    return rs


def killing_pairing(rs: RootSystem) -> list[list[Fraction]]:
    """Killing-normalised form on the weight space, in working coordinates."""
    return [list(row) for row in rs.killing_gram]


def killing_from_trace_form(rs: RootSystem) -> list[list[Fraction]]:
    """Independent route: dualise B(h, h') = sum over roots alpha(h) alpha(h') on h.

    Uses the simple coroots as a basis of h, so B_ij = sum_alpha alpha(h_i) alpha(h_j);
    the induced form on h* is then transported to working coordinates.
    """
    n = rs.rank
    b = [[sum((Fraction(rs.pair(a, i) * rs.pair(a, j)) for a in rs.roots), Fraction(0)) for j in range(n)] for i in range(n)]
    binv = linalg.inverse(b)
    # a weight lam corresponds to the functional h_i -> lam(h_i); <lam, mu> = l^T B^-1 m
    c = [list(rs.coroots[i]) for i in range(n)]  # l = C x
    return linalg.matmul(linalg.matmul(linalg.transpose(c), binv), c)


# ---------------------------------------------------------------------------
# Weyl group


@dataclass(eq=False)
class WeylGroup:
    rs: RootSystem
    perms: tuple[tuple[int, ...], ...]  # action on root indices
    words: tuple[tuple[int, ...], ...]  # reduced words over simple reflections
    matrices: tuple[tuple[Vec, ...], ...]  # action on working coordinates

    def __len__(self):
        return len(self.perms)

    @cached_property
    def lookup(self) -> dict[tuple[int, ...], int]:
        return {p: i for i, p in enumerate(self.perms)}

    @property
    def identity(self) -> int:
        return 0

    def mul(self, a: int, b: int) -> int:
        pa, pb = self.perms[a], self.perms[b]
        return self.lookup[tuple(pa[x] for x in pb)]

    def inv(self, a: int) -> int:
        p = self.perms[a]
        q = [0] * len(p)
        for i, x in enumerate(p):
            q[x] = i
        return self.lookup[tuple(q)]

    def length(self, a: int) -> int:
        return len(self.words[a])

    def simple_reflection(self, i: int) -> int:
        return self.lookup[_root_perm(self.rs, self.rs.reflection_matrix(i))]

    def reflection(self, root: int) -> int:
        return self.lookup[_root_perm(self.rs, self.rs.reflection_matrix(root))]

    def from_word(self, word: Sequence[int]) -> int:
        w = self.identity
        for i in word:
            w = self.mul(w, self.simple_reflection(i))
        return w

    def act(self, a: int, lam: Sequence) -> Vec:
        return tuple(Q(x) for x in linalg.matvec(self.matrices[a], lam))

    @cached_property
    def multiplication_table(self) -> list[list[int]]:
        return [[self.mul(a, b) for b in range(len(self))] for a in range(len(self))]

    @cached_property
    def conjugacy_classes(self) -> tuple[tuple[int, ...], ...]:
        gens = [self.simple_reflection(i) for i in self.rs.simple]
        seen: set[int] = set()
        classes = []
        for a in range(len(self)):
            if a in seen:
                continue
            cls = {a}
            queue = deque([a])
            while queue:
                x = queue.popleft()
                for g in gens:
                    y = self.mul(self.mul(g, x), g)
                    if y not in cls:
                        cls.add(y)
                        queue.append(y)
            seen |= cls
            classes.append(tuple(sorted(cls)))
        return tuple(classes)

    @cached_property
    def longest(self) -> int:
        return max(range(len(self)), key=self.length)


def _root_perm(rs: RootSystem, m) -> tuple[int, ...]:
    return tuple(rs.index[tuple(Q(x) for x in linalg.matvec(m, r))] for r in rs.roots)


def weyl_group(rs: RootSystem) -> WeylGroup:
    """All elements by breadth-first closure, so each stored word is reduced."""
    n = rs.rank
    gen_m = [rs.reflection_matrix(i) for i in rs.simple]
    gen_p = [_root_perm(rs, m) for m in gen_m]
    ident = tuple(range(rs.n_roots))
    perms = [ident]
    words: list[tuple[int, ...]] = [()]
    mats = [linalg.identity(n)]
    seen = {ident: 0}
    queue = deque([0])
    while queue:
        a = queue.popleft()
        pa = perms[a]
        for i, pg in enumerate(gen_p):
            p = tuple(pa[x] for x in pg)
            if p in seen:
                continue
            seen[p] = len(perms)
            perms.append(p)
            words.append(words[a] + (i,))
            mats.append(linalg.matmul(mats[a], gen_m[i], ncols=n))
            queue.append(len(perms) - 1)
    return WeylGroup(
        rs=rs,
        perms=tuple(perms),
        words=tuple(words),
        matrices=tuple(tuple(tuple(r) for r in m) for m in mats),
    )


# ---------------------------------------------------------------------------
# multiplicities


@dataclass(eq=False)
class MultiplicityFunction:
    """Orbit-constant function on the roots.

    ``values`` gives m on each W-orbit of the (reduced) root system; ``doubled``
    optionally gives m(2 alpha) on the short orbit of type B, which models the
    non-reduced system BC.  Hecke parameters are k = m + 2 m(2 alpha).
    """

    rs: RootSystem
    values: tuple[Fraction, ...]
    doubled: tuple[Fraction, ...] = ()

    def __post_init__(self):
        self.values = tuple(Q(v) for v in self.values)
        if len(self.values) != len(self.rs.orbits):
            raise OrbitMissingMultiplicity(
                f"{self.rs.name} has {len(self.rs.orbits)} root orbits, got {len(self.values)} values"
            )
        d = tuple(Q(v) for v in self.doubled) if self.doubled else tuple(Fraction(0) for _ in self.values)
        if len(d) != len(self.values):
            raise OrbitMissingMultiplicity("doubled multiplicities must be given per orbit")
        for n, x in enumerate(d):
            if x and not (self.rs.family == "B" and self.rs.orbit_names[n] == "short"):
                raise ValueError("2*alpha is a root only for the short orbit of type B (system BC)")
        self.doubled = d

    @classmethod
    def constant(cls, rs: RootSystem, value) -> "MultiplicityFunction":
        return cls(rs, tuple(value for _ in rs.orbits))

    def m(self, i: int) -> Fraction:
        return self.values[self.rs.orbit_of(i)]

    def m2(self, i: int) -> Fraction:
        return self.doubled[self.rs.orbit_of(i)]

    def hecke_k(self, i: int) -> Fraction:
        return self.m(i) + 2 * self.m2(i)

    def hecke_parameters(self) -> tuple[Fraction, ...]:
        return tuple(v + 2 * d for v, d in zip(self.values, self.doubled))

    def dunkl_parameters(self) -> tuple[Fraction, ...]:
        """k(alpha) = dim g_alpha / 2, with alpha and 2 alpha sharing one divided difference."""
        return tuple((v + d) / 2 for v, d in zip(self.values, self.doubled))

    def is_orbit_constant(self) -> bool:
        return all(len({self.m(i) for i in o}) == 1 for o in self.rs.orbits)


def orbit_parameters(rs: RootSystem, k) -> dict[int, object]:
    """Normalise parameters (scalar, per-orbit sequence or mapping) to root index -> value."""
    if isinstance(k, Mapping):
        per_orbit = [k[name] if name in k else k[n] for n, name in enumerate(rs.orbit_names)]
    elif isinstance(k, (list, tuple)):
        if len(k) != len(rs.orbits):
            raise OrbitMissingMultiplicity(f"{rs.name} needs {len(rs.orbits)} orbit values, got {len(k)}")
        per_orbit = list(k)
    else:
        per_orbit = [k] * len(rs.orbits)
    per_orbit = [x if not isinstance(x, (int, str)) else Q(x) for x in per_orbit]
    return {i: per_orbit[rs.orbit_of(i)] for i in range(rs.n_roots)}


# ---------------------------------------------------------------------------
# Chevalley basis


@dataclass(eq=False)
class ChevalleyData:
    """Structure constants of a Chevalley basis.

    Basis: e_alpha for every root alpha (e_{-alpha} plays the role of f_alpha)
    and the simple coroots h_i.  [e_a, e_b] = N[a, b] e_{a+b}, [e_a, e_{-a}] =
    alpha-check, [h_i, e_a] = alpha(h_i) e_a.  Non-simple positive roots are
    built as e_xi = [e_i, e_beta] / (p + 1) from the extraspecial pair
    (alpha_i, beta) with i minimal, so extraspecial constants are +(p + 1);
    negative root vectors use e_{-xi} = [e_{-beta}, e_{-alpha_i}] / (p + 1).
    """

    rs: RootSystem
    N: dict[tuple[int, int], int]
    recipe: dict[int, tuple[int, int, int]]  # xi -> (i, beta, p+1), positive xi

    def bracket_roots(self, a: int, b: int) -> dict:
        """[e_a, e_b] as {('e', root) | ('h', i): coeff}."""
        rs = self.rs
        if b == rs.negative_of(a):
            return {("h", i): c for i, c in enumerate(rs.coroot_coefficients[a]) if c}
        s = rs.add_roots(a, b)
        if s is None:
            return {}
        return {("e", s): self.N[(a, b)]}

    @cached_property
    def dim(self) -> int:
        return self.rs.n_roots + self.rs.rank


def chevalley_constants(rs: RootSystem) -> ChevalleyData:
    from .hwmodule import HighestWeightModule, root_vector_recipe

    if rs.rank > 3:
        raise UnsupportedType("Chevalley constants are provided for rank <= 3")
    recipe = root_vector_recipe(rs)
    adj = HighestWeightModule(rs.cartan, rs.dynkin(rs.roots[rs.highest_root]), rs, recipe)
    mats = {a: adj.full_root_matrix(a) for a in range(rs.n_roots)}
    N: dict[tuple[int, int], int] = {}
    for a in range(rs.n_roots):
        for b in range(rs.n_roots):
            s = rs.add_roots(a, b)
            if s is None:
                continue
            comm = _mcomm(mats[a], mats[b])
            target = mats[s]
            r, c = next((r, c) for r in range(len(target)) for c in range(len(target)) if target[r][c])
            n = comm[r][c] / target[r][c]
            if any(comm[x][y] != n * target[x][y] for x in range(len(target)) for y in range(len(target))):
                raise JacobiFailure(f"[e_{a}, e_{b}] is not proportional to e_{s}")
            if n.denominator != 1:
                raise JacobiFailure(f"non-integral structure constant N[{a},{b}] = {n}")
            N[(a, b)] = int(n)
    cd = ChevalleyData(rs=rs, N=N, recipe=recipe)
    # sl2 normalisation in the faithful adjoint module
    for a in rs.positive:
        comm = _mcomm(mats[a], mats[rs.negative_of(a)])
        h = adj.full_coroot_matrix(a)
        if comm != h:
            raise JacobiFailure(f"[e_a, f_a] != a-check for root {a}")
    failures = jacobi_failures(cd)
    if failures:
        raise JacobiFailure(f"Jacobi identity fails on {failures[0]}")
    return cd


def _mcomm(a, b):
    n = len(a)
    ab = linalg.matmul(a, b, ncols=n)
    ba = linalg.matmul(b, a, ncols=n)
    return [[ab[i][j] - ba[i][j] for j in range(n)] for i in range(n)]


def lie_bracket(cd: ChevalleyData, x: dict, y: dict) -> dict:
    """Bracket of two elements written as {('e', root) | ('h', i): coeff}."""
    rs = cd.rs
    out: dict = {}

    def add(key, c):
        v = out.get(key, 0) + c
        if v:
            out[key] = v
        else:
            out.pop(key, None)

    for (tx, ix), cx in x.items():
        for (ty, iy), cy in y.items():
            c = cx * cy
            if tx == "h" and ty == "h":
                continue
            if tx == "h" and ty == "e":
                add(("e", iy), c * rs.pair(rs.roots[iy], ix))
            elif tx == "e" and ty == "h":
                add(("e", ix), -c * rs.pair(rs.roots[ix], iy))
            else:
                for key, v in cd.bracket_roots(ix, iy).items():
                    add(key, c * v)
    return out


def lie_basis(cd: ChevalleyData) -> list[tuple[str, int]]:
    rs = cd.rs
    return [("e", a) for a in range(rs.n_roots)] + [("h", i) for i in rs.simple]


def jacobi_failures(cd: ChevalleyData, limit: int = 1) -> list:
    basis = lie_basis(cd)
    out = []
    for x, y, z in product(basis, repeat=3):
        X, Y, Z = {x: 1}, {y: 1}, {z: 1}
        t1 = lie_bracket(cd, X, lie_bracket(cd, Y, Z))
        t2 = lie_bracket(cd, Y, lie_bracket(cd, Z, X))
        t3 = lie_bracket(cd, Z, lie_bracket(cd, X, Y))
        tot: dict = {}
        for t in (t1, t2, t3):
            for k, v in t.items():
                tot[k] = tot.get(k, 0) + v
        if any(tot.values()):
            out.append((x, y, z))
            if len(out) >= limit:
                break
    return out


def root_system_json(rs: RootSystem) -> str:
    return json.dumps(rs.to_json(), sort_keys=True)
