"""Finite-dimensional irreducible highest weight modules, built from the Cartan matrix.

The module is grown downward from a highest weight vector.  A vector in the
weight space of weight mu is recorded through its images under the simple
raising operators e_i (coordinates in the already known weight spaces
mu + alpha_i).  In an irreducible module that map is injective away from the
top, so linear dependencies among the candidates f_j b are detected exactly,
with no Gram matrices needed.  Each kept basis vector remembers the
(j, parent) with v = f_j parent, which gives a lowering recipe for every basis
vector.

Weights are Dynkin label tuples.  Operators are stored as weight blocks:
``E[i, mu]`` maps V_mu to V_{mu + alpha_i} and ``F[i, mu]`` maps V_mu to
V_{mu - alpha_i}.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from . import linalg
from .errors import DimensionCapExceeded, NotDominantIntegral

Weight = tuple[int, ...]


def root_vector_recipe(rs) -> dict[int, tuple[int, int, int]]:
    """For each non-simple positive root xi: (i, beta, p + 1), xi = alpha_i + beta, i minimal."""
    out = {}
    for xi in rs.positive:
        if xi < rs.rank:
            continue
        for i in rs.simple:
            beta = rs.root_index(tuple(a - b for a, b in zip(rs.roots[xi], rs.roots[i])))
            if beta is not None and beta < rs.n_pos:
                out[xi] = (i, beta, rs.string_down(i, beta) + 1)
                break
    return out


def _zeros(r: int, c: int):
    return [[Fraction(0)] * c for _ in range(r)]


def _mm(a, b, ncols: int):
    return linalg.matmul(a, b, ncols=ncols)


def _sub(a, b):
    return [[x - y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


class HighestWeightModule:
    def __init__(self, cartan: Sequence[Sequence[int]], top: Sequence, rs=None, recipe=None, dim_cap: int | None = None):
        self.cartan = tuple(tuple(int(x) for x in row) for row in cartan)
        self.rank = len(self.cartan)
        top_t = tuple(top)
        if any(Fraction(x).denominator != 1 or x < 0 for x in top_t):
            raise NotDominantIntegral(f"highest weight {top_t} is not dominant integral")
        self.top: Weight = tuple(int(x) for x in top_t)
        self.rs = rs
        self.recipe = recipe if recipe is not None else (root_vector_recipe(rs) if rs is not None else {})
        self.dim_cap = dim_cap
        # alpha_j in Dynkin labels: alpha_j(alpha_i-check) = cartan[i][j]
        self.simple_labels = tuple(tuple(self.cartan[i][j] for i in range(self.rank)) for j in range(self.rank))
        self.dims: dict[Weight, int] = {}
        self.E: dict[tuple[int, Weight], list] = {}
        self.F: dict[tuple[int, Weight], list] = {}
        self.parents: dict[Weight, list[tuple[int, int]]] = {}
        self.depth: dict[Weight, int] = {}
        self.weights: list[Weight] = []
        self._cache: dict = {}
        self._build()
        self.offset: dict[Weight, int] = {}
        n = 0
        for mu in self.weights:
            self.offset[mu] = n
            n += self.dims[mu]
        self.dim = n

    # -- construction -------------------------------------------------------
    def shift(self, mu: Weight, j: int, sign: int = 1) -> Weight:
        a = self.simple_labels[j]
        return tuple(m + sign * x for m, x in zip(mu, a))

    def d(self, mu: Weight) -> int:
        return self.dims.get(mu, 0)

    def _block_E(self, i: int, mu: Weight):
        blk = self.E.get((i, mu))
        if blk is None:
            return _zeros(self.d(self.shift(mu, i)), self.d(mu))
        return blk

    def _block_F(self, j: int, mu: Weight):
        blk = self.F.get((j, mu))
        if blk is None:
            return _zeros(self.d(self.shift(mu, j, -1)), self.d(mu))
        return blk

    def _build(self):
        top = self.top
        self.dims[top] = 1
        self.depth[top] = 0
        self.parents[top] = [(-1, -1)]
        self.weights.append(top)
        for i in range(self.rank):
            self.E[(i, top)] = _zeros(0, 1)
        layer = [top]
        total = 1
        depth = 0
        while layer:
            depth += 1
            cand = set()
            for nu in layer:
                for j in range(self.rank):
                    cand.add(self.shift(nu, j, -1))
            new_layer = []
            for mu in sorted(cand, reverse=True):
                n = self._grow(mu)
                if n:
                    self.depth[mu] = depth
                    self.weights.append(mu)
                    new_layer.append(mu)
                    total += n
                    if self.dim_cap is not None and total > self.dim_cap:
                        raise DimensionCapExceeded(f"module with highest weight {self.top} exceeds dimension cap {self.dim_cap}")
            layer = new_layer

    def _grow(self, mu: Weight) -> int:
        up = [self.shift(mu, i) for i in range(self.rank)]
        cands = []
        for j in range(self.rank):
            nu = up[j]
            for b in range(self.d(nu)):
                cands.append((j, b, self._e_image(mu, j, b)))
        kept: list[tuple[int, int, list]] = []
        for j, b, rep in cands:
            trial = [r for _, _, r in kept] + [rep]
            if linalg.rank(trial, len(rep)) == len(trial):
                kept.append((j, b, rep))
        n = len(kept)
        if n == 0:
            return 0
        self.dims[mu] = n
        self.parents[mu] = [(j, b) for j, b, _ in kept]
        basis = [r for _, _, r in kept]
        # F_j : V_{mu + alpha_j} -> V_mu
        fj_cols: dict[int, list] = {j: [] for j in range(self.rank)}
        for j, b, rep in cands:
            c = linalg.coordinates(basis, rep)
            assert c is not None
            fj_cols[j].append(c)
        for j in range(self.rank):
            nu = up[j]
            if self.d(nu):
                self.F[(j, nu)] = [[fj_cols[j][b][t] for b in range(self.d(nu))] for t in range(n)]
        # E_i : V_mu -> V_{mu + alpha_i}, read off the stored images
        pos = 0
        for i in range(self.rank):
            di = self.d(up[i])
            self.E[(i, mu)] = [[basis[t][pos + r] for t in range(n)] for r in range(di)]
            pos += di
        return n

    def _e_image(self, mu: Weight, j: int, b: int) -> list:
        """Concatenated (e_i f_j b)_i for the basis vector b of V_{mu + alpha_j}."""
        nu = self.shift(mu, j)
        out: list = []
        for i in range(self.rank):
            target = self.shift(mu, i)
            dt = self.d(target)
            if not dt:
                continue
            # e_i f_j b = f_j (e_i b) + delta_ij nu(h_i) b
            eb = [row[b] for row in self._block_E(i, nu)]
            src = self.shift(nu, i)
            vec = [Fraction(0)] * dt
            if eb and any(eb):
                fj = self._block_F(j, src)
                vec = linalg.matvec(fj, eb)
            if i == j:
                vec = list(vec)
                vec[b] += nu[i]
            out.extend(vec)
        return out

    # -- access --------------------------------------------------------------
    def root_labels(self, a: int) -> Weight:
        """Dynkin labels of root a of the attached root system."""
        c = self.rs.simple_coefficients[a]
        return tuple(sum(c[j] * self.simple_labels[j][i] for j in range(self.rank)) for i in range(self.rank))

    def block(self, a: int, mu: Weight):
        """Matrix of the root vector e_a (f for negative roots) from V_mu to V_{mu + a}."""
        key = (a, mu)
        if key in self._cache:
            return self._cache[key]
        rs = self.rs
        target = tuple(m + x for m, x in zip(mu, self.root_labels(a)))
        dm, dt = self.d(mu), self.d(target)
        if not dm or not dt:
            out = _zeros(dt, dm)
        elif a < rs.rank:
            out = self._block_E(a, mu)
        elif rs.n_pos <= a < rs.n_pos + rs.rank:
            out = self._block_F(a - rs.n_pos, mu)
        elif a < rs.n_pos:
            i, beta, den = self.recipe[a]
            mb = tuple(m + x for m, x in zip(mu, self.root_labels(beta)))
            mi = self.shift(mu, i)
            t1 = _mm(self.block(i, mb), self.block(beta, mu), dm)
            t2 = _mm(self.block(beta, mi), self.block(i, mu), dm)
            out = [[x / den for x in row] for row in _sub(t1, t2)]
        else:
            xi = a - rs.n_pos
            i, beta, den = self.recipe[xi]
            nb, ni = rs.negative_of(beta), rs.negative_of(i)
            mi = self.shift(mu, i, -1)
            mb = tuple(m + x for m, x in zip(mu, self.root_labels(nb)))
            t1 = _mm(self.block(nb, mi), self.block(ni, mu), dm)
            t2 = _mm(self.block(ni, mb), self.block(nb, mu), dm)
            out = [[x / den for x in row] for row in _sub(t1, t2)]
        self._cache[key] = out
        return out

    def coroot_value(self, a: int, mu: Weight) -> int:
        c = self.rs.coroot_coefficients[a]
        return sum(ci * m for ci, m in zip(c, mu))

    def full_root_matrix(self, a: int) -> list[list[Fraction]]:
        n = self.dim
        m = _zeros(n, n)
        lab = self.root_labels(a)
        for mu in self.weights:
            target = tuple(x + y for x, y in zip(mu, lab))
            if target not in self.dims:
                continue
            blk = self.block(a, mu)
            r0, c0 = self.offset[target], self.offset[mu]
            for r, row in enumerate(blk):
                for c, x in enumerate(row):
                    if x:
                        m[r0 + r][c0 + c] = x
        return m

    def full_coroot_matrix(self, a: int) -> list[list[Fraction]]:
        n = self.dim
        m = _zeros(n, n)
        for mu in self.weights:
            v = Fraction(self.coroot_value(a, mu))
            for t in range(self.dims[mu]):
                m[self.offset[mu] + t][self.offset[mu] + t] = v
        return m

    def full_cartan_matrix(self, i: int) -> list[list[Fraction]]:
        """h_i (simple coroot) acting diagonally."""
        n = self.dim
        m = _zeros(n, n)
        for mu in self.weights:
            for t in range(self.dims[mu]):
                m[self.offset[mu] + t][self.offset[mu] + t] = Fraction(mu[i])
        return m

    def weight_of(self, index: int) -> Weight:
        for mu in self.weights:
            if self.offset[mu] <= index < self.offset[mu] + self.dims[mu]:
                return mu
        raise IndexError(index)

    def lowering_word(self, mu: Weight, t: int) -> list[int]:
        """Simple indices j_1..j_r with basis vector (mu, t) = f_{j_1} ... f_{j_r} v_top."""
        word = []
        while mu != self.top:
            j, b = self.parents[mu][t]
            word.append(j)
            mu, t = self.shift(mu, j), b
        return word
