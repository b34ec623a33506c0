"""Irreducible representations, zero weight spaces, smallness and the Casimir identities.

Highest weights are given in the ambient e_i coordinates of
:mod:`hcalg.rootsys` (use :func:`weight_from_dynkin` to start from Dynkin
labels).  Internally weights are Dynkin label tuples.  All matrices are
exact and are handled weight block by weight block.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from math import factorial
from typing import Sequence

from . import linalg
from .errors import DimensionCapExceeded, NotDominantIntegral
from .hwmodule import HighestWeightModule, root_vector_recipe
from .rational import Q, qstr
from .rootsys import ChevalleyData, RootSystem, WeylGroup
from .wchar import CharacterTable

DEFAULT_DIM_CAP = 400

Weight = tuple[int, ...]


# ---------------------------------------------------------------------------
# weights


def ambient_to_working(rs: RootSystem, lam: Sequence) -> tuple[Fraction, ...]:
    v = [Q(x) for x in lam]
    if len(v) == rs.rank:
        return tuple(v)
    if len(v) != rs.ambient_dim:
        raise ValueError(f"weight {lam} has the wrong number of coordinates")
    mean = sum(v, Fraction(0)) / len(v)
    return tuple(x - mean for x in v[: rs.rank])


def weight_labels(rs: RootSystem, lam: Sequence) -> Weight:
    """Dynkin labels of a dominant integral weight given in ambient coordinates."""
    d = rs.dynkin(ambient_to_working(rs, lam))
    if any(x.denominator != 1 or x < 0 for x in d):
        raise NotDominantIntegral(f"{list(lam)} is not dominant integral")
    return tuple(int(x) for x in d)


def weight_from_dynkin(rs: RootSystem, labels: Sequence) -> tuple[Fraction, ...]:
    """Ambient coordinates of the weight with the given Dynkin labels."""
    return rs.ambient(rs.from_dynkin(labels))


def _labels_to_working(rs, mu):
    return rs.from_dynkin(mu)


def _simple_labels(rs) -> list[Weight]:
    return [tuple(rs.cartan[i][j] for i in rs.simple) for j in rs.simple]


def _dominant(mu) -> bool:
    return all(x >= 0 for x in mu)


def _to_dominant(rs, mu: Weight) -> Weight:
    mu = list(mu)
    sl = _simple_labels(rs)
    while True:
        i = next((i for i, x in enumerate(mu) if x < 0), None)
        if i is None:
            return tuple(mu)
        c = mu[i]
        mu = [m - c * a for m, a in zip(mu, sl[i])]


def weyl_dimension(rs: RootSystem, labels: Sequence) -> int:
    lam = rs.from_dynkin(labels)
    lr = tuple(a + b for a, b in zip(lam, rs.rho))
    num = Fraction(1)
    for a in rs.positive:
        num *= rs.inner(lr, rs.roots[a]) / rs.inner(rs.rho, rs.roots[a])
    assert num.denominator == 1
    return int(num)


def _lowest_depths(rs, labels) -> list[int]:
    """Simple-root coefficients of lambda - w0 lambda."""
    lam = rs.from_dynkin(labels)
    low = min((tuple(linalg.matvec(m, lam)) for m in _weyl_matrices(rs)), key=lambda v: rs.inner(v, rs.rho))
    diff = [a - b for a, b in zip(lam, low)]
    inv = linalg.inverse([[rs.roots[i][r] for i in rs.simple] for r in range(rs.rank)])
    return [int(x) for x in linalg.matvec(inv, diff)]


_WCACHE: dict = {}


def _weyl_matrices(rs):
    from .rootsys import weyl_group

    key = id(rs)
    if key not in _WCACHE:
        _WCACHE[key] = (rs, weyl_group(rs))
    return _WCACHE[key][1].matrices


def dominant_weights(rs: RootSystem, labels: Sequence) -> list[Weight]:
    """Dominant mu with lambda - mu in the positive root cone, by increasing depth."""
    labels = tuple(int(x) for x in labels)
    bound = _lowest_depths(rs, labels)
    sl = _simple_labels(rs)
    out = []
    for n in product(*(range(b + 1) for b in bound)):
        mu = tuple(labels[i] - sum(n[j] * sl[j][i] for j in rs.simple) for i in rs.simple)
        if _dominant(mu):
            out.append((sum(n), n, mu))
    out.sort()
    return [mu for _, _, mu in out]


def freudenthal_dominant(rs: RootSystem, labels: Sequence) -> dict[Weight, int]:
    """Multiplicities of the dominant weights by Freudenthal's recursion."""
    labels = tuple(int(x) for x in labels)
    if any(x < 0 for x in labels):
        raise NotDominantIntegral(f"labels {labels} are not dominant")
    lam = rs.from_dynkin(labels)
    lr = tuple(a + b for a, b in zip(lam, rs.rho))
    top = rs.inner(lr, lr)
    pos_labels = [tuple(int(x) for x in rs.dynkin(rs.roots[a])) for a in rs.positive]
    mult: dict[Weight, int] = {}
    for mu in dominant_weights(rs, labels):
        if mu == labels:
            mult[mu] = 1
            continue
        muw = rs.from_dynkin(mu)
        mr = tuple(a + b for a, b in zip(muw, rs.rho))
        den = top - rs.inner(mr, mr)
        s = Fraction(0)
        for a, al in zip(rs.positive, pos_labels):
            j = 1
            while True:
                nu = tuple(m + j * x for m, x in zip(mu, al))
                m_nu = mult.get(_to_dominant(rs, nu), 0)
                if not m_nu:
                    # past the top of the string all further weights vanish too
                    if not _in_hull(rs, labels, nu):
                        break
                else:
                    s += m_nu * rs.inner(rs.from_dynkin(nu), rs.roots[a])
                j += 1
        m = 2 * s / den
        assert m.denominator == 1 and m >= 0
        if m:
            mult[mu] = int(m)
    return mult


def _in_hull(rs, labels, nu) -> bool:
    d = _to_dominant(rs, nu)
    lam = rs.from_dynkin(labels)
    diff = [a - b for a, b in zip(lam, rs.from_dynkin(d))]
    inv = linalg.inverse([[rs.roots[i][r] for i in rs.simple] for r in range(rs.rank)])
    return all(x >= 0 for x in linalg.matvec(inv, diff))


def freudenthal_weights(rs: RootSystem, lam: Sequence, labels: bool = False) -> dict[Weight, int]:
    """All weight multiplicities (keys are Dynkin labels).

    ``lam`` is in ambient coordinates unless ``labels`` is true.
    """
    lab = tuple(int(x) for x in lam) if labels else weight_labels(rs, lam)
    dom = freudenthal_dominant(rs, lab)
    out: dict[Weight, int] = {}
    mats = _weyl_matrices(rs)
    for mu, m in dom.items():
        w = rs.from_dynkin(mu)
        for M in mats:
            nu = tuple(int(x) for x in rs.dynkin(linalg.matvec(M, w)))
            out[nu] = m
    return out


def is_small(rs: RootSystem, lam: Sequence, labels: bool = False) -> bool:
    """No weight of V(lambda) is twice a root."""
    wts = freudenthal_weights(rs, lam, labels)
    for a in rs.positive:
        two = tuple(2 * int(x) for x in rs.dynkin(rs.roots[a]))
        if two in wts:
            return False
    return True


# ---------------------------------------------------------------------------
# explicit modules


def _mm(a, b, ncols):
    return linalg.matmul(a, b, ncols=ncols)


class Irrep:
    def __init__(self, rs: RootSystem, cd: ChevalleyData | None, labels: Sequence, dim_cap: int | None = DEFAULT_DIM_CAP):
        self.rs, self.cd = rs, cd
        self.labels: Weight = tuple(int(x) for x in labels)
        recipe = cd.recipe if cd is not None else root_vector_recipe(rs)
        if dim_cap is not None and weyl_dimension(rs, self.labels) > dim_cap:
            raise DimensionCapExceeded(f"dim V({self.labels}) = {weyl_dimension(rs, self.labels)} > {dim_cap}")
        self.hw = HighestWeightModule(rs.cartan, self.labels, rs, recipe, dim_cap)
        self.dim = self.hw.dim
        self.zero: Weight = (0,) * rs.rank

    @property
    def highest_weight(self) -> tuple[Fraction, ...]:
        return weight_from_dynkin(self.rs, self.labels)

    @property
    def weights(self) -> dict[Weight, int]:
        return dict(self.hw.dims)

    def mult(self, mu: Weight) -> int:
        return self.hw.d(mu)

    def root_labels(self, a: int) -> Weight:
        return self.hw.root_labels(a)

    def block(self, a: int, mu: Weight):
        return self.hw.block(a, mu)

    def shift(self, mu: Weight, a: int, times: int = 1) -> Weight:
        lab = self.root_labels(a)
        return tuple(m + times * x for m, x in zip(mu, lab))

    def matrix(self, a: int):
        return self.hw.full_root_matrix(a)

    # -- relation checks, weight block by weight block -----------------------
    def bracket_check(self, pairs=None) -> dict:
        """[e_a, e_b] relations of the Chevalley basis on every weight block."""
        rs, cd = self.rs, self.cd
        fails = []
        if pairs is None:
            pairs = [(a, b) for a in range(rs.n_roots) for b in range(rs.n_roots) if a < b]
        for a, b in pairs:
            for mu in self.hw.weights:
                dm = self.hw.d(mu)
                ab = _mm(self.block(a, self.shift(mu, b)), self.block(b, mu), dm)
                ba = _mm(self.block(b, self.shift(mu, a)), self.block(a, mu), dm)
                comm = [[x - y for x, y in zip(r1, r2)] for r1, r2 in zip(ab, ba)]
                if b == rs.negative_of(a):
                    v = self.hw.coroot_value(a, mu)
                    want = [[Fraction(v) if r == c else Fraction(0) for c in range(dm)] for r in range(dm)]
                else:
                    s = rs.add_roots(a, b)
                    if s is None:
                        want = [[Fraction(0)] * dm for _ in comm]
                    else:
                        n = cd.N[(a, b)]
                        want = [[n * x for x in row] for row in self.block(s, mu)]
                if comm != want:
                    fails.append((a, b, mu))
                    break
        return {"pass": not fails, "failures": fails[:3], "checked": len(pairs)}

    # -- zero weight space ---------------------------------------------------
    @property
    def dim_zero(self) -> int:
        return self.mult(self.zero)

    def square_on_zero(self, a: int):
        """matrix of e_a^2 from V_0 to V_{2a}."""
        z = self.zero
        one = self.shift(z, a)
        return _mm(self.block(a, one), self.block(a, z), self.dim_zero)

    def square_into_zero(self, a: int):
        """matrix of e_a^2 from V_{-2a} to V_0."""
        src = self.shift(self.zero, a, -2)
        mid = self.shift(self.zero, a, -1)
        return _mm(self.block(a, mid), self.block(a, src), self.mult(src))

    def _exp_on(self, a: int, t: Fraction, vec: dict) -> dict:
        """exp(t e_a) on a graded vector {weight: coordinates}."""
        out = {mu: list(v) for mu, v in vec.items()}
        cur = vec
        n = 1
        while cur:
            nxt = {}
            for mu, v in cur.items():
                tgt = self.shift(mu, a)
                if not self.mult(tgt):
                    continue
                img = linalg.matvec(self.block(a, mu), v)
                if any(img):
                    acc = nxt.setdefault(tgt, [Fraction(0)] * self.mult(tgt))
                    for i, x in enumerate(img):
                        acc[i] += x
            cur = nxt
            coef = t ** n / factorial(n)
            for mu, v in cur.items():
                acc = out.setdefault(mu, [Fraction(0)] * self.mult(mu))
                for i, x in enumerate(v):
                    acc[i] += coef * x
            n += 1
        return out

    def tits_on_zero(self, i: int):
        """exp(e_i) exp(-f_i) exp(e_i) restricted to V_0, as a matrix."""
        rs = self.rs
        m = self.dim_zero
        cols = []
        for c in range(m):
            v = {self.zero: [Fraction(1) if r == c else Fraction(0) for r in range(m)]}
            v = self._exp_on(i, Fraction(1), v)
            v = self._exp_on(rs.negative_of(i), Fraction(-1), v)
            v = self._exp_on(i, Fraction(1), v)
            for mu, x in v.items():
                if mu != self.zero and any(x):
                    raise AssertionError("Tits representative does not preserve V_0")
            cols.append(v.get(self.zero, [Fraction(0)] * m))
        return linalg.transpose(cols) if cols else []


def construct_irrep(rs: RootSystem, cd: ChevalleyData | None, lam: Sequence, dim_cap: int | None = DEFAULT_DIM_CAP, labels: bool = False) -> Irrep:
    lab = tuple(int(x) for x in lam) if labels else weight_labels(rs, lam)
    return Irrep(rs, cd, lab, dim_cap)


# ---------------------------------------------------------------------------
# zero weight decomposition


@dataclass(eq=False)
class ZeroWeightDecomposition:
    V: Irrep
    W: WeylGroup
    single: list  # basis rows (coordinates in V_0)
    double: list
    simple_kernel: list
    w_matrices: list  # one matrix on V_0 per element of W
    relations_ok: bool

    @property
    def dim(self) -> int:
        return self.V.dim_zero

    def restricted(self, basis) -> list | None:
        out = []
        for m in self.w_matrices:
            r = linalg.restrict(m, [list(b) for b in basis])
            if r is None:
                return None
            out.append(r)
        return out

    def direct_sum_ok(self) -> bool:
        n = self.dim
        return (
            len(self.single) + len(self.double) == n
            and not linalg.intersect(self.single, self.double, n)
            and len(linalg.subspace_sum(self.single, self.double, n)) == n
        )


def zero_weight_decomposition(V: Irrep, W: WeylGroup) -> ZeroWeightDecomposition:
    rs = V.rs
    n = V.dim_zero
    rows = []
    for a in list(rs.positive) + [rs.negative_of(a) for a in rs.positive]:
        rows.extend(V.square_on_zero(a))
    single = linalg.row_basis(linalg.nullspace(rows, n), n) if n else []
    srows = []
    for i in rs.simple:
        srows.extend(V.square_on_zero(i))
    simple_kernel = linalg.row_basis(linalg.nullspace(srows, n), n) if n else []
    imgs = []
    for a in list(rs.positive) + [rs.negative_of(a) for a in rs.positive]:
        m = V.square_into_zero(a)
        imgs.extend(linalg.transpose(m) if m and m[0] else [])
    double = linalg.row_basis(imgs, n) if imgs else []
    # W on V_0 through Tits representatives
    gens = [V.tits_on_zero(i) for i in rs.simple]
    ident = linalg.identity(n)
    ok = True
    for i in rs.simple:
        if linalg.matmul(gens[i], gens[i], ncols=n) != ident:
            ok = False
    from .hecke import coxeter_exponent

    for i, j in product(rs.simple, repeat=2):
        if i < j:
            m = coxeter_exponent(rs.cartan[i][j], rs.cartan[j][i])
            a = b = ident
            for t in range(m):
                a = linalg.matmul(a, gens[i] if t % 2 == 0 else gens[j], ncols=n)
                b = linalg.matmul(b, gens[j] if t % 2 == 0 else gens[i], ncols=n)
            if a != b:
                ok = False
    mats = []
    for w in range(len(W)):
        m = ident
        for i in W.words[w]:
            m = linalg.matmul(m, gens[i], ncols=n)
        mats.append(m)
    if not all(linalg.in_span(simple_kernel, v, n) for v in single):
        raise AssertionError("kernel over all roots is not inside the simple-root kernel")
    return ZeroWeightDecomposition(V, W, single, double, simple_kernel, mats, ok)


def single_constituents(Z: ZeroWeightDecomposition, table: CharacterTable) -> dict[str, int]:
    if not Z.single:
        return {}
    r = Z.restricted(Z.single)
    if r is None:
        raise AssertionError("V^h_single is not W-stable")
    return table.decompose([linalg.trace(m) for m in r])


def zero_constituents(Z: ZeroWeightDecomposition, table: CharacterTable) -> dict[str, int]:
    if not Z.dim:
        return {}
    return table.decompose([linalg.trace(m) for m in Z.w_matrices])


# ---------------------------------------------------------------------------
# Casimir


def casimir_scalar(rs: RootSystem, lam: Sequence, labels: bool = False) -> Fraction:
    """<lambda, lambda + 2 rho> in the Killing normalisation."""
    w = rs.from_dynkin(lam) if labels else ambient_to_working(rs, lam)
    return rs.killing(w, tuple(a + 2 * b for a, b in zip(w, rs.rho)))


def _cartan_dual(rs) -> list[list[Fraction]]:
    """Inverse of B(h_i, h_j) on the simple coroots, Killing normalised."""
    n = rs.rank
    b = [
        [
            4 * rs.killing(rs.roots[i], rs.roots[j]) / (rs.killing(rs.roots[i], rs.roots[i]) * rs.killing(rs.roots[j], rs.roots[j]))
            for j in range(n)
        ]
        for i in range(n)
    ]
    return linalg.inverse(b)


def casimir_blocks(V: Irrep) -> dict[Weight, list]:
    """The Casimir operator on each weight space."""
    rs = V.rs
    binv = _cartan_dual(rs)
    out = {}
    for mu in V.hw.weights:
        dm = V.mult(mu)
        cart = sum((binv[i][j] * mu[i] * mu[j] for i in rs.simple for j in rs.simple), Fraction(0))
        m = [[cart if r == c else Fraction(0) for c in range(dm)] for r in range(dm)]
        for a in rs.positive:
            na = rs.negative_of(a)
            coef = rs.killing(rs.roots[a], rs.roots[a]) / 2  # 1 / B(e_a, f_a)
            ef = _mm(V.block(a, V.shift(mu, na)), V.block(na, mu), dm)
            fe = _mm(V.block(na, V.shift(mu, a)), V.block(a, mu), dm)
            for r in range(dm):
                for c in range(dm):
                    m[r][c] += coef * (ef[r][c] + fe[r][c])
        out[mu] = m
    return out


def omega_w_matrix(Z: ZeroWeightDecomposition) -> list:
    rs, W = Z.V.rs, Z.W
    n = Z.dim
    out = linalg.zeros(n, n)
    for a in rs.positive:
        s = Z.w_matrices[W.reflection(a)]
        c = rs.killing(rs.roots[a], rs.roots[a])
        for r in range(n):
            for q in range(n):
                out[r][q] += c * ((1 if r == q else 0) - s[r][q])
    return out


def verify_casimir_identity(V: Irrep, Z: ZeroWeightDecomposition) -> dict:
    rs = V.rs
    want = casimir_scalar(rs, V.labels, labels=True)
    g_ok = all(
        blk == [[want if r == c else Fraction(0) for c in range(len(blk))] for r in range(len(blk))]
        for blk in casimir_blocks(V).values()
    )
    w_ok = True
    if Z.single:
        om = omega_w_matrix(Z)
        for v in Z.single:
            img = linalg.matvec(om, v)
            if img != [want * x for x in v]:
                w_ok = False
    return {"pass": g_ok and w_ok, "scalar": qstr(want), "omega_g": g_ok, "omega_w_on_single": w_ok}


# ---------------------------------------------------------------------------
# quasi-small multiplicity


def end_rho_multiplicity(rs: RootSystem, labels: Sequence) -> int:
    """Multiplicity of V(lambda) in V(rho) (x) V(rho)^*.

    Equal to the multiplicity of V(rho) in V(lambda) (x) V(rho); by the
    Brauer-Klimyk rule this is sum_w sgn(w) m_lambda(2 (w rho - rho)).
    """
    from .rootsys import weyl_group

    W = weyl_group(rs) if id(rs) not in _WCACHE else _WCACHE[id(rs)][1]
    wts = freudenthal_weights(rs, labels, labels=True)
    total = 0
    for w in range(len(W)):
        wr = W.act(w, rs.rho)
        mu = tuple(2 * (a - b) for a, b in zip(wr, rs.rho))
        lab = tuple(int(x) for x in rs.dynkin(mu))
        total += (-1) ** W.length(w) * wts.get(lab, 0)
    return total


def quasi_small_multiplicity(V: Irrep, Z: ZeroWeightDecomposition) -> dict:
    a = len(Z.simple_kernel)
    b = end_rho_multiplicity(V.rs, V.labels)
    return {"pass": a == b, "kernel": a, "character": b}


# ---------------------------------------------------------------------------
# sweeps


def dominant_sweep(rs: RootSystem, dim_cap: int) -> list[Weight]:
    """All dominant integral labels with Weyl dimension <= dim_cap, in a fixed order."""
    out = []
    frontier = [(0,) * rs.rank]
    seen = set(frontier)
    while frontier:
        nxt = []
        for lab in frontier:
            if weyl_dimension(rs, lab) > dim_cap:
                continue
            out.append(lab)
            for i in rs.simple:
                up = tuple(x + (1 if j == i else 0) for j, x in enumerate(lab))
                if up not in seen:
                    seen.add(up)
                    nxt.append(up)
        frontier = nxt
    return sorted(out, key=lambda l: (weyl_dimension(rs, l), l))


def in_root_lattice(rs: RootSystem, labels: Sequence) -> bool:
    w = rs.from_dynkin(labels)
    inv = linalg.inverse([[rs.roots[i][r] for i in rs.simple] for r in range(rs.rank)])
    return all(x.denominator == 1 for x in linalg.matvec(inv, w))


def classify_row(rs, cd, W, table, labels, dim_cap=DEFAULT_DIM_CAP) -> dict:
    lam_amb = weight_from_dynkin(rs, labels)
    dim = weyl_dimension(rs, labels)
    small = is_small(rs, labels, labels=True)
    row = {
        "lambda": [qstr(x) for x in lam_amb],
        "labels": list(labels),
        "dim": dim,
        "small": small,
        "casimir": qstr(casimir_scalar(rs, labels, labels=True)),
    }
    if not in_root_lattice(rs, labels):
        row.update({"quasi_small": False, "dim_Vh": 0, "dim_single": 0, "W_constituents": {}})
        return row
    V = Irrep(rs, cd, labels, dim_cap)
    Z = zero_weight_decomposition(V, W)
    row.update(
        {
            "quasi_small": bool(Z.single),
            "dim_Vh": Z.dim,
            "dim_single": len(Z.single),
            "W_constituents": single_constituents(Z, table),
        }
    )
    return row
