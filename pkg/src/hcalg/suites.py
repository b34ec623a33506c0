"""Verification suites and table/classification reports.

Every suite returns a plain dict that serialises deterministically: exact
rationals as strings, no timings, the seed embedded.  A suite is a list of
checks; each check records what outcome is expected (``"pass"`` or, for
the negative direction of an if-and-only-if statement, ``"fail"``) and what
was observed.  The suite passes when every observation matches its
expectation.
"""

from __future__ import annotations

import random
from dataclasses import asdict, dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Callable

from .errors import UnknownSuite
from .rational import KPoly, Q, qstr
from .rootsys import MultiplicityFunction, build_root_system, chevalley_constants, weyl_group


@dataclass
class RunConfig:
    family: str | None = None
    rank: int | None = None
    k: str | None = None
    max_degree: int | None = None
    dim_cap: int | None = None
    lam: str | None = None
    seed: int = 0
    fmt: str = "json"
    out: str | None = None

    def types(self, default: list[tuple[str, int]]) -> list[tuple[str, int]]:
        if self.family:
            if self.rank is None:
                raise ValueError("--type needs --rank")
            return [(self.family.upper(), self.rank)]
        return default

    def describe(self) -> dict:
        d = asdict(self)
        d.pop("fmt")
        d.pop("out")
        return d


# ---------------------------------------------------------------------------
# shared data


@lru_cache(maxsize=None)
def data(family: str, rank: int):
    rs = build_root_system(family, rank)
    return rs, weyl_group(rs)


@lru_cache(maxsize=None)
def chevalley(family: str, rank: int):
    return chevalley_constants(data(family, rank)[0])


@lru_cache(maxsize=None)
def character_table(family: str, rank: int):
    from .wchar import CharacterTable

    return CharacterTable(data(family, rank)[1])


# complex groups have dim g_alpha = 2; for B2 take the restricted roots of so(2,5)
GEOMETRIC_PRESETS = {("B", 2): (1, 3)}


def geometric_multiplicity(rs, values=None) -> MultiplicityFunction:
    if values is None:
        values = GEOMETRIC_PRESETS.get((rs.family, rs.rank), tuple(2 for _ in rs.orbits))
    values = list(values)
    doubled = ()
    if len(values) == len(rs.orbits) + 1:
        doubled = tuple(values[-1] if name == "short" else 0 for name in rs.orbit_names)
        values = values[:-1]
    return MultiplicityFunction(rs, tuple(values), doubled)


def parse_k(rs, text: str | None, kind: str = "hecke"):
    """Parameter per orbit from a CLI string: "a,b", "generic" or "geometric[:m1,m2[,m2alpha]]"."""
    if text is None:
        return None
    text = text.strip()
    if text == "generic":
        return tuple(KPoly.gen() for _ in rs.orbits)
    if text.startswith("geometric"):
        vals = None
        if ":" in text:
            vals = [Q(x) for x in text.split(":", 1)[1].split(",")]
        mf = geometric_multiplicity(rs, vals)
        return mf.hecke_parameters() if kind == "hecke" else mf.dunkl_parameters()
    vals = [Q(x) for x in text.split(",")]
    if len(vals) == 1:
        vals = vals * len(rs.orbits)
    if len(vals) != len(rs.orbits):
        raise ValueError(f"{rs.name} needs {len(rs.orbits)} parameter values")
    return tuple(vals)


def k_label(k) -> str:
    return ",".join(qstr(x) for x in k)


def hecke_grid(rs) -> list[tuple[str, tuple]]:
    n = len(rs.orbits)
    return [
        ("0", tuple(Fraction(0) for _ in range(n))),
        ("1", tuple(Fraction(1) for _ in range(n))),
        ("-1", tuple(Fraction(-1) for _ in range(n))),
        ("geometric", geometric_multiplicity(rs).hecke_parameters()),
        ("generic", tuple(KPoly.gen() for _ in range(n))),
    ]


def _check(name: str, passed: bool, expect: str = "pass", **info) -> dict:
    observed = "pass" if passed else "fail"
    return {"name": name, "expect": expect, "observed": observed, "ok": observed == expect, **info}


def _report(suite: str, cfg: RunConfig, checks: list[dict]) -> dict:
    return {"suite": suite, "config": cfg.describe(), "checks": checks, "pass": all(c["ok"] for c in checks)}


# ---------------------------------------------------------------------------
# suites


def suite_dunkl(cfg: RunConfig) -> dict:
    from .dunkl import dunkl_commutator_check

    rng = random.Random(cfg.seed)
    D = cfg.max_degree if cfg.max_degree is not None else 5
    checks = []
    for fam, r in cfg.types([("A", 2), ("B", 2), ("G", 2)]):
        rs, _ = data(fam, r)
        if cfg.k:
            ks = [parse_k(rs, cfg.k, "dunkl")]
        else:
            ks = [tuple(Fraction(rng.randint(-9, 9), rng.randint(1, 9)) for _ in rs.orbits) for _ in range(3)]
        for k in ks:
            for i in range(rs.rank):
                for j in range(i + 1, rs.rank):
                    xi = tuple(1 if t == i else 0 for t in range(rs.rank))
                    eta = tuple(1 if t == j else 0 for t in range(rs.rank))
                    rep = dunkl_commutator_check(rs, k, xi, eta, D)
                    checks.append(
                        _check(f"{rs.name} k=({k_label(k)}) T{i}T{j}", rep["pass"], checked=rep["checked"], counterexample=rep["counterexample"])
                    )
    return _report("dunkl", cfg, checks)


def _hecke_params(cfg, rs):
    if cfg.k:
        return [(cfg.k, parse_k(rs, cfg.k))]
    return hecke_grid(rs)


def suite_hecke_fixed(cfg: RunConfig) -> dict:
    from .hecke import HeckeAlgebra, sh_fixed_check

    D = cfg.max_degree if cfg.max_degree is not None else 6
    checks = []
    for fam, r in cfg.types([("A", 1), ("A", 2), ("B", 2), ("G", 2)]):
        rs, W = data(fam, r)
        for label, k in _hecke_params(cfg, rs):
            H = HeckeAlgebra(rs, W, k)
            rep = sh_fixed_check(H, D)
            checks.append(_check(f"{rs.name} k={label}", rep["pass"], fixed_dims=rep["fixed_dims"], invariant_dims=rep["invariant_dims"]))
    return _report("hecke-fixed", cfg, checks)


def suite_hecke_eigen(cfg: RunConfig) -> dict:
    from .hecke import HeckeAlgebra, eigenspace_check

    D = cfg.max_degree if cfg.max_degree is not None else 6
    checks = []
    for fam, r in cfg.types([("A", 1), ("A", 2), ("B", 2), ("G", 2)]):
        rs, W = data(fam, r)
        for label, k in _hecke_params(cfg, rs):
            H = HeckeAlgebra(rs, W, k)
            for i in rs.simple:
                rep = eigenspace_check(H, i, D)
                checks.append(
                    _check(
                        f"{rs.name} k={label} simple {i}",
                        rep["pass"],
                        plus_dim=rep["plus_dim"],
                        minus_dim=rep["minus_dim"],
                        total_dim=rep["total_dim"],
                    )
                )
    return _report("hecke-eigen", cfg, checks)


# denominators 7 and 11 keep every lambda(alpha-check) away from integers
_GRID_A = [Fraction(-9, 7), Fraction(-2, 7), Fraction(3, 7), Fraction(6, 7), Fraction(13, 7)]
_GRID_B = [Fraction(-13, 11), Fraction(-4, 11), Fraction(2, 11), Fraction(7, 11), Fraction(16, 11)]


def a_lambda_grid(rs) -> list[tuple]:
    if rs.rank == 1:
        return [(a,) for a in _GRID_A]
    if rs.rank == 2:
        return [(a, b) for a in _GRID_A for b in _GRID_B]
    raise ValueError("the lambda grid is defined for rank <= 2")


def suite_a_lambda(cfg: RunConfig) -> dict:
    from .hecke import HeckeAlgebra, build_A_lambda, submodule_lattice
    from .polyalg import GradedBasis

    checks = []
    for fam, r in cfg.types([("A", 1), ("A", 2), ("B", 2), ("G", 2)]):
        rs, W = data(fam, r)
        H = HeckeAlgebra(rs, W, -1)
        gb = GradedBasis(rs, W, rs.n_pos + 1)
        if cfg.lam:
            points = [tuple(Q(x) for x in cfg.lam.split(","))]
            lams = [rs.from_dynkin(p) for p in points]
        else:
            points = a_lambda_grid(rs)
            lams = [rs.from_dynkin(p) for p in points]
        for p, lam in zip(points, lams):
            M = build_A_lambda(H, lam, gb)
            rel = M.relations_check()
            spectrum = M.spectrum_check()
            lat = submodule_lattice(M)
            off_one = all(rs.pair(lam, a) not in (1, -1) for a in rs.positive)
            irreducible = lat["dims"] == [0, M.dim]
            checks.append(
                _check(
                    f"{rs.name} lambda-labels=({k_label(p)})",
                    rel["pass"] and spectrum["pass"] and (irreducible or not off_one),
                    dim=M.dim,
                    dominant=M.dominant(),
                    lattice={"dims": lat["dims"], "hasse": lat["hasse"], "complete": lat["complete"]},
                )
            )
        if rs.rank == 1 and not cfg.lam:
            lam = rs.from_dynkin((1,))
            M = build_A_lambda(H, lam, gb)
            lat = submodule_lattice(M)
            checks.append(
                _check(
                    f"{rs.name} lambda(alpha-check)=1 is reducible",
                    lat["dims"] == [0, 1, 2] and M.relations_check()["pass"],
                    lattice={"dims": lat["dims"], "hasse": lat["hasse"], "complete": lat["complete"]},
                    submodule=lat["bases"][1] if len(lat["bases"]) > 2 else None,
                )
            )
    return _report("a-lambda", cfg, checks)


def suite_casimir(cfg: RunConfig) -> dict:
    from .repth import (
        Irrep,
        dominant_sweep,
        in_root_lattice,
        single_constituents,
        verify_casimir_identity,
        zero_weight_decomposition,
    )
    from .wchar import omega_w_scalar

    cap = cfg.dim_cap if cfg.dim_cap is not None else 400
    checks = []
    for fam, r in cfg.types([("B", 2)]):
        rs, W = data(fam, r)
        cd = chevalley(fam, r)
        T = character_table(fam, r)
        found = []
        for lab in dominant_sweep(rs, cap):
            if not in_root_lattice(rs, lab):
                continue
            V = Irrep(rs, cd, lab, cap)
            Z = zero_weight_decomposition(V, W)
            if not Z.single:
                continue
            found.append(list(lab))
            rep = verify_casimir_identity(V, Z)
            cons = single_constituents(Z, T)
            scal = {n: qstr(omega_w_scalar(rs, T, n)) for n in cons}
            same = all(v == rep["scalar"] for v in scal.values())
            checks.append(
                _check(
                    f"{rs.name} labels={list(lab)}",
                    rep["pass"] and same,
                    scalar=rep["scalar"],
                    omega_g=rep["omega_g"],
                    omega_w_on_single=rep["omega_w_on_single"],
                    constituents=cons,
                    constituent_scalars=scal,
                )
            )
        checks.append(_check(f"{rs.name} quasi-small sweep dim<={cap}", True, quasi_small=found))
    return _report("casimir", cfg, checks)


def suite_quasi_small(cfg: RunConfig) -> dict:
    from .repth import Irrep, dominant_sweep, end_rho_multiplicity, in_root_lattice, zero_weight_decomposition

    cap = cfg.dim_cap if cfg.dim_cap is not None else 40
    checks = []
    for fam, r in cfg.types([("B", 2)]):
        rs, W = data(fam, r)
        cd = chevalley(fam, r)
        for lab in dominant_sweep(rs, cap):
            if in_root_lattice(rs, lab):
                Z = zero_weight_decomposition(Irrep(rs, cd, lab, cap), W)
                a = len(Z.simple_kernel)
            else:
                a = 0
            b = end_rho_multiplicity(rs, lab)
            checks.append(_check(f"{rs.name} labels={list(lab)}", a == b, kernel=a, character=b))
    return _report("quasi-small", cfg, checks)


def _hc_cases(cfg):
    if cfg.lam:
        fam, r = cfg.types([("A", 1)])[0]
        labels = tuple(int(x) for x in cfg.lam.split(","))
        d = cfg.max_degree if cfg.max_degree is not None else (5 if r == 1 else 4)
        return [(fam, r, labels, d)]
    cases = []
    for fam, r in cfg.types([("A", 1), ("A", 2)]):
        d_adj = 5 if r == 1 else 4
        if cfg.max_degree is not None:
            d_adj = cfg.max_degree
        rs, _ = data(fam, r)
        adj = tuple(int(x) for x in rs.dynkin(rs.roots[rs.highest_root]))
        cases.append((fam, r, adj, d_adj))
        if r == 1:
            cases.append((fam, r, (4,), 4 if cfg.max_degree is None else cfg.max_degree))
    return cases


def suite_hc_equivariance(cfg: RunConfig) -> dict:
    from .envelop import Enveloping, classical_hc_check, hom_copies, hecke_equivariance_test, injectivity_check, intertwining_check
    from .repth import Irrep, is_small, zero_weight_decomposition

    checks = []
    if not cfg.lam:
        for fam, r in cfg.types([("A", 1), ("A", 2)]):
            rs, W = data(fam, r)
            U = Enveloping(chevalley(fam, r))
            d = cfg.max_degree if cfg.max_degree is not None else (6 if r == 1 else 4)
            rep = classical_hc_check(U, W, d)
            checks.append(_check(f"{rs.name} trivial d<={d} classical", rep["pass"], dims=rep["dims"], invariant=rep["invariant"], injective=rep["injective"]))
    for fam, r, labels, d in _hc_cases(cfg):
        rs, W = data(fam, r)
        cd = chevalley(fam, r)
        U = Enveloping(cd)
        V = Irrep(rs, cd, labels)
        Z = zero_weight_decomposition(V, W)
        small = is_small(rs, labels, labels=True)
        copies = hom_copies(U, V, d)
        inter = all(intertwining_check(U, c) for c in copies)
        results = [hecke_equivariance_test(c, W, Z) for c in copies]
        witness = next((x["witness"] for x in results if not x["pass"]), None)
        all_pass = bool(copies) and all(x["pass"] for x in results)
        checks.append(
            _check(
                f"{rs.name} labels={list(labels)} d<={d} equivariance",
                all_pass and inter,
                expect="pass" if small else "fail",
                small=small,
                copies=len(copies),
                degrees=[int(c.degree) for c in copies],
                intertwining=inter,
                injective=injectivity_check(copies),
                witness=witness,
            )
        )
        checks.append(_check(f"{rs.name} labels={list(labels)} copies intertwine and psi injective", inter and injectivity_check(copies)))
    return _report("hc-equivariance", cfg, checks)


def suite_broer_graded(cfg: RunConfig) -> dict:
    from .envelop import Enveloping, sym_hom_copies
    from .repth import Irrep, is_small, zero_weight_decomposition

    checks = []
    fam, r = cfg.types([("A", 1)])[0]
    rs, W = data(fam, r)
    cd = chevalley(fam, r)
    U = Enveloping(cd)
    if cfg.lam:
        cases = [(tuple(int(x) for x in cfg.lam.split(",")), cfg.max_degree or 5)]
    else:
        adj = tuple(int(x) for x in rs.dynkin(rs.roots[rs.highest_root]))
        cases = [((0,) * rs.rank, 5), (adj, 5)]
        if rs.rank == 1:
            cases.append(((4,), 4))
        if cfg.max_degree is not None:
            cases = [(l, cfg.max_degree) for l, _ in cases]
    for labels, d in cases:
        V = Irrep(rs, cd, labels)
        Z = zero_weight_decomposition(V, W)
        small = is_small(rs, labels, labels=True)
        rep = sym_hom_copies(U, V, W, Z, d)
        checks.append(_check(f"{rs.name} labels={list(labels)} d<={d} injective", rep["injective"] and all(x["equivariant"] for x in rep["rows"])))
        checks.append(
            _check(
                f"{rs.name} labels={list(labels)} d<={d} image = target",
                rep["surjective"],
                expect="pass" if small else "fail",
                rows=rep["rows"],
                first_gap=rep["first_gap"],
            )
        )
    return _report("broer-graded", cfg, checks)


def suite_column_det(cfg: RunConfig) -> dict:
    from .envelop import Enveloping, column_det_check, hom_copies
    from .repth import Irrep

    fam, r = cfg.types([("A", 2)])[0]
    rs, W = data(fam, r)
    cd = chevalley(fam, r)
    U = Enveloping(cd)
    adj = tuple(int(x) for x in rs.dynkin(rs.roots[rs.highest_root]))
    V = Irrep(rs, cd, adj)
    copies = hom_copies(U, V, 2)
    iota = next(c for c in copies if c.degree == 1)
    second = next(c for c in copies if c.degree == 2)
    k = min(2, rs.rank)
    rng = random.Random(cfg.seed)
    checks = []
    pairs = [[U.h(i) for i in range(k)]]
    while len(pairs) < 3:
        a = [rng.randint(-4, 4) for _ in range(k * k)]
        m = [[a[i * k + j] for j in range(k)] for i in range(k)]
        if k == 2 and m[0][0] * m[1][1] - m[0][1] * m[1][0] == 0:
            continue
        inputs = []
        for i in range(k):
            x = U.element()
            for j in range(k):
                x = x + U.h(j).scale(m[i][j])
            inputs.append(x)
        pairs.append(inputs)
    for n, inputs in enumerate(pairs):
        rep = column_det_check([iota, second][:k], inputs, iota)
        checks.append(
            _check(
                f"{rs.name} column determinant, input set {n}",
                rep["pass"],
                inputs=[x.to_json() for x in inputs],
                antisymmetric=rep["antisymmetric"],
                determinant=rep["determinant"],
                gamma=rep["gamma"],
            )
        )
    return _report("column-det", cfg, checks)


SUITES: dict[str, Callable[[RunConfig], dict]] = {
    "dunkl": suite_dunkl,
    "hecke-fixed": suite_hecke_fixed,
    "hecke-eigen": suite_hecke_eigen,
    "a-lambda": suite_a_lambda,
    "casimir": suite_casimir,
    "hc-equivariance": suite_hc_equivariance,
    "broer-graded": suite_broer_graded,
    "column-det": suite_column_det,
    "quasi-small": suite_quasi_small,
}


def run_suite(name: str, cfg: RunConfig) -> dict:
    if name not in SUITES:
        raise UnknownSuite(f"unknown suite {name!r}; choose from {', '.join(sorted(SUITES))}")
    return SUITES[name](cfg)


# ---------------------------------------------------------------------------
# tables and classification


def tables_report(cfg: RunConfig) -> dict:
    from .repth import casimir_scalar, dominant_sweep, in_root_lattice, Irrep, weight_from_dynkin, zero_weight_decomposition
    from .wchar import omega_w_scalar

    fam, r = cfg.types([("B", 2)])[0]
    rs, W = data(fam, r)
    cd = chevalley(fam, r) if rs.rank <= 3 else None
    T = character_table(fam, r)
    cap = cfg.dim_cap if cfg.dim_cap is not None else 40
    omega_w = [{"name": n, "degree": T.degree(n), "value": qstr(omega_w_scalar(rs, T, n))} for n in T.names]
    omega_g = []
    for lab in dominant_sweep(rs, cap):
        qs = False
        if cd is not None and in_root_lattice(rs, lab):
            qs = bool(zero_weight_decomposition(Irrep(rs, cd, lab, cap), W).single)
        omega_g.append(
            {
                "lambda": [qstr(x) for x in weight_from_dynkin(rs, lab)],
                "labels": list(lab),
                "value": qstr(casimir_scalar(rs, lab, labels=True)),
                "quasi_small": qs,
            }
        )
    return {"type": rs.name, "config": cfg.describe(), "omega_W": omega_w, "omega_g": omega_g}


def classify_report(cfg: RunConfig) -> dict:
    from .repth import classify_row, dominant_sweep

    fam, r = cfg.types([("B", 2)])[0]
    rs, W = data(fam, r)
    cd = chevalley(fam, r)
    T = character_table(fam, r)
    cap = cfg.dim_cap if cfg.dim_cap is not None else 40
    rows = [classify_row(rs, cd, W, T, lab, cap) for lab in dominant_sweep(rs, cap)]
    return {"type": rs.name, "config": cfg.describe(), "rows": rows}
