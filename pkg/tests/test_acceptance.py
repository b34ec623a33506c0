"""Acceptance gate: one test per criterion, each printing a PASS/FAIL line.

Run ``pytest tests/test_acceptance.py -v``; the summary section at the
end lists every criterion.  The module also runs as a script.
"""

import json
import time
from fractions import Fraction

import pytest

import acceptance_log
from hcalg.polyalg import GradedBasis, monomials
from hcalg.repth import freudenthal_weights
from hcalg.rootsys import build_root_system, weyl_group
from hcalg.suites import RunConfig, classify_report, run_suite, tables_report
from hcalg.wchar import CharacterTable, omega_w_scalar

# reference values for B2 (Killing normalisation)
OMEGA_W_B2 = {"triv": "0", "refl": "1", "sgn": "2", "τ": "2/3", "τ⊗sgn": "4/3"}
# ambient highest weights and their Casimir values
OMEGA_G_B2 = {(0, 0): "0", (1, 0): "2/3", (1, 1): "1", (2, 1): "2"}

REPORTS: dict[str, str] = {}


def _suite(name, **kw):
    rep = run_suite(name, RunConfig(**kw))
    REPORTS[json.dumps([name, kw], sort_keys=True)] = json.dumps(rep, sort_keys=True)
    return rep


def _failed(rep):
    return [c["name"] for c in rep["checks"] if not c["ok"]]


def _gate(n, title, body, limit=None):
    t = time.perf_counter()
    ok, detail = False, ""
    try:
        ok, detail = body()
    finally:
        dt = time.perf_counter() - t
        within = limit is None or dt < limit
        acceptance_log.record(n, ok and within, title, dt)
    assert ok, detail
    assert within, f"runtime {dt:.1f} s exceeds {limit} s"


def test_c01_omega_w_table():
    def body():
        rs = build_root_system("B", 2)
        T = CharacterTable(weyl_group(rs))
        got = {n: str(omega_w_scalar(rs, T, n)) for n in T.names}
        return got == OMEGA_W_B2, got

    _gate(1, "Omega_W scalars on W(B2) irreducibles", body, limit=1)


def test_c02_omega_g_table():
    def body():
        rep = tables_report(RunConfig(family="B", rank=2, dim_cap=40))
        got = {tuple(Fraction(x) for x in r["lambda"]): r["value"] for r in rep["omega_g"]}
        want = {tuple(Fraction(x) for x in k): v for k, v in OMEGA_G_B2.items()}
        return all(got.get(k) == v for k, v in want.items()), got

    _gate(2, "Casimir values on the four B2 irreps", body, limit=1)


def test_c03_b2_classification():
    def body():
        rep = classify_report(RunConfig(family="B", rank=2, dim_cap=40))
        rows = {tuple(Fraction(x) for x in r["lambda"]): r for r in rep["rows"]}
        qs = {k for k, r in rows.items() if r["quasi_small"]}
        want = {tuple(Fraction(x) for x in k) for k in OMEGA_G_B2}
        small_ok = all(rows[tuple(Fraction(x) for x in k)]["small"] for k in [(0, 0), (1, 0), (1, 1)])
        top = rows[(Fraction(2), Fraction(1))]
        rs = build_root_system("B", 2)
        wts = freudenthal_weights(rs, (2, 1))
        two_e1 = tuple(int(x) for x in rs.dynkin((2, 0)))
        ok = (
            qs == want
            and small_ok
            and not top["small"]
            and two_e1 in wts
            and top["W_constituents"].get("sgn", 0) >= 1
            and all("τ⊗sgn" not in rows[k]["W_constituents"] for k in want)
        )
        return ok, {str(k): (r["small"], r["quasi_small"], r["W_constituents"]) for k, r in rows.items()}

    _gate(3, "B2 quasi-small classification up to dim 40", body, limit=120)


def test_c04_hecke_fixed_suite():
    def body():
        rep = _suite("hecke-fixed", max_degree=6)
        names = {c["name"].split(" ")[0] for c in rep["checks"]}
        return rep["pass"] and names == {"A1", "A2", "B2", "G2"} and len(rep["checks"]) == 20, _failed(rep)

    _gate(4, "Hecke-fixed polynomials are the invariants (d <= 6, 4 types x 5 parameters)", body, limit=120)


def test_c05_hecke_eigen_suite():
    def body():
        rep = _suite("hecke-eigen", max_degree=6)
        return rep["pass"] and len(rep["checks"]) == 5 * (1 + 2 + 2 + 2), _failed(rep)

    _gate(5, "simple reflection eigenspaces span S^{<=6}", body, limit=120)


def test_c06_dunkl_suite():
    def body():
        rep = _suite("dunkl", max_degree=5, seed=2024)
        return rep["pass"] and len(rep["checks"]) == 9, _failed(rep)

    _gate(6, "Dunkl operators commute up to degree 5 (3 seeded k per type)", body, limit=60)


def test_c07_harmonics():
    def body():
        bad = []
        for fam, r, order in [("A", 1, 2), ("A", 2, 6), ("B", 2, 8), ("G", 2, 12)]:
            rs = build_root_system(fam, r)
            gb = GradedBasis(rs, weyl_group(rs), max(6, rs.n_pos))
            if gb.total_harmonic_dim() != order or gb.top_harmonic_degree() != rs.n_pos:
                bad.append((rs.name, "harmonics"))
            for d in range(7):
                if not gb.multiplication_rank(d) == len(monomials(rs.rank, d)):
                    bad.append((rs.name, d))
        return not bad, bad

    _gate(7, "harmonics have dimension |W|, top degree #positive roots, products span", body)


def test_c08_a_lambda_suite():
    def body():
        rep = _suite("a-lambda")
        grid = [c for c in rep["checks"] if "labels" in c["name"]]
        dims_ok = all(c["dim"] == {"A1": 2, "A2": 6, "B2": 8, "G2": 12}[c["name"][:2]] for c in grid)
        irreducible = all(c["lattice"]["dims"] == [0, c["dim"]] for c in grid)
        special = [c for c in rep["checks"] if "reducible" in c["name"]]
        sizes = {c["name"][:2]: sum(1 for g in grid if g["name"][:2] == c["name"][:2]) for c in grid}
        ok = rep["pass"] and dims_ok and irreducible and special and special[0]["ok"] and sizes == {"A1": 5, "A2": 25, "B2": 25, "G2": 25}
        return ok, _failed(rep)

    _gate(8, "A(lambda) has dimension |W|, irreducible on the grid, reducible at the A1 point", body)


def test_c09_casimir_suite():
    def body():
        rep = _suite("casimir", dim_cap=400)
        return rep["pass"], _failed(rep)

    _gate(9, "Casimir identity on quasi-small B2 irreps up to dim 400", body)


def test_c10_hc_equivariance_suite():
    def body():
        rep = _suite("hc-equivariance")
        by = {c["name"]: c for c in rep["checks"]}
        classical = by["A1 trivial d<=6 classical"]
        pos = [by["A1 labels=[2] d<=5 equivariance"], by["A2 labels=[1, 1] d<=4 equivariance"]]
        neg = by["A1 labels=[4] d<=4 equivariance"]
        ok = (
            rep["pass"]
            and classical["observed"] == "pass"
            and all(c["observed"] == "pass" and c["copies"] > 0 for c in pos)
            and neg["expect"] == "fail"
            and neg["observed"] == "fail"
            and neg["witness"] is not None
        )
        return ok, _failed(rep)

    _gate(10, "Harish-Chandra desk checks (classical, equivariant copies, 5-dim witness)", body, limit=300)


def test_c11_graded_shadow_suite():
    def body():
        rep = _suite("broer-graded")
        gap = [c for c in rep["checks"] if c["expect"] == "fail"]
        ok = rep["pass"] and gap and gap[0]["first_gap"] is not None and gap[0]["first_gap"] <= 4
        return ok, _failed(rep)

    _gate(11, "graded image equals target for small V, gap for the sl2 5-dim irrep", body)


def test_c12_column_determinant_suite():
    def body():
        rep = _suite("column-det", seed=5)
        return rep["pass"] and len(rep["checks"]) == 3 and all(c["antisymmetric"] for c in rep["checks"]), _failed(rep)

    _gate(12, "column determinant at sl3, k = 2, three input pairs", body, limit=300)


def test_c13_quasi_small_consistency():
    def body():
        rep = _suite("quasi-small", dim_cap=40)
        return rep["pass"] and len(rep["checks"]) == 11, _failed(rep)

    _gate(13, "kernel count equals End V_rho multiplicity for B2 up to dim 40", body)


def test_c14_determinism():
    def body():
        if not REPORTS:
            _suite("dunkl", seed=2024)
        mismatched = []
        for key, text in REPORTS.items():
            name, kw = json.loads(key)
            again = json.dumps(run_suite(name, RunConfig(**kw)), sort_keys=True)
            if again != text:
                mismatched.append(name)
        return not mismatched, mismatched

    _gate(14, "re-running every suite with the same seed gives identical JSON", body)


if __name__ == "__main__":
    raise SystemExit(pytest.main([__file__, "-q"]))
