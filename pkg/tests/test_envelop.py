import random

import pytest
from hypothesis import given, settings, strategies as st

import oracles
from hcalg.envelop import (
    Enveloping,
    classical_hc_check,
    gamma_commute_check,
    gamma_tilde,
    hecke_equivariance_test,
    hom_copies,
    injectivity_check,
    intertwining_check,
    sym_hom_copies,
)
from hcalg.errors import DegreeCapExceeded, WeightNotZero
from hcalg.polyalg import weyl_act
from hcalg.repth import Irrep, casimir_scalar, zero_weight_decomposition
from hcalg.rootsys import build_root_system, chevalley_constants, weyl_group

ALG = {}
for key in [("A", 1), ("A", 2), ("B", 2)]:
    rs = build_root_system(*key)
    ALG[key] = (rs, weyl_group(rs), Enveloping(chevalley_constants(rs)))

LETTER = {"f": 0, "h": 1, "e": 2}


@settings(max_examples=100, deadline=None)
@given(st.text(alphabet="efh", max_size=7))
def test_sl2_normal_form_against_string_rewriter(word):
    U = ALG[("A", 1)][2]
    got = U.normalize_word([LETTER[c] for c in word])
    assert {m: int(c) for m, c in got.terms.items()} == oracles.sl2_normal_form(word)


def test_small_sl2_examples():
    U = ALG[("A", 1)][2]
    e, f, h = U.e(0), U.f(0), U.h(0)
    assert e * f == f * e + h
    assert e * f * e == h * e + f * e * e


@settings(max_examples=60, deadline=None)
@given(st.sampled_from([("A", 2), ("B", 2)]), st.integers(0, 10 ** 6), st.integers(1, 6))
def test_confluence(key, seed, length):
    U = ALG[key][2]
    w = U.random_word(random.Random(seed), length)
    assert U.normalize_word(w) == U.normalize_word_naive(w)


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10 ** 6))
def test_associativity_sl3(seed):
    U = ALG[("A", 2)][2]
    rng = random.Random(seed)
    a, b, c = (U.normalize_word(U.random_word(rng, rng.randint(0, 3))) for _ in range(3))
    assert (a * b) * c == a * (b * c)


@pytest.mark.parametrize("key", [("A", 1), ("A", 2), ("B", 2)])
def test_casimir_is_central_and_projects_correctly(key):
    rs, W, U = ALG[key]
    om = U.casimir()
    for t in range(U.dim):
        assert not U.ad(t, om)
    g = gamma_tilde(om)
    for w in range(len(W)):
        assert weyl_act(W, w, g) == g
    for lab in [(1,) * rs.rank, (2,) + (0,) * (rs.rank - 1)]:
        lam = rs.from_dynkin(lab)
        assert g([a + b for a, b in zip(lam, rs.rho)]) == casimir_scalar(rs, lab, labels=True)


def test_gamma_multiplicative_on_weight_zero():
    U = ALG[("A", 2)][2]
    D1 = U.e(0) * U.f(0) + U.h(1)
    D2 = U.f(1) * U.e(1)
    assert gamma_commute_check(D1, D2)["pass"]
    with pytest.raises(WeightNotZero):
        gamma_commute_check(D1, U.e(0))


def test_degree_cap():
    rs = build_root_system("A", 1)
    U = Enveloping(chevalley_constants(rs), degree_cap=3)
    with pytest.raises(DegreeCapExceeded):
        U.normalize_word([2, 2, 2, 2])


def test_classical_hc_sl2():
    rs, W, U = ALG[("A", 1)]
    rep = classical_hc_check(U, W, 6)
    assert rep["pass"] and rep["injective"]


@pytest.mark.parametrize("lab,d,count,equivariant", [((2,), 5, 3, True), ((4,), 4, 2, False)])
def test_sl2_copies(lab, d, count, equivariant):
    rs, W, U = ALG[("A", 1)]
    V = Irrep(rs, U.cd, lab)
    Z = zero_weight_decomposition(V, W)
    copies = hom_copies(U, V, d)
    assert len(copies) == count
    assert all(intertwining_check(U, c) for c in copies)
    assert injectivity_check(copies)
    results = [hecke_equivariance_test(c, W, Z) for c in copies]
    assert all(r["pass"] for r in results) == equivariant
    if not equivariant:
        assert any(r["witness"] for r in results if not r["pass"])


def test_graded_shadow_sl2():
    rs, W, U = ALG[("A", 1)]
    for lab, surj in [((0,), True), ((2,), True), ((4,), False)]:
        V = Irrep(rs, U.cd, lab)
        rep = sym_hom_copies(U, V, W, zero_weight_decomposition(V, W), 4)
        assert rep["injective"] and rep["surjective"] == surj
