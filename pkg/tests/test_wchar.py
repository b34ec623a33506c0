import pytest

import oracles
from hcalg.errors import NonIntegralMultiplicity
from hcalg.rootsys import build_root_system, weyl_group
from hcalg.wchar import CharacterTable, omega_w_scalar, w_character_of


@pytest.mark.parametrize("key", [("A", 1), ("A", 2), ("A", 3), ("B", 2), ("G", 2), ("B", 3), ("C", 3)])
def test_catalog_complete(key):
    T = CharacterTable(weyl_group(build_root_system(*key)))
    assert sum(T.degree(n) ** 2 for n in T.names) == oracles.WEYL_ORDER[key]
    assert len(T.names) == len(T.classes)


def test_b2_omega_w_matches_explicit_matrices():
    rs = build_root_system("B", 2)
    T = CharacterTable(weyl_group(rs))
    want = oracles.omega_w_b2_explicit()
    names = {"triv": "triv", "sgn": "sgn", "tau": "τ", "tau_sgn": "τ⊗sgn", "refl": "refl"}
    for o, n in names.items():
        assert omega_w_scalar(rs, T, n) == want[o]


def test_a1_omega_w():
    rs = build_root_system("A", 1)
    T = CharacterTable(weyl_group(rs))
    assert omega_w_scalar(rs, T, "triv") == 0
    assert omega_w_scalar(rs, T, "sgn") == 1


def test_tau_is_minus_one_on_short_reflections():
    rs = build_root_system("B", 2)
    W = weyl_group(rs)
    T = CharacterTable(W)
    for a in rs.positive:
        v = T.value("τ", W.reflection(a))
        assert v == (1 if rs.is_long(a) else -1)


def test_decompose_reflection_representation():
    rs = build_root_system("G", 2)
    W = weyl_group(rs)
    T = CharacterTable(W)
    assert w_character_of(W.matrices, T) == {"refl": 1}
    with pytest.raises(NonIntegralMultiplicity):
        T.decompose([2] + [0] * (len(W) - 1))
