import pytest

import oracles
from hcalg.errors import DimensionCapExceeded, NotDominantIntegral
from hcalg.repth import (
    Irrep,
    casimir_scalar,
    construct_irrep,
    dominant_sweep,
    end_rho_multiplicity,
    freudenthal_dominant,
    freudenthal_weights,
    in_root_lattice,
    is_small,
    verify_casimir_identity,
    weyl_dimension,
    zero_weight_decomposition,
)
from hcalg.rootsys import build_root_system, chevalley_constants, weyl_group

KEYS = [("A", 2), ("B", 2), ("G", 2)]
DATA = {}
for key in KEYS:
    rs = build_root_system(*key)
    DATA[key] = (rs, chevalley_constants(rs), weyl_group(rs))


@pytest.mark.parametrize("key", KEYS)
@pytest.mark.parametrize("lab", [(0, 1), (1, 0), (1, 1), (2, 1), (0, 3)])
def test_freudenthal_against_kostant(key, lab):
    rs = DATA[key][0]
    assert freudenthal_weights(rs, lab, labels=True) == oracles.kostant_weights(key, lab)
    assert weyl_dimension(rs, lab) == oracles.lattice(key).weyl_dimension(lab)


@pytest.mark.parametrize("case,want", oracles.FROZEN_DOMINANT.items())
def test_frozen_dominant_multiplicities(case, want):
    rs = build_root_system(case[0], case[1])
    assert freudenthal_dominant(rs, case[2]) == want


@pytest.mark.parametrize("key,lab", [(("A", 2), (1, 1)), (("B", 2), (1, 2)), (("B", 2), (2, 1)), (("G", 2), (1, 0)), (("G", 2), (0, 1))])
def test_explicit_irrep(key, lab):
    rs, cd, W = DATA[key]
    V = Irrep(rs, cd, lab)
    assert V.dim == weyl_dimension(rs, lab)
    assert {mu: V.mult(mu) for mu in V.weights} == oracles.kostant_weights(key, lab)
    assert V.bracket_check()["pass"]


def test_b2_zero_weights_and_casimir():
    rs, cd, W = DATA[("B", 2)]
    for lab, z in oracles.FROZEN_B2_ZERO.items():
        V = Irrep(rs, cd, lab)
        assert V.dim_zero == z
        Z = zero_weight_decomposition(V, W)
        assert Z.relations_ok and Z.direct_sum_ok()
        assert len(Z.simple_kernel) == end_rho_multiplicity(rs, lab)
        assert verify_casimir_identity(V, Z)["omega_g"]


def test_tits_representatives_square_to_the_torus_action():
    rs, cd, W = DATA[("B", 2)]
    V = Irrep(rs, cd, (0, 2))
    for i in rs.simple:
        t = V.tits_on_zero(i)
        sq = [[sum(t[r][s] * t[s][c] for s in range(len(t))) for c in range(len(t))] for r in range(len(t))]
        # on the zero weight space the square of the Tits lift is the identity
        assert sq == [[1 if r == c else 0 for c in range(len(t))] for r in range(len(t))]


def test_sweep_dimensions_sorted_and_capped():
    rs = DATA[("B", 2)][0]
    sweep = dominant_sweep(rs, 40)
    dims = [weyl_dimension(rs, lab) for lab in sweep]
    assert dims == sorted(dims) and max(dims) <= 40 and len(sweep) == 11


def test_small_and_casimir_values():
    rs = DATA[("B", 2)][0]
    assert is_small(rs, (0, 2), labels=True) and not is_small(rs, (1, 2), labels=True)
    assert in_root_lattice(rs, (1, 2)) and not in_root_lattice(rs, (0, 1))
    assert casimir_scalar(rs, (1, 2), labels=True) == 2
    assert casimir_scalar(rs, rs.roots[rs.highest_root]) == 1


def test_errors():
    rs, cd, W = DATA[("A", 2)]
    with pytest.raises(NotDominantIntegral):
        Irrep(rs, cd, (-1, 0))
    with pytest.raises(DimensionCapExceeded):
        Irrep(rs, cd, (4, 4), dim_cap=20)
    V = construct_irrep(rs, cd, rs.roots[rs.highest_root])
    assert V.dim == 8
