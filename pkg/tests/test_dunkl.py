from fractions import Fraction

from hypothesis import given, settings, strategies as st

from hcalg.dunkl import DunklOperator, dunkl_commutator_check, equivariance_check
from hcalg.polyalg import Polynomial
from hcalg.rational import KPoly
from hcalg.rootsys import build_root_system, weyl_group


def test_rank_one_closed_form():
    rs = build_root_system("A", 1)
    k = Fraction(2, 5)
    T = DunklOperator(rs, (1,), k)
    t = Polynomial.variable(1, 0)
    for n in range(6):
        # odd powers pick up the reflection term 2k
        want = t ** (n - 1) * (n + (2 * k if n % 2 else 0)) if n else Polynomial.zero(1)
        assert T(t ** n) == want


def test_zero_parameter_is_the_derivative():
    rs = build_root_system("G", 2)
    T = DunklOperator(rs, (1, 2), 0)
    x, y = Polynomial.variable(2, 0), Polynomial.variable(2, 1)
    f = x ** 3 * y + y ** 2
    assert T(f) == f.directional((1, 2))


@settings(max_examples=25, deadline=None)
@given(
    st.sampled_from([("A", 2), ("B", 2), ("G", 2)]),
    st.fractions(min_value=-3, max_value=3, max_denominator=5),
    st.fractions(min_value=-3, max_value=3, max_denominator=5),
)
def test_commutativity_random_parameters(key, k1, k2):
    rs = build_root_system(*key)
    k = (k1, k2) if len(rs.orbits) == 2 else (k1,)
    rep = dunkl_commutator_check(rs, k, (1, 0), (Fraction(1, 3), 1), 3)
    assert rep["pass"], rep["counterexample"]


def test_commutativity_symbolic_parameter():
    rs = build_root_system("B", 2)
    k = (KPoly.gen(), KPoly.gen() * 2 + 1)
    assert dunkl_commutator_check(rs, k, (1, 0), (0, 1), 3)["pass"]


def test_bc_doubled_root_parameter():
    rs = build_root_system("B", 2)
    assert dunkl_commutator_check(rs, (1, 2), (1, 0), (0, 1), 4, k2=(0, 3))["pass"]


def test_equivariance():
    rs = build_root_system("B", 2)
    assert equivariance_check(rs, weyl_group(rs), (Fraction(1, 2), 3), (1, 2), 3)["pass"]

