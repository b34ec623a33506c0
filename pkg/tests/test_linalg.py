from fractions import Fraction

from hypothesis import given, settings, strategies as st

from hcalg import linalg
from hcalg.rational import KPoly, Q, qstr

small = st.fractions(min_value=-5, max_value=5, max_denominator=4)


def matrices(r, c):
    return st.lists(st.lists(small, min_size=c, max_size=c), min_size=r, max_size=r)


@settings(max_examples=60, deadline=None)
@given(matrices(3, 4))
def test_rank_nullity(m):
    ker = linalg.nullspace(m, 4)
    assert linalg.rank(m, 4) + len(ker) == 4
    for v in ker:
        assert linalg.matvec(m, v) == [0, 0, 0]


@settings(max_examples=60, deadline=None)
@given(matrices(3, 3), matrices(3, 3))
def test_det_multiplicative(a, b):
    assert linalg.det(linalg.matmul(a, b)) == linalg.det(a) * linalg.det(b)


@settings(max_examples=60, deadline=None)
@given(matrices(3, 3))
def test_inverse_and_charpoly(a):
    cp = linalg.charpoly(a)
    # Cayley-Hamilton, coefficients listed from the constant term up
    acc = linalg.zeros(3, 3)
    power = linalg.identity(3)
    for c in cp:
        acc = [[x + c * y for x, y in zip(r1, r2)] for r1, r2 in zip(acc, power)]
        power = linalg.matmul(power, a)
    assert acc == linalg.zeros(3, 3)
    if linalg.det(a):
        assert linalg.matmul(a, linalg.inverse(a)) == linalg.identity(3)


@settings(max_examples=40, deadline=None)
@given(matrices(2, 4), matrices(2, 4))
def test_sum_and_intersection_dimensions(a, b):
    s = linalg.subspace_sum(a, b, 4)
    i = linalg.intersect(a, b, 4)
    assert len(s) + len(i) == linalg.rank(a, 4) + linalg.rank(b, 4)
    for v in i:
        assert linalg.in_span(a, v, 4) and linalg.in_span(b, v, 4)


def test_fraction_free_rank_over_k():
    k = KPoly.gen()
    m = [[k, KPoly.lift(1)], [KPoly.lift(1), k]]
    # determinant k^2 - 1 is a nonzero polynomial, so rank 2 for generic k
    assert linalg.fraction_free_rank(m, 2) == 2
    m2 = [[k, k * k], [KPoly.lift(1), k]]
    assert linalg.fraction_free_rank(m2, 2) == 1


def test_rational_strings():
    assert qstr(Fraction(-3, 6)) == "-1/2"
    assert qstr(Fraction(4, 2)) == "2"
    assert Q("3/9") == Fraction(1, 3)
