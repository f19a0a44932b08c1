import random
from fractions import Fraction

import pytest
import sympy

from cyclotomic.field import CycNum, as_cyc, cyclotomic_polynomial, field_degree, lift_to_common_conductor, root_of_unity
from cyclotomic.linalg import CycMatrix, inverse, kernel_basis, rank, row_space_intersection, solve
from cyclotomic.sparse import SparseEchelon, sparse_kernel
from utils.errors import ParameterOutOfRange


@pytest.mark.parametrize("L", range(1, 61))
def test_cyclotomic_polynomial_matches_sympy(L):
    x = sympy.Symbol("x")
    expected = [int(c) for c in sympy.Poly(sympy.cyclotomic_poly(L, x), x).all_coeffs()[::-1]]
    assert list(cyclotomic_polynomial(L)) == expected
    assert field_degree(L) == sympy.totient(L)


def test_bad_conductor():
    with pytest.raises(ParameterOutOfRange):
        cyclotomic_polynomial(0)
    with pytest.raises(ParameterOutOfRange):
        root_of_unity(-3, 1)


@pytest.mark.parametrize("L", [3, 4, 8, 12])
def test_root_of_unity_order(L):
    zeta = root_of_unity(L, 1)
    assert zeta ** L == 1
    assert all(zeta ** k != 1 for k in range(1, L))


def test_square_roots_of_minus_one():
    i = root_of_unity(8, 2)
    assert i * i == -1
    assert root_of_unity(4, 1) == i


def test_field_arithmetic():
    L = 12
    a = root_of_unity(L, 1) + CycNum.from_rational(L, Fraction(2, 3))
    b = root_of_unity(L, 5) - 1
    assert a * a.inverse() == 1
    assert (a * b) / b == a
    assert a ** -2 * a ** 2 == 1
    assert (a + b) - b == a
    assert CycNum.zero(L).is_zero()
    assert not CycNum.zero(L)


def test_inverse_of_zero():
    with pytest.raises(ZeroDivisionError):
        CycNum.zero(6).inverse()


def test_lift_and_mixed_conductors():
    z3 = root_of_unity(3, 1)
    z4 = root_of_unity(4, 1)
    product = z3 * z4
    assert product.conductor == 12
    assert product == root_of_unity(12, 7)
    assert as_cyc(2, 5) == 2
    assert as_cyc(z3, 6).conductor == 6


def test_to_json_shape():
    doc = root_of_unity(8, 3).to_json()
    assert doc["conductor"] == 8
    assert len(doc["coefficients"]) == 4
    assert all(isinstance(c, str) for c in doc["coefficients"])


def test_matrix_inverse_and_rank():
    L = 8
    zeta = root_of_unity(L, 1)
    M = CycMatrix([[1, zeta], [zeta, 2]], L)
    assert (inverse(M) @ M).is_identity()
    assert rank(CycMatrix([[1, 2], [2, 4]], L)) == 1
    assert rank(CycMatrix.identity(3, L)) == 3


def test_kernel_and_solve():
    L = 4
    M = CycMatrix([[1, 1, 0], [0, 1, 1]], L)
    kernel = kernel_basis(M)
    assert len(kernel) == 1
    v = kernel[0]
    assert all(sum((M.row(r)[c] * v[c] for c in range(3)), CycNum.zero(L)) == 0 for r in range(2))
    x = solve(CycMatrix([[2, 0], [0, 4]], L), [2, 8])
    assert x[0] == 1 and x[1] == 2


def test_sparse_echelon():
    L = 6
    one = CycNum.one(L)
    echelon = SparseEchelon(2)
    assert echelon.add({0: one, 1: one})
    assert echelon.add({1: one})
    assert not echelon.add({0: one * 3})
    assert echelon.rank == 2
    kernel = sparse_kernel([{0: one, 1: -one}], 2, L)
    assert len(kernel) == 1


def test_lift_to_common_conductor():
    a, b = lift_to_common_conductor(root_of_unity(3, 1), root_of_unity(4, 1))
    assert a.conductor == b.conductor == 12
    assert a == root_of_unity(12, 4)
    assert b == root_of_unity(12, 3)


@pytest.mark.parametrize("L", range(1, 61))
def test_cyclotomic_factors_multiply_to_x_power_minus_one(L):
    x = sympy.Symbol("x")
    product = sympy.Poly(1, x)
    for d in range(1, L + 1):
        if L % d == 0:
            product *= sympy.Poly(list(reversed(cyclotomic_polynomial(d))), x)
    assert product == sympy.Poly(x ** L - 1, x)


def _random_element(rng, L):
    return CycNum(L, [Fraction(rng.randint(-5, 5), rng.randint(1, 4)) for _ in range(field_degree(L))])


@pytest.mark.parametrize("L", [5, 7, 8, 9, 12, 15])
def test_random_field_axioms(L):
    rng = random.Random(L)
    for _ in range(20):
        a, b, c = (_random_element(rng, L) for _ in range(3))
        assert a + b == b + a
        assert a * b == b * a
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert a - a == 0
        if a:
            assert a * a.inverse() == 1
            assert (b / a) * a == b


@pytest.mark.parametrize("L, M", [(3, 6), (4, 12), (5, 10), (6, 24), (1, 7)])
def test_lift_preserves_arithmetic(L, M):
    rng = random.Random(M)
    for _ in range(10):
        a, b = _random_element(rng, L), _random_element(rng, L)
        assert a.lift(M) == a
        assert (a * b).lift(M) == a.lift(M) * b.lift(M)
        assert (a + b).lift(M) == a.lift(M) + b.lift(M)
        assert a.lift(M).conductor == M


def test_row_space_intersection_with_itself():
    A = CycMatrix([[1, 0, 2], [0, 1, root_of_unity(3, 1)]], 3)
    meet = row_space_intersection(A, A)
    assert meet.rows == 2
    assert rank(meet) == rank(A)


def test_row_space_intersection_of_disjoint_spaces():
    A = CycMatrix([[1, 0, 0], [0, 1, 0]], 1)
    B = CycMatrix([[0, 0, 1]], 1)
    assert row_space_intersection(A, B).rows == 0


def test_row_space_intersection_along_one_line():
    A = CycMatrix([[1, 0, 0], [0, 1, 0]], 1)
    B = CycMatrix([[1, 1, 0], [0, 0, 1]], 1)
    meet = row_space_intersection(A, B)
    assert meet == CycMatrix([[1, 1, 0]], 1)


def test_row_space_intersection_across_conductors():
    i, w = root_of_unity(4, 1), root_of_unity(3, 1)
    A = CycMatrix([[1, 0, 0], [0, i, 0]], 4)
    B = CycMatrix([[1, w, 0], [0, 0, 1]], 3)
    meet = row_space_intersection(A, B)
    assert meet.conductor == 12
    assert meet == CycMatrix([[1, w, 0]], 3)


def test_row_space_intersection_needs_matching_widths():
    with pytest.raises(ParameterOutOfRange):
        row_space_intersection(CycMatrix([[1, 0]], 1), CycMatrix([[1, 0, 0]], 1))
