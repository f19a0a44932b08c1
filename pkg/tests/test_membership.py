import pytest

from invariants.membership import (
    SubalgebraFiltration,
    commutative_plane,
    evaluate_witness,
    f_tls,
    g_tl,
    lemma_ring,
    ring_spec,
    skew_plane,
    subalgebra_membership,
)
from hopf.rewriting import lc_equal
from utils.errors import ParameterOutOfRange, UnsupportedRing

FULL_SET = ([(1, "zz")], [(1, "x"), (-1, "y")], [(1, "xw"), (1, "yw")], [(1, "ww")], [(1, "zx"), (1, "zy")], [(1, "zw")])


@pytest.fixture(scope="module")
def four_variable():
    R = lemma_ring(alpha=3, k=1)
    return R, SubalgebraFiltration(R, [R.element(terms) for terms in FULL_SET])


@pytest.mark.parametrize("l", range(1, 7))
def test_power_sums_from_elementary_symmetric(l):
    R = commutative_plane()
    generators = [R.element([(1, "x"), (1, "y")]), R.element([(1, "xy")])]
    result = subalgebra_membership(R, R.element([(1, "x" * l), (1, "y" * l)]), generators)
    assert result
    assert result.degree == l
    assert lc_equal(evaluate_witness(R, generators, result.witness), R.element([(1, "x" * l), (1, "y" * l)]))


@pytest.mark.parametrize("l", range(1, 7))
def test_alternating_power_sums(l):
    R = commutative_plane()
    generators = [R.element([(1, "x"), (-1, "y")]), R.element([(1, "xy")])]
    assert subalgebra_membership(R, R.element([(1, "x" * l), ((-1) ** l, "y" * l)]), generators)


def test_non_member_in_commutative_plane():
    R = commutative_plane()
    generators = [R.element([(1, "x"), (1, "y")]), R.element([(1, "xy")])]
    assert not subalgebra_membership(R, R.element([(1, "x")]), generators)
    assert not subalgebra_membership(R, R.element([(1, "xx")]), generators)


def test_constants_and_zero_are_members():
    R = commutative_plane()
    generators = [R.element([(1, "xy")])]
    assert subalgebra_membership(R, {}, generators)
    assert subalgebra_membership(R, R.element([(5, "")]), generators)


def test_skew_plane_relation():
    R = skew_plane()
    assert lc_equal(R.element([(1, "yx")]), R.element([(-1, "xy")]))


@pytest.mark.parametrize("t", range(0, 4))
def test_skew_lemma(t):
    R = skew_plane()
    filtration = SubalgebraFiltration(R, [R.element([(1, "x"), (1, "y")]), R.element([(1, "xyx"), (-1, "xyy")])])
    for l in range(0, 4):
        if t or l:
            assert filtration.test(g_tl(R, t, l)), (t, l)


def test_skew_lemma_square_of_xy():
    R = skew_plane()
    filtration = SubalgebraFiltration(R, [R.element([(1, "x"), (1, "y")]), R.element([(1, "xyx"), (-1, "xyy")])])
    assert filtration.test(R.element([(1, "xxyy")]))
    assert not filtration.test(R.element([(1, "xy")]))


@pytest.mark.parametrize("t", [0, 1, 2])
def test_four_variable_lemma_small(four_variable, t):
    R, filtration = four_variable
    for l in range(3):
        for s in range(3):
            if t or l or s:
                assert filtration.test(f_tls(R, t, l, s)), (t, l, s)


@pytest.mark.slow
@pytest.mark.parametrize("t", [3, 4])
def test_four_variable_lemma_large(four_variable, t):
    R, filtration = four_variable
    for l in range(5):
        for s in range(5):
            assert filtration.test(f_tls(R, t, l, s)), (t, l, s)


def test_four_variable_without_w():
    R = lemma_ring(alpha=3, k=1)
    generators = [R.element(terms) for terms in ([(1, "zz")], [(1, "x"), (-1, "y")], [(1, "zx"), (1, "zy")])]
    filtration = SubalgebraFiltration(R, generators)
    for t in range(3):
        for l in range(3):
            if t or l:
                assert filtration.test(f_tls(R, t, l, 0)), (t, l)


def test_four_variable_non_member(four_variable):
    R, filtration = four_variable
    assert not filtration.test(R.element([(1, "z")]))
    assert not filtration.test(R.element([(1, "w")]))


def test_ring_errors():
    with pytest.raises(UnsupportedRing):
        ring_spec("exterior")
    with pytest.raises(ParameterOutOfRange):
        lemma_ring(alpha=0)
    R = commutative_plane()
    with pytest.raises(ParameterOutOfRange):
        R.element([(1, "xz")])
    with pytest.raises(ParameterOutOfRange):
        R.degree(R.element([(1, "x"), (1, "xy")]))
    with pytest.raises(ParameterOutOfRange):
        SubalgebraFiltration(R, [R.element([(1, "")])])
