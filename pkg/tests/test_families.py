from fractions import Fraction

import pytest

from cyclotomic.field import CycNum

from hopf.families import build_A4m, build_B4m, build_H2n2, build_family, build_group_algebra
from hopf.rewriting import lc_equal
from utils.errors import ParameterOutOfRange


@pytest.mark.parametrize("n", [2, 3, 4, 5, 6])
def test_h2n2_dimension_and_axioms(n):
    H = build_H2n2(n)
    assert H.dimension == 2 * n * n
    assert len(H.basis()) == H.dimension
    assert H.check_hopf_axioms() == []


@pytest.mark.parametrize("m", [2, 3, 4, 5, 6])
def test_dihedral_type_dimension_and_axioms(m):
    for H in (build_A4m(m), build_B4m(m)):
        assert H.dimension == 4 * m
        assert len(H.basis()) == 4 * m
        assert H.check_hopf_axioms() == []


@pytest.mark.parametrize(
    "spec, kwargs, dim",
    [("ZnWrS2", {"n": 3}, 18), ("D4m", {"m": 3}, 12), ("D2mxZ2", {"m": 3}, 12), ("D2mxZ2", {"m": 4}, 16)],
)
def test_group_algebras(spec, kwargs, dim):
    H = build_group_algebra(spec, **kwargs)
    assert H.dimension == dim
    assert H.check_hopf_axioms() == []
    assert len(H.group_like_elements()) == dim


def test_family_names_are_case_insensitive():
    assert build_family("H2N2", n=2).family == "H2n2"
    assert build_family("b4m", m=3).family == "B4m"
    assert build_family("d4m", m=2).family == "D4m"


@pytest.mark.parametrize("family, kwargs", [("h2n2", {"n": 1}), ("a4m", {"m": 1}), ("b4m", {}), ("znwrs2", {"n": 0})])
def test_parameters_below_two_are_rejected(family, kwargs):
    with pytest.raises(ParameterOutOfRange):
        build_family(family, **kwargs)


def test_unknown_family():
    with pytest.raises(ParameterOutOfRange):
        build_family("quaternion", n=2)


def test_normal_form_of_group_like_power():
    H = build_H2n2(3)
    x = H.generator("x")
    assert H.normal_form((x,) * 3) == {(): H.one}


def test_group_like_word_operations():
    H = build_H2n2(2)
    x = H.word("x")
    assert lc_equal(H.multiply({x: H.one}, {x: H.one}), {(): H.one})
    assert H.counit_of_word(H.word("xy")) == H.one
    assert H.coproduct_of_word(x) == {(x, x): H.one}
    assert lc_equal(H.multiply({x: H.one}, H.antipode_of_word(x)), {(): H.one})


def test_kac_paljutkin_z_coproduct():
    H = build_H2n2(2)
    half = CycNum.from_rational(H.conductor, Fraction(1, 2))
    z, xz, yz = H.word("z"), H.word("xz"), H.word("yz")
    expected = sorted([(half, (z, z)), (half, (xz, z)), (half, (z, yz)), (-half, (xz, yz))], key=lambda term: term[1])
    assert H.iterated_coproduct(H.generator("z"), 2) == expected


@pytest.mark.parametrize("n", [2, 3])
def test_group_like_iterated_coproduct(n):
    H = build_H2n2(n)
    x = H.word("x")
    assert H.iterated_coproduct(H.generator("x"), 3) == [(H.one, (x, x, x))]


def test_z_swaps_x_and_y():
    H = build_H2n2(3)
    z, x, y = ({H.word(name): H.one} for name in "zxy")
    assert lc_equal(H.multiply(z, x), H.multiply(y, z))
    assert lc_equal(H.multiply(x, z), H.multiply(z, y))


def test_z_squared_in_kac_paljutkin():
    H = build_H2n2(2)
    half = CycNum.from_rational(H.conductor, Fraction(1, 2))
    expected = {(): half, H.word("x"): half, H.word("y"): half, H.word("xy"): -half}
    assert lc_equal(H.normal_form(H.word("zz")), expected)


@pytest.mark.parametrize("m", [2, 3, 4, 5, 6])
def test_rotation_power(m):
    A, B = build_A4m(m), build_B4m(m)
    assert lc_equal(A.normal_form(A.word("s+s-" * m)), {(): A.one})
    assert lc_equal(B.normal_form(B.word("s+s-" * m)), B.normal_form(B.word("a")))
    assert not lc_equal(B.normal_form(B.word("s+s-" * m)), {(): B.one})
