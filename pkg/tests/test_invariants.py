import pytest

from cyclotomic.linalg import CycMatrix
from hopf.families import build_A4m, build_B4m, build_H2n2
from algebras.standardActions import standard_action
from invariants.claimedGenerators import claimed_generators, verify_claimed_generators
from invariants.faithfulness import faithfulness_check
from invariants.fixedRing import (
    NOT_FREE,
    NOT_REGULAR,
    REGULAR,
    SCHEMA_ID,
    certificate_for,
    fixed_subspace,
    free_hilbert_prefix,
    hilbert_prefix,
    is_fixed,
    minimal_generators,
)
from invariants.oreCheck import bigraded_fixed_dimensions, odd_t_power_check, ore_invariants_check
from reports.theoremCases import plus_hilbert_head
from utils.errors import DegreeBoundTooSmall, ParameterOutOfRange


def test_free_hilbert_prefix():
    assert free_hilbert_prefix([2, 4], 8) == [1, 0, 1, 0, 2, 0, 2, 0, 3]
    assert free_hilbert_prefix([], 3) == [1, 0, 0, 0]


def test_certificates():
    assert certificate_for([2, 4, 6], [1, 0, 1, 0, 2, 0, 3], 2)[0] == NOT_REGULAR
    assert certificate_for([2, 4], free_hilbert_prefix([2, 4], 8), 2)[0] == REGULAR
    assert certificate_for([2, 6], [1, 0, 1, 0, 1, 0, 3], 2)[0] == NOT_FREE


@pytest.mark.parametrize("name", ["KP-b", "KP-c", "KP-d"])
def test_h8_quadratic_algebras_are_regular(name):
    A = standard_action(build_H2n2(2), name)
    report = minimal_generators(A, 10)
    assert sorted(report.degrees) == [2, 4]
    assert report.certificate == REGULAR
    assert report.product_of_degrees == 8
    assert report.conjecture_product_holds


def test_kp_a_is_not_regular():
    report = minimal_generators(standard_action(build_H2n2(2), "KP-a"), 18)
    assert report.certificate == NOT_REGULAR
    assert len(report.degrees) > 2


@pytest.mark.parametrize("n", [2, 3])
def test_h2n2_minus(n):
    report = minimal_generators(standard_action(build_H2n2(n), "Aminus"), 4 * n + 2)
    assert sorted(report.degrees) == [n, 2 * n]
    assert report.certificate == REGULAR


def test_h18_plus_is_not_free():
    report = minimal_generators(standard_action(build_H2n2(3), "Aplus"), 20)
    assert sorted(report.degrees) == [3, 9]
    assert report.certificate == NOT_FREE


@pytest.mark.parametrize("m", [2, 3])
def test_b4m_minus(m):
    report = minimal_generators(standard_action(build_B4m(m), "Aminus"), 4 * m + 2)
    assert sorted(report.degrees) == [2, 2 * m]
    assert report.certificate == REGULAR
    assert report.product_of_degrees == 4 * m


@pytest.mark.parametrize("m", [2, 3])
def test_b4m_plus(m):
    report = minimal_generators(standard_action(build_B4m(m), "Aplus"), 4 * m + 6)
    assert sorted(report.degrees) == [4, 2 * m, 2 * m + 2]
    assert report.certificate == NOT_REGULAR
    head = plus_hilbert_head(m)
    assert report.hilbert_prefix[: len(head)] == head


def test_odd_a4m_minus():
    report = minimal_generators(standard_action(build_A4m(3), "Aminus"), 14)
    assert sorted(report.degrees) == [2, 6]
    assert report.certificate == REGULAR


def test_a1minus_over_a16():
    report = minimal_generators(standard_action(build_A4m(4), "A1minus"), 12)
    assert sorted(report.degrees) == [2, 2, 4]
    assert report.certificate == REGULAR
    assert report.product_of_degrees == 16


def test_degree_bound_too_small():
    with pytest.raises(DegreeBoundTooSmall):
        minimal_generators(standard_action(build_B4m(3), "Aminus"), 7)
    with pytest.raises(ParameterOutOfRange):
        minimal_generators(standard_action(build_B4m(3), "Aminus"), 1)


def test_fixed_subspace_in_low_degrees():
    A = standard_action(build_B4m(3), "Aminus")
    assert hilbert_prefix(A, 2) == [1, 0, 1]
    assert hilbert_prefix(A, 2, invariant=False) == [1, 2, 3]
    (vec,) = fixed_subspace(A, 2)
    assert is_fixed(A, vec, 2)
    assert is_fixed(A, A.element([(1, "uu")])[1], 2)
    assert not is_fixed(A, A.element([(1, "uv")])[1], 2)


def test_report_document():
    report = minimal_generators(standard_action(build_B4m(2), "Aminus"), 10)
    doc = report.to_json()
    assert doc["schema"] == SCHEMA_ID
    assert doc["degrees"] == report.degrees
    assert len(doc["generators"]) == len(report.degrees)
    assert len(report.generator_vectors) == len(report.degrees)


@pytest.mark.parametrize(
    "family, value, name",
    [("h2n2", 3, "Aminus"), ("b4m", 2, "Aminus"), ("b4m", 3, "Aminus"), ("a4m", 3, "Aminus"), ("a4m", 4, "A1minus")],
)
def test_published_generators(family, value, name):
    from hopf.families import build_family

    A = standard_action(build_family(family, n=value, m=value), name)
    claims = claimed_generators(A)
    assert claims is not None
    check = verify_claimed_generators(A, claims, 12)
    assert check.ok, check.mismatches


def test_kp_a_has_no_published_generators():
    A = standard_action(build_H2n2(2), "KP-a")
    assert claimed_generators(A) is None
    with pytest.raises(ParameterOutOfRange):
        verify_claimed_generators(A, None, 6)


def test_faithful_actions():
    assert faithfulness_check(standard_action(build_H2n2(2), "KP-b"), 8)
    assert faithfulness_check(standard_action(build_B4m(3), "Aminus"), 14)


def test_action_that_is_not_inner_faithful_is_not_faithful():
    A = standard_action(build_B4m(3), "Aminus", i=2)
    result = faithfulness_check(A, 14)
    assert not result
    assert result.missing


@pytest.mark.parametrize("name", ["KP-b", "KP-d"])
@pytest.mark.parametrize("scale", [1, -1])
def test_trivial_t_adds_a_polynomial_variable(name, scale):
    H = build_H2n2(2)
    base = standard_action(H, name)
    assert ore_invariants_check(base, CycMatrix.diagonal([scale, scale], H.conductor), 8)


def test_minus_invariants_use_even_powers_of_t():
    A = standard_action(build_A4m(4), "A1minus")
    assert odd_t_power_check(A, 8).ok


def test_parity_check_needs_an_ore_extension():
    with pytest.raises(ParameterOutOfRange):
        odd_t_power_check(standard_action(build_B4m(3), "Aminus"), 4)


def test_bigraded_fixed_dimensions_split_by_t_degree():
    A = standard_action(build_A4m(4), "A1minus")
    dims = bigraded_fixed_dimensions(A, 4)
    for d in range(5):
        assert sum(v for (e, _), v in dims.items() if e == d) == len(fixed_subspace(A, d))
    assert all(v == 0 for (_, k), v in dims.items() if k % 2)
    with pytest.raises(ParameterOutOfRange):
        bigraded_fixed_dimensions(standard_action(build_B4m(3), "Aminus"), 2)
