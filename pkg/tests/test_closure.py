import pytest

from hopf.families import build_A4m, build_B4m, build_H2n2
from fusion.closure import (
    candidate_modules,
    closure_is_complete,
    criterion_details,
    generation_closure,
    hopf_ideal_witness,
    inner_faithful_criterion,
    irreducible_parts,
    module_of,
)
from fusion.fusionTable import build_fusion_table
from representations.labels import RepLabel, parse_labels
from utils.errors import CriterionNotApplicable


def test_pi_0_1_of_h18_is_inner_faithful():
    H = build_H2n2(3)
    V = parse_labels("H2n2", "pi_0_1")
    assert inner_faithful_criterion(H, V)
    assert closure_is_complete(V, build_fusion_table(H))
    assert hopf_ideal_witness(module_of(H, V)) is None


def test_pi_2_of_b12_is_not_inner_faithful():
    H = build_B4m(3)
    V = parse_labels("B4m", "pi_2")
    assert not inner_faithful_criterion(H, V)
    table = build_fusion_table(H)
    assert generation_closure(V, table) != set(table.labels)
    assert hopf_ideal_witness(module_of(H, V)) is not None


@pytest.mark.parametrize("H", [build_H2n2(2), build_H2n2(3), build_H2n2(4), build_B4m(2), build_B4m(3), build_B4m(4),
                               build_A4m(3), build_A4m(5), build_A4m(4), build_A4m(6)], ids=lambda H: H.name)
def test_criterion_agrees_with_closure(H):
    table = build_fusion_table(H)
    for V in candidate_modules(H):
        assert inner_faithful_criterion(H, V) == closure_is_complete(irreducible_parts(H, V), table), V


def test_single_pi_never_suffices_for_even_m():
    H = build_A4m(4)
    table = build_fusion_table(H)
    for V in candidate_modules(H):
        if len(V) == 1:
            assert not inner_faithful_criterion(H, V)
            assert not closure_is_complete(V, table)


def test_even_m_residues_mod_four():
    pi = RepLabel("A4m", "pi", (1, -1))
    twisted = RepLabel("A4m", "T", (1, -1, 1))
    assert not inner_faithful_criterion(build_A4m(4), [pi, twisted])
    assert inner_faithful_criterion(build_A4m(6), [pi, twisted])


def test_criterion_not_applicable():
    H = build_H2n2(3)
    with pytest.raises(CriterionNotApplicable):
        inner_faithful_criterion(H, parse_labels("H2n2", "pi_0_1,pi_0_2"))
    with pytest.raises(CriterionNotApplicable):
        inner_faithful_criterion(H, parse_labels("H2n2", "T0+"))


def test_reducible_module_splits_before_closure():
    H = build_H2n2(3)
    parts = irreducible_parts(H, parse_labels("H2n2", "pi_1_1"))
    assert parts == [RepLabel("H2n2", "T", (1, 1)), RepLabel("H2n2", "T", (1, -1))]


def test_criterion_details():
    details = criterion_details(build_B4m(3), parse_labels("B4m", "pi_2"))
    assert details == {"i": 2, "gcd": 2}
