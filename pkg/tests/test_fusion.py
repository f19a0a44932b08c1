import pytest

from hopf.families import build_A4m, build_B4m, build_H2n2, build_group_algebra
from fusion.expectedRules import expected_fusion
from fusion.fusionTable import (
    build_fusion_table,
    compare_fusion_isomorphism,
    find_fusion_isomorphism,
    one_dimensional_group,
)
from representations.labels import RepLabel, trivial_label
from utils.errors import BijectionNotDimensionPreserving


def _agrees_with_closed_form(H):
    table = build_fusion_table(H)
    return all(table.product(a, b) == expected_fusion(H, a, b) for a in table.labels for b in table.labels)


@pytest.mark.parametrize("H", [build_H2n2(2), build_H2n2(3), build_B4m(2), build_B4m(3), build_A4m(3), build_A4m(4)], ids=lambda H: H.name)
def test_computed_table_matches_closed_form(H):
    table = build_fusion_table(H)
    assert table.check_dimensions()
    assert table.check_associativity()
    assert table.unit_label() == trivial_label(H.family, H.params)
    assert _agrees_with_closed_form(H)


def test_pi_tensor_pi_of_h2n2():
    H = build_H2n2(3)
    table = build_fusion_table(H)
    a = RepLabel("H2n2", "pi", (0, 1))
    product = table.product(a, a)
    # pi_{0,1} x pi_{0,1} = pi_{1,1} + pi_{0,2}, and pi_{1,1} splits
    assert product[RepLabel("H2n2", "pi", (0, 2))] == 1
    assert product[RepLabel("H2n2", "T", (1, 1))] == 1
    assert product[RepLabel("H2n2", "T", (1, -1))] == 1


def test_commutativity_by_family():
    assert build_fusion_table(build_H2n2(3)).is_commutative()
    assert build_fusion_table(build_B4m(3)).is_commutative()
    assert build_fusion_table(build_A4m(3)).is_commutative()
    assert not build_fusion_table(build_A4m(4)).is_commutative()


def test_one_dimensional_group_of_even_a4m_is_non_abelian():
    _, abelian = one_dimensional_group(build_fusion_table(build_A4m(4)))
    assert not abelian
    _, abelian = one_dimensional_group(build_fusion_table(build_A4m(3)))
    assert abelian


def test_h2n2_and_wreath_product_share_a_fusion_ring():
    t1 = build_fusion_table(build_H2n2(3))
    t2 = build_fusion_table(build_group_algebra("ZnWrS2", n=3))
    bijection = {label: RepLabel("ZnWrS2", {"T": "U", "pi": "rho"}[label.kind], label.params) for label in t1.labels}
    assert compare_fusion_isomorphism(t1, t2, bijection)


def test_b4m_and_dihedral_group_share_a_fusion_ring():
    t1 = build_fusion_table(build_B4m(3))
    t2 = build_fusion_table(build_group_algebra("D4m", m=3))
    bijection = {
        label: RepLabel("D4m", label.kind, label.params[:2] if label.kind == "T" else label.params)
        for label in t1.labels
    }
    assert compare_fusion_isomorphism(t1, t2, bijection)


def test_h8_and_b8_share_a_fusion_ring():
    assert find_fusion_isomorphism(build_fusion_table(build_H2n2(2)), build_fusion_table(build_B4m(2))) is not None


def test_even_a4m_differs_from_its_group_counterpart():
    t1 = build_fusion_table(build_A4m(4))
    t2 = build_fusion_table(build_group_algebra("D2mxZ2", m=4))
    assert t2.is_commutative()
    assert find_fusion_isomorphism(t1, t2) is None


def test_bijection_must_preserve_dimension():
    t1 = build_fusion_table(build_B4m(2))
    t2 = build_fusion_table(build_H2n2(2))
    swapped = dict(zip(t1.labels, reversed(t2.labels)))
    with pytest.raises(BijectionNotDimensionPreserving):
        compare_fusion_isomorphism(t1, t2, swapped)


def test_frame_and_json_views():
    table = build_fusion_table(build_B4m(2))
    frame = table.to_frame()
    assert frame.shape == (len(table), len(table))
    doc = table.to_json()
    assert len(doc["structure_constants"]) == len(table)
    assert doc["dimensions"] == [label.dimension for label in table.labels]
