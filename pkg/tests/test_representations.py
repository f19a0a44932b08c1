import pytest

from hopf.families import build_A4m, build_B4m, build_H2n2, build_family
from representations.catalog import check_schur, irreducible_catalog, representation_for, splitting_vectors
from representations.decompose import decompose
from representations.labels import (
    RepLabel,
    canonical_components,
    is_reducible,
    parse_label,
    parse_labels,
    reduce_label,
)
from representations.representation import intertwiners, tensor_power
from utils.errors import CatalogIncomplete, LabelOutOfFamily


def _counts(catalog):
    ones = sum(1 for label, _ in catalog if label.dimension == 1)
    return ones, len(catalog) - ones


@pytest.mark.parametrize("n", [2, 3, 4])
def test_h2n2_catalog(n):
    catalog = irreducible_catalog(build_H2n2(n))
    assert _counts(catalog) == (2 * n, n * (n - 1) // 2)
    assert all(rep.check_is_module().ok for _, rep in catalog)


@pytest.mark.parametrize("m", [2, 3, 4, 5])
def test_b4m_catalog(m):
    catalog = irreducible_catalog(build_B4m(m))
    assert _counts(catalog) == (4, m - 1)
    assert all(rep.check_is_module().ok for _, rep in catalog)


@pytest.mark.parametrize("m, expected", [(3, (4, 2)), (5, (4, 4)), (2, (8, 0)), (4, (8, 2)), (6, (8, 4))])
def test_a4m_catalog(m, expected):
    catalog = irreducible_catalog(build_A4m(m))
    assert _counts(catalog) == expected
    assert all(rep.check_is_module().ok for _, rep in catalog)


@pytest.mark.parametrize(
    "family, value",
    [("h2n2", 2), ("h2n2", 4), ("b4m", 3), ("b4m", 6), ("a4m", 3), ("a4m", 4), ("a4m", 6),
     ("ZnWrS2", 3), ("D4m", 3), ("D2mxZ2", 4)],
)
def test_catalog_members_are_pairwise_non_isomorphic(family, value):
    catalog = irreducible_catalog(build_family(family, n=value, m=value))
    for a, rep_a in catalog:
        for b, rep_b in catalog:
            assert len(intertwiners(rep_a, rep_b)) == (1 if a == b else 0)


def test_catalog_is_cached_on_the_presentation():
    H = build_H2n2(3)
    assert irreducible_catalog(H) is irreducible_catalog(H)


def test_schur_check_rejects_isomorphic_entries():
    H = build_B4m(3)
    (a, rep), (b, _) = irreducible_catalog(H)[:2]
    with pytest.raises(CatalogIncomplete):
        check_schur(H, [(a, rep), (b, rep)])


def test_label_text_round_trip():
    for family, text in [("H2n2", "T1-"), ("H2n2", "pi_1_2"), ("B4m", "T+-+"), ("B4m", "pi_2"), ("A4m", "pi_1-"), ("D4m", "T-+")]:
        assert parse_label(family, text).text() == text


def test_parse_labels_list():
    labels = parse_labels("A4m", "pi_1-, T+-+")
    assert labels == [RepLabel("A4m", "pi", (1, -1)), RepLabel("A4m", "T", (1, -1, 1))]


def test_parse_label_rejects_other_family():
    with pytest.raises(LabelOutOfFamily):
        parse_label("H2n2", "pi_1+")
    with pytest.raises(LabelOutOfFamily):
        parse_label("D4m", "T+++")


def test_reduce_label_folds_indices():
    assert reduce_label(RepLabel("B4m", "pi", (5,)), {"m": 3}) == RepLabel("B4m", "pi", (1,))
    assert reduce_label(RepLabel("H2n2", "pi", (4, 1)), {"n": 3}) == RepLabel("H2n2", "pi", (1, 1))
    assert reduce_label(RepLabel("A4m", "pi", (3, -1)), {"m": 4}) == RepLabel("A4m", "pi", (1, -1))


def test_one_dimensional_label_must_satisfy_relations():
    # for B4m the sign of a is (s+ s-)^m
    with pytest.raises(LabelOutOfFamily):
        reduce_label(RepLabel("B4m", "T", (1, -1, 1)), {"m": 3})


def test_reducible_labels_split():
    params = {"n": 3}
    label = RepLabel("H2n2", "pi", (1, 1))
    assert is_reducible(label, params)
    assert canonical_components(label, params) == [RepLabel("H2n2", "T", (1, 1)), RepLabel("H2n2", "T", (1, -1))]
    H = build_H2n2(3)
    rep = representation_for(H, label)
    assert rep.reducible
    assert sorted(decompose(rep).labels()) == sorted(canonical_components(label, params))
    assert len(splitting_vectors(H, label)) == 2


def test_pi_m_of_b4m_is_reducible():
    params = {"m": 2}
    assert is_reducible(RepLabel("B4m", "pi", (2,)), params)
    assert not is_reducible(RepLabel("B4m", "pi", (1,)), params)


def test_tensor_square_dimension():
    H = build_B4m(3)
    rep = representation_for(H, RepLabel("B4m", "pi", (1,)))
    square = tensor_power(rep, 2)
    assert square.dimension == 4
    assert square.check_is_module().ok
    assert decompose(square).total_dimension() == 4
