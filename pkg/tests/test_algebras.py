import pytest

from cyclotomic.linalg import CycMatrix
from hopf.families import build_A4m, build_B4m, build_H2n2
from algebras.gradedAlgebra import check_relations_stable, degree_basis, graded_action
from algebras.oreExtension import convolution_condition, ore_extend
from algebras.standardActions import action_oracle, algebra_names, standard_action, standard_actions
from algebras.tensorEngine import MAX_TENSOR_DEGREE, TensorQuotientEngine
from representations.labels import RepLabel
from utils.errors import ExtensionConditionFails, InnerFaithfulnessPrecondition, ParameterOutOfRange


def test_algebra_names():
    assert algebra_names(build_H2n2(2)) == ["Aminus", "Aplus", "KP-a", "KP-b", "KP-c", "KP-d"]
    assert algebra_names(build_H2n2(3)) == ["Aminus", "Aplus"]
    assert algebra_names(build_A4m(3)) == ["Aminus", "Aplus"]
    assert len(algebra_names(build_A4m(4))) == 10


def test_unknown_algebra_name():
    with pytest.raises(ParameterOutOfRange):
        standard_action(build_B4m(3), "A1minus")


@pytest.mark.parametrize("H", [build_H2n2(2), build_H2n2(3), build_B4m(3), build_A4m(3)], ids=lambda H: H.name)
def test_two_generator_hilbert_function(H):
    for A in standard_actions(H):
        assert A.hilbert_function(6) == [d + 1 for d in range(7)]


def test_ore_extension_hilbert_function():
    H = build_A4m(4)
    for name in ("A1minus", "A2plus", "A5minus"):
        A = standard_action(H, name)
        assert A.dim_v == 3
        assert A.hilbert_function(5) == [(d + 1) * (d + 2) // 2 for d in range(6)]


@pytest.mark.parametrize(
    "family, value, name",
    [("h2n2", 2, "KP-a"), ("h2n2", 2, "KP-c"), ("h2n2", 3, "Aminus"), ("h2n2", 3, "Aplus"),
     ("b4m", 3, "Aplus"), ("a4m", 3, "Aminus"), ("a4m", 4, "A1minus"), ("a4m", 4, "A4plus")],
)
def test_tensor_quotient_agrees_with_rewriting(family, value, name):
    from hopf.families import build_family

    H = build_family(family, n=value, m=value)
    A = standard_action(H, name)
    engine = TensorQuotientEngine(A)
    for d in range(4):
        assert engine.agrees_with_closed_form(d)


def test_tensor_engine_degree_cap():
    engine = TensorQuotientEngine(standard_action(build_B4m(2), "Aminus"))
    with pytest.raises(ParameterOutOfRange):
        engine.ideal(MAX_TENSOR_DEGREE + 1)


def test_tensor_engine_word_indexing():
    engine = TensorQuotientEngine(standard_action(build_A4m(4), "A1minus"))
    for word in [(0, 1, 2), (2, 2), (1,), ()]:
        assert engine.word_at(engine.index_of(word), len(word)) == word


def _check_oracle(A, texts):
    for text in texts:
        word = A.word(text)
        d, vec = A.coordinates({word: A.one})
        for g in range(A.hopf.ngens):
            _, expected = A.coordinates(action_oracle(A, g, word))
            assert A.act(g, d, vec) == expected, (A.name, text, A.hopf.generator_names[g])


@pytest.mark.parametrize("n", [2, 3])
@pytest.mark.parametrize("name", ["Aminus", "Aplus"])
def test_h2n2_action_matches_closed_form(n, name):
    A = standard_action(build_H2n2(n), name, i=0, j=1)
    _check_oracle(A, ["u", "v", "uu", "uv", "vv", "uuv", "uvv", "uuvv"])


@pytest.mark.parametrize("name", ["Aminus", "Aplus"])
def test_b4m_action_matches_closed_form(name):
    A = standard_action(build_B4m(3), name, i=1)
    _check_oracle(A, ["uu", "vu", "uv", "uuvu", "uvuv", "uuuv"])


def test_odd_a4m_action_matches_closed_form():
    A = standard_action(build_A4m(3), "Aminus", i=1)
    _check_oracle(A, ["uu", "vu", "uv", "uuvu"])


def test_a1minus_action_matches_closed_form():
    A = standard_action(build_A4m(4), "A1minus", i=1)
    _check_oracle(A, ["uv", "uu", "tt", "utt", "uvtt"])


def test_oracle_rejects_uncovered_words():
    from utils.errors import UnsupportedPresentation

    A = standard_action(build_H2n2(3), "Aminus")
    with pytest.raises(UnsupportedPresentation):
        action_oracle(A, 0, A.word("vu"))


def test_inner_faithful_flags():
    assert standard_action(build_H2n2(3), "Aminus", i=0, j=1).inner_faithful
    assert not standard_action(build_B4m(3), "Aminus", i=2).inner_faithful
    H = build_A4m(4)
    assert standard_action(H, "A4minus").inner_faithful
    assert not standard_action(H, "A5minus").inner_faithful
    assert standard_action(build_A4m(6), "A5minus").inner_faithful


def test_require_inner_faithful():
    with pytest.raises(InnerFaithfulnessPrecondition):
        standard_action(build_B4m(3), "Aminus", i=2, require_inner_faithful=True)


def test_convolution_condition():
    H = build_A4m(4)
    assert convolution_condition(H, RepLabel("A4m", "T", (1, 1, 1)))[0]
    holds, failing = convolution_condition(H, RepLabel("A4m", "T", (1, 1, -1)))
    assert not holds
    assert failing in H.generator_names


def test_strict_extension_rejects_non_central_t():
    A = standard_action(build_A4m(4), "A1minus")
    with pytest.raises(ExtensionConditionFails) as info:
        ore_extend(A.ore.base, A.ore.sigma, RepLabel("A4m", "T", (1, 1, -1)), strict=True)
    assert info.value.generator in A.hopf.generator_names


def test_trivial_t_over_two_generator_base():
    H = build_B4m(3)
    base = standard_action(H, "Aminus")
    sigma = CycMatrix.diagonal([-1, -1], H.conductor)
    extended = ore_extend(base, sigma, RepLabel("B4m", "T", (1, 1, 1)))
    assert extended.letters == ["u", "v", "t"]
    assert extended.ore.base is base
    # t u = -u t
    _, vec = extended.coordinates({extended.word("tu"): extended.one})
    assert vec == extended.element([(-1, "ut")])[1]


def test_sigma_must_preserve_relations():
    H = build_B4m(3)
    base = standard_action(H, "Aminus")
    sigma = CycMatrix([[1, 0], [0, 2]], H.conductor)
    with pytest.raises(ExtensionConditionFails):
        ore_extend(base, sigma, RepLabel("B4m", "T", (1, 1, 1)), strict=False)


def test_algebra_document():
    doc = standard_action(build_A4m(4), "A3plus").to_json()
    assert doc["letters"] == ["u", "v", "t"]
    assert doc["t_label"] == "T+--"
    assert isinstance(doc["sigma"], list)


def test_graded_action_in_low_degrees():
    A = standard_action(build_B4m(3), "Aminus")
    assert degree_basis(A, 1).monomials == [(0,), (1,)]
    assert degree_basis(A, 4).dimension == 5
    for g in range(A.hopf.ngens):
        assert graded_action(A, g, 1) == A.module.matrices[g]
    assert A.degree_module(3).check_is_module()
    assert check_relations_stable(A)


def test_reducible_module_note_is_logged_once(caplog):
    import algebras.standardActions as actions

    actions._REPORTED_REDUCIBLE.clear()
    H = build_A4m(2)
    with caplog.at_level("DEBUG", logger="algebras.standardActions"):
        first = standard_action(H, "A1minus")
        standard_action(H, "A1minus")
    notes = [r for r in caplog.records if "reducible degree-one module" in r.getMessage()]
    assert len(notes) == 1
    assert notes[0].levelname == "DEBUG"
    assert first.notes
