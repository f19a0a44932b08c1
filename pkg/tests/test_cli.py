import pytest

from reports.main import EXIT_BAD_INPUT, EXIT_OK, main
from utils.config import EngineSettings
from utils.errors import ParameterOutOfRange
from utils.jsonIO import loads


@pytest.fixture(autouse=True)
def clean_env(monkeypatch):
    for name in ("HOPF_MAX_DEGREE", "HOPF_LOG_LEVEL", "HOPF_REPORT_DIR"):
        monkeypatch.delenv(name, raising=False)


def test_settings_from_env(monkeypatch):
    assert EngineSettings.from_env().degree_bound(8) == 18
    monkeypatch.setenv("HOPF_MAX_DEGREE", "12")
    monkeypatch.setenv("HOPF_LOG_LEVEL", "debug")
    settings = EngineSettings.from_env()
    assert settings.degree_bound(8) == 12
    assert settings.log_level == "DEBUG"
    monkeypatch.setenv("HOPF_MAX_DEGREE", "twelve")
    with pytest.raises(ParameterOutOfRange):
        EngineSettings.from_env()


def test_irreps(capsys):
    assert main(["irreps", "--family", "h2n2", "--n", "2"]) == EXIT_OK
    out = capsys.readouterr().out
    assert "5 irreducibles" in out
    assert "pi_0_1" in out


def test_irreps_json_and_out_file(capsys, tmp_path):
    target = tmp_path / "catalog.json"
    assert main(["irreps", "--family", "b4m", "--m", "3", "--json", "--out", str(target)]) == EXIT_OK
    printed = loads(capsys.readouterr().out)
    assert printed["kind"] == "catalog"
    assert len(printed["irreducibles"]) == 6
    assert loads(target.read_bytes()) == printed


def test_group_algebra_catalog():
    assert main(["irreps", "--family", "group", "--group", "D4m", "--m", "3"]) == EXIT_OK


def test_bad_parameters_exit_with_two(capsys):
    assert main(["irreps", "--family", "h2n2", "--n", "1"]) == EXIT_BAD_INPUT
    assert "error" in capsys.readouterr().err
    assert main(["irreps", "--family", "group"]) == EXIT_BAD_INPUT
    assert main(["inner-faithful", "--family", "b4m", "--m", "3", "--rep", "pi_1_2"]) == EXIT_BAD_INPUT


def test_bad_environment_exits_with_two(monkeypatch):
    monkeypatch.setenv("HOPF_MAX_DEGREE", "-4")
    assert main(["irreps", "--family", "h2n2", "--n", "2"]) == EXIT_BAD_INPUT


def test_missing_subcommand():
    with pytest.raises(SystemExit):
        main([])


def test_fusion_check(capsys):
    assert main(["fusion", "--family", "a4m", "--m", "4", "--check-paper"]) == EXIT_OK
    assert "all pairs agree" in capsys.readouterr().out


def test_inner_faithful(capsys):
    assert main(["inner-faithful", "--family", "h2n2", "--n", "3", "--rep", "pi_0_1", "--json"]) == EXIT_OK
    doc = loads(capsys.readouterr().out)
    assert doc["inner_faithful"] is True
    assert doc["criterion"] is True
    assert doc["hopf_ideal_witness"] is None


def test_not_inner_faithful(capsys):
    assert main(["inner-faithful", "--family", "b4m", "--m", "3", "--rep", "pi_2", "--json"]) == EXIT_OK
    doc = loads(capsys.readouterr().out)
    assert doc["inner_faithful"] is False
    assert doc["hopf_ideal_witness"] == "a"


def test_invariants(capsys):
    assert main(["invariants", "--family", "b4m", "--m", "2", "--algebra", "Aminus", "--check-paper", "--json"]) == EXIT_OK
    doc = loads(capsys.readouterr().out)
    assert sorted(doc["degrees"]) == [2, 4]
    assert doc["certificate"] == "regular-consistent"


def test_invariants_bound_from_environment(monkeypatch, capsys):
    monkeypatch.setenv("HOPF_MAX_DEGREE", "10")
    assert main(["invariants", "--family", "h2n2", "--n", "2", "--algebra", "KP-b", "--json"]) == EXIT_OK
    assert loads(capsys.readouterr().out)["max_degree"] == 10


def test_verify_list(capsys):
    assert main(["verify", "--list"]) == EXIT_OK
    assert "lemma.four-variable" in capsys.readouterr().out


def test_verify_one_case(capsys):
    assert main(["verify", "--theorem", "lemma.skew", "--range", "t=0..2", "--json"]) == EXIT_OK
    doc = loads(capsys.readouterr().out)
    assert doc["passed"] is True
    assert [o["value"] for o in doc["outcomes"]] == [0, 1, 2]


def test_verify_rejects_bad_requests():
    assert main(["verify", "--theorem", "no.such.case"]) == EXIT_BAD_INPUT
    assert main(["verify", "--theorem", "A4mOdd.fusion", "--range", "m=4"]) == EXIT_BAD_INPUT
    assert main(["verify"]) == EXIT_BAD_INPUT


def test_verify_a4m_even_fixed_at_m2(capsys):
    assert main(["verify", "--theorem", "A4mEven.fixed", "--range", "m=2", "--json"]) == EXIT_OK
    doc = loads(capsys.readouterr().out)
    assert [(o["value"], o["passed"]) for o in doc["outcomes"]] == [(2, True)]


@pytest.mark.slow
def test_verify_a4m_even_fixed_range(capsys):
    assert main(["verify", "--theorem", "A4mEven.fixed", "--range", "m=2,4,6"]) == EXIT_OK
    out = capsys.readouterr().out
    assert "A4mEven.fixed" in out
    assert "FAIL" not in out
