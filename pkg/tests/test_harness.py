import json

import pytest

from coxsph import cli, harness
from coxsph.coxeter import CoxeterError

from golden_data import KEY_15243_D24_EXPANSION, S5_NONSPHERICAL


def test_census_report_shape():
    report = harness.run_census("A4")
    assert report.total == 120
    assert sorted(report.nonspherical) == sorted(S5_NONSPHERICAL)
    assert report.spherical_count == 99
    payload = report.to_json_dict()
    again = json.loads(json.dumps(payload))
    assert again["nonspherical"] == 21
    assert len(again["entries"]) == 120
    spherical_entries = [e for e in again["entries"] if e["spherical"]]
    assert all(e["witness"] for e in spherical_entries)
    assert all(e["witness"] is None for e in again["entries"] if not e["spherical"])


def test_census_is_deterministic():
    a = harness.run_census("B3")
    b = harness.run_census("B3")
    assert [e.element for e in a.entries] == [e.element for e in b.entries]
    assert a.nonspherical == b.nonspherical


def test_census_parallel_matches_serial():
    serial = harness.run_census("A4")
    parallel = harness.run_census("A4", jobs=2)
    assert [e.element for e in serial.entries] == [e.element for e in parallel.entries]
    assert [e.spherical for e in serial.entries] == [
        e.spherical for e in parallel.entries
    ]


def test_check_reports():
    report = harness.run_check("A4", "24531", (1, 3))
    assert not report.spherical and report.staircase is False
    assert report.left_descents == (1, 3)

    report = harness.run_check("A7", "35246781", (1, 2, 4), paranoid=True)
    assert report.spherical and report.witness
    assert report.staircase is True

    report = harness.run_check("A3", "3412", (2,))
    assert report.spherical

    report = harness.run_check("F4", "s2 s3 s2 s3 s4 s3 s2 s1 s3 s2 s4 s3", (2, 3, 4))
    assert report.spherical and report.staircase is None


def test_key_expand_runner():
    expansion = harness.run_key_expand((1, 5, 2, 4, 3), (2, 4), cross_check=True)
    assert expansion.coefficients == KEY_15243_D24_EXPANSION
    single = harness.run_key_expand((2, 2, 0, 0), (2,))
    assert single.coefficients == {((2, 2), (0, 0)): 1}
    mf = harness.run_key_expand((0, 0, 1, 1), (1, 2, 3))
    assert mf.is_multiplicity_free()
    ry = harness.run_key_expand((1, 5, 2, 4, 3), (2, 4), oracle="ry")
    assert ry.coefficients == expansion.coefficients
    with pytest.raises(CoxeterError):
        harness.run_key_expand((1, 5, 2, 4, 3), (2, 4), oracle="nope")
    with pytest.raises(ValueError):
        harness.run_key_expand((2, 1), (), n=2)  # descent outside D


def test_consistency_runner():
    for n in (3, 4):
        report = harness.run_consistency(n)
        assert report.disagreements == []
    report5 = harness.run_consistency(5)
    assert report5.disagreements == []
    assert report5.pairs_checked == 541


def test_staircase_side_matches_reference_list():
    import itertools
    from coxsph.polyring import staircase_test
    from coxsph.typea import format_permutation, left_descents

    bad = sorted(
        format_permutation(line)
        for line in itertools.permutations(range(1, 6))
        if not staircase_test(line, left_descents(line))
    )
    assert bad == sorted(S5_NONSPHERICAL)


def test_experiment_pattern_avoidance():
    result = harness.run_experiment("pattern-avoidance", n=6)
    assert result["consistent"]
    assert result["unexplained"] == []
    assert result["nonspherical_checked"] == 21 + 320


def test_experiment_vanishing_density():
    result = harness.run_experiment("vanishing-density", n=6)
    got = [result["counts"][m]["nonspherical"] for m in (2, 3, 4, 5, 6)]
    assert got == [0, 0, 0, 21, 320]


def test_experiment_upone():
    result = harness.run_experiment("upone", n=5, seed=1)
    assert result["consistent"]
    assert result["pairs_with_multiplicity_tested"] >= 100


def test_experiment_distinct_lambda():
    result = harness.run_experiment("distinct-lambda", n=5, seed=0)
    assert result["consistent"]
    assert result["nonspherical_examined"] == 21
    with pytest.raises(CoxeterError):
        harness.run_experiment("nothing")


def test_paranoid_self_check():
    results = harness.paranoid_self_check(n_max=4, seed=0)
    assert results["all"]


# -- CLI ------------------------------------------------------------------------


def test_cli_census_and_expectations(capsys, tmp_path):
    out = tmp_path / "census.json"
    code = cli.main(["census", "B3", "--json", str(out),
                     "--expect-nonspherical", "18"])
    assert code == 0
    captured = capsys.readouterr()
    assert "48 elements" in captured.out
    payload = json.loads(out.read_text())
    assert payload["nonspherical"] == 18
    # wrong expectation -> verification failure
    assert cli.main(["census", "B3", "--expect-nonspherical", "3"]) == 2


def test_cli_census_requires_slow_for_large_groups(capsys):
    assert cli.main(["census", "A6"]) == 1
    assert "--slow" in capsys.readouterr().err


def test_cli_check(capsys):
    code = cli.main(["check", "A4", "24531", "--I", "1,3"])
    assert code == 0
    out = capsys.readouterr().out
    assert "I-spherical: False" in out
    assert "multiplicity-free: False" in out


def test_cli_check_usage_errors(capsys):
    assert cli.main(["check", "A4", "24531", "--I", "2"]) == 1
    with pytest.raises(SystemExit) as exc:
        cli.main(["not-a-command"])
    assert exc.value.code == 1


def test_cli_key_expand(capsys, tmp_path):
    out = tmp_path / "exp.json"
    code = cli.main(["key-expand", "(1,5,2,4,3)", "--D", "2,4",
                     "--cross-check", "--json", str(out)])
    assert code == 0
    text = capsys.readouterr().out
    assert "2 * s[(5,3),(3,2),(2)]" in text
    payload = json.loads(out.read_text())
    assert payload["D"] == [2, 4]
    assert len(payload["terms"]) == 17
    twos = [t for t in payload["terms"] if t["coeff"] == 2]
    assert sorted(t["lambdas"] for t in twos) == [
        [[5, 2], [4, 2], [2]],
        [[5, 3], [3, 2], [2]],
    ]


def test_cli_verify_consistency(capsys):
    assert cli.main(["verify-consistency", "--n", "4"]) == 0
    assert "0 disagreements" in capsys.readouterr().out
    assert cli.main(["verify-consistency", "--n", "6"]) == 1  # needs --slow
    assert cli.main(["verify-consistency", "--n", "7", "--slow"]) == 1


def test_cli_experiment(capsys, tmp_path):
    out = tmp_path / "exp.json"
    assert cli.main(["experiment", "vanishing-density", "--n", "5",
                     "--json", str(out)]) == 0
    payload = json.loads(out.read_text())
    assert payload["counts"]["5"]["nonspherical"] == 21


def test_cli_self_check(capsys):
    assert cli.main(["self-check"]) == 0
    assert "ok" in capsys.readouterr().out


def test_enum_cap_env(monkeypatch):
    monkeypatch.setenv("COXSPH_ENUM_CAP", "10")
    from coxsph.coxeter import CoxeterSystem

    system = CoxeterSystem.from_string("A4")
    with pytest.raises(CoxeterError):
        system.elements()
    monkeypatch.delenv("COXSPH_ENUM_CAP")
    assert len(system.elements()) == 120
