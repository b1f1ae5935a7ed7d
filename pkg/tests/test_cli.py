import json

import pytest

from chevring.cli import UsageError, main, parse_args, run
from chevring.oracles import report_from_json_dict
from chevring.presentations import comparison_from_json_dict, presentation_from_json_dict


def run_cli(*argv):
    return run(parse_args(list(argv)))


# -- golden outputs -----------------------------------------------------------


def test_present_sp_golden_text():
    code, out, err = run_cli(
        "present", "--family", "Sp", "--rank", "4", "--q", "3", "--l", "5",
        "--theory", "cobordism", "--format", "text",
    )
    assert (code, err) == (0, "")
    assert out == (
        "F_5[q_2, q_4]\n"
        "  q_2: algebraic degree 4, topological degree 8\n"
        "  q_4: algebraic degree 8, topological degree 16"
    )


def test_present_gl_trivial_golden_text():
    code, out, err = run_cli(
        "present", "--family", "GL", "--rank", "3", "--q", "3", "--l", "5",
        "--theory", "chow",
    )
    assert (code, err) == (0, "")
    assert out == "Z/5\n  (no generators; m = 0)"


def test_present_latex():
    code, out, _ = run_cli(
        "present", "--family", "Sp", "--rank", "4", "--q", "3", "--l", "5",
        "--theory", "cobordism", "--format", "latex",
    )
    assert (code, out) == (0, "\\mathbb{F}_5[q_2, q_4]")


def test_params_golden_text():
    code, out, _ = run_cli("params", "--q", "3", "--l", "5", "--n", "3")
    assert code == 0
    assert out == "p = 3\nq = 3\nl = 5\nr = 4\na = 1\nh = 16\nn = 3\nm = 0\ne = 3"


def test_series_golden_text():
    code, out, _ = run_cli(
        "series", "--family", "Sp", "--rank", "1", "--q", "81", "--l", "5",
        "--theory", "cobordism", "--cutoff", "8", "--grading", "topological",
    )
    assert (code, out) == (0, "1, 0, 0, 0, 1, 0, 0, 0, 1")


def test_series_latex():
    code, out, _ = run_cli(
        "series", "--family", "Sp", "--rank", "1", "--q", "81", "--l", "5",
        "--theory", "cobordism", "--cutoff", "8", "--grading", "topological",
        "--format", "latex",
    )
    assert (code, out) == (0, "1 + t^4 + t^8 + O(t^{9})")


def test_compare_golden_text():
    code, out, _ = run_cli("compare", "--rank", "4", "--q", "3", "--l", "5")
    assert code == 0
    assert out.splitlines()[0] == "GL_4, q = 3, l = 5: equal"


# -- exit codes ---------------------------------------------------------------


def test_exit_2_for_even_l_in_chow():
    code, out, err = run_cli(
        "present", "--family", "GL", "--rank", "2", "--q", "2", "--l", "2",
        "--theory", "chow",
    )
    assert code == 2
    assert out == ""
    assert "l must be odd" in err


def test_exit_2_for_l_equal_p():
    code, _, err = run_cli("params", "--q", "25", "--l", "5")
    assert code == 2
    assert "characteristic" in err


def test_exit_2_for_torsion_prime():
    code, _, err = run_cli(
        "present", "--family", "Spin", "--rank", "3", "--q", "3", "--l", "2",
        "--theory", "cobordism",
    )
    assert code == 2
    assert "torsion" in err


def test_exit_2_for_missing_roots_of_unity():
    code, _, err = run_cli(
        "present", "--family", "GL", "--rank", "2", "--q", "11", "--l", "5",
        "--theory", "chow", "--b", "2",
    )
    assert code == 2
    assert "roots of unity" in err


def test_exit_1_for_bad_inputs():
    code, _, err = run_cli("params", "--q", "12", "--l", "5")
    assert code == 1 and "prime power" in err
    code, _, err = run_cli("params", "--q", "9", "--l", "5", "--p", "5")
    assert code == 1 and "contradicts" in err
    code, _, err = run_cli(
        "present", "--family", "SU", "--rank", "2", "--q", "3", "--l", "5",
        "--theory", "cobordism",
    )
    assert code == 1 and "unknown family" in err
    code, _, err = run_cli(
        "present", "--family", "Sp", "--rank", "2", "--q", "3", "--l", "5",
        "--theory", "chow",
    )
    assert code == 1 and "GL" in err


def test_usage_errors_exit_1(capsys):
    assert main(["present", "--family", "Sp"]) == 1
    assert "usage error" in capsys.readouterr().err
    assert main(["nonsense"]) == 1


def test_main_routes_streams(capsys):
    assert main(["params", "--q", "3", "--l", "5"]) == 0
    captured = capsys.readouterr()
    assert "r = 4" in captured.out and captured.err == ""
    assert main(["params", "--q", "25", "--l", "5"]) == 2
    captured = capsys.readouterr()
    assert captured.out == "" and "hypothesis violated" in captured.err


# -- json output and round trips ------------------------------------------------


def test_present_json_round_trip():
    code, out, _ = run_cli(
        "present", "--family", "Sp", "--rank", "4", "--q", "3", "--l", "5",
        "--theory", "cobordism", "--format", "json",
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["schema_version"] == 1
    pres = presentation_from_json_dict(payload)
    assert [g.name for g in pres.generators] == ["q_2", "q_4"]

    from chevring.arith import galois_params
    from chevring.presentations import cobordism_presentation
    from chevring.rootdata import lookup

    direct = cobordism_presentation(lookup("Sp", 4), galois_params(3, 3, 5))
    assert pres == direct


def test_present_json_with_series():
    code, out, _ = run_cli(
        "present", "--family", "GL", "--rank", "4", "--q", "3", "--l", "5",
        "--theory", "chow", "--format", "json", "--cutoff", "8",
    )
    payload = json.loads(out)
    assert payload["series"]["coefficients"] == [1, 0, 0, 0, 1, 0, 0, 0, 1]
    assert payload["series"]["grading"] == "chow"


def test_compare_json_round_trip():
    code, out, _ = run_cli("compare", "--rank", "4", "--q", "3", "--l", "5", "--format", "json")
    report = comparison_from_json_dict(json.loads(out))
    assert report.equal and report.m == 1


def test_params_json():
    code, out, _ = run_cli("params", "--q", "3", "--l", "5", "--format", "json")
    payload = json.loads(out)
    assert (payload["r"], payload["a"], payload["h"]) == (4, 1, 16)


# -- determinism ----------------------------------------------------------------


def test_identical_requests_render_identically():
    args = (
        "present", "--family", "Sp", "--rank", "6", "--q", "27", "--l", "5",
        "--theory", "cobordism", "--format", "json",
    )
    assert run_cli(*args) == run_cli(*args)
    args = ("verify", "--primes", "3", "--max-weight-len", "2", "--cutoff", "4")
    assert run_cli(*args) == run_cli(*args)


# -- verify -----------------------------------------------------------------------


def test_verify_small_sweep_passes():
    code, out, err = run_cli(
        "verify", "--primes", "3,5", "--max-weight-len", "2", "--max-weight-entry", "3",
        "--cutoff", "6", "--max-m", "2", "--sp-max-rank", "2",
    )
    assert (code, err) == (0, "")
    assert out.endswith("all clauses passed")
    assert "registry-invariants: PASS" in out


def test_verify_json_summary():
    code, out, _ = run_cli(
        "verify", "--primes", "3", "--max-weight-len", "1", "--max-weight-entry", "2",
        "--cutoff", "4", "--max-m", "1", "--sp-max-rank", "1", "--format", "json",
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["kind"] == "verification-summary"
    assert payload["passed"] is True
    assert all(c["passed"] for c in payload["clauses"])
    names = [c["name"] for c in payload["clauses"]]
    assert names == [
        "registry-invariants",
        "coinvariants-oracle-vs-closed-form",
        "invariants-oracle-vs-closed-form",
        "chern-scalar-identities",
        "restricted-chern-class",
        "sp-pattern-consistency",
    ]


def test_verify_monomial_limit_resource_error():
    code, out, err = run_cli("verify", "--monomial-limit", "10")
    assert code == 1
    assert out == ""
    assert "resource limit" in err and "degree" in err


def test_verify_env_variable_limit(monkeypatch):
    monkeypatch.setenv("CHEVRING_MONOMIAL_LIMIT", "10")
    code, _, err = run_cli("verify", "--primes", "3")
    assert code == 1 and "resource limit" in err
    monkeypatch.setenv("CHEVRING_MONOMIAL_LIMIT", "not-a-number")
    with pytest.raises(UsageError):
        parse_args(["verify"])
