"""End-to-end tests of the carries-lab command line harness."""

import json

import pytest

from carrieslab import cli
from carrieslab.verify import SuiteCase, SuiteReport


def run(capsys, *argv):
    code = cli.main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_matrix_json_classical(capsys):
    code, out, err = run(capsys, "matrix", "--sign", "+", "--b", "2", "--n", "2", "--p", "1")
    assert code == 0 and err == ""
    assert json.loads(out) == [["3/4", "1/4"], ["1/4", "3/4"]]


def test_matrix_csv_has_dimension_header(capsys):
    code, out, _ = run(capsys, "--format", "csv",
                       "matrix", "--sign", "+", "--b", "2", "--n", "2", "--p", "1")
    assert code == 0
    assert out.splitlines() == ["dim,2", "3/4,1/4", "1/4,3/4"]


def test_matrix_accepts_consistent_digit_offset(capsys):
    code, out, _ = run(capsys, "matrix", "--sign", "+", "--b", "3", "--n", "2",
                       "--p", "2", "--d", "-1")
    assert code == 0
    rows = json.loads(out)
    assert len(rows) == 3  # p > 1, so n + 1 states


def test_matrix_rejects_offset_p_mismatch(capsys):
    code, _, err = run(capsys, "matrix", "--sign", "-", "--b", "2", "--n", "2",
                       "--p", "1", "--d", "-1")
    assert code == 2 and "carries-lab:" in err


def test_eigen_check_and_json_layout(capsys):
    code, out, _ = run(capsys, "eigen", "--sign", "-", "--b", "8", "--n", "3",
                       "--p", "3", "--check")
    assert code == 0 and out.strip() == "R·L=I: ok, P=RDL: ok"
    code, out, _ = run(capsys, "eigen", "--sign", "-", "--b", "8", "--n", "3", "--p", "3")
    obj = json.loads(out)
    assert obj["schema"] == 1
    assert obj["eigenvalues"] == ["1", "-1/8", "1/64", "-1/512"]
    assert obj["left"]["dim"] == obj["right"]["dim"] == 4
    assert len(obj["right"]["rows"]) == 4


def test_moments_stationary_closed_forms(capsys):
    code, out, _ = run(capsys, "moments", "--sign", "-", "--b", "8", "--n", "3",
                       "--p", "3", "--stationary", "--r", "1")
    assert code == 0
    obj = json.loads(out)
    assert obj["start"] == "stationary" and obj["r"] == 1
    assert (obj["mean"], obj["variance"], obj["cov"]) == ("5/3", "1/3", "-1/24")


def test_moments_conditional_closed_forms(capsys):
    code, out, _ = run(capsys, "moments", "--sign", "+", "--b", "2", "--n", "2", "--p", "1")
    obj = json.loads(out)
    assert code == 0 and (obj["start"], obj["r"], obj["s"]) == (0, 1, 0)
    assert (obj["mean"], obj["variance"], obj["cov"]) == ("1/4", "3/16", "0")


def test_moments_one_summand_uses_oracle(capsys):
    # n = 1 has no closed second moments; the answer must still be exact.
    code, out, _ = run(capsys, "moments", "--sign", "+", "--b", "3", "--n", "1",
                       "--p", "2", "--r", "1", "--s", "1")
    obj = json.loads(out)
    assert code == 0 and obj["variance"] == "2/9" and obj["cov"] == "2/27"


def test_moments_rejects_bad_start_state(capsys):
    code, _, err = run(capsys, "moments", "--sign", "+", "--b", "2", "--n", "2",
                       "--p", "1", "--i", "5")
    assert code == 2 and "start state" in err


def test_float_rendering_is_fixed_point(capsys):
    code, out, _ = run(capsys, "--float", "--digits", "6",
                       "matrix", "--sign", "+", "--b", "2", "--n", "2", "--p", "1")
    assert code == 0
    assert json.loads(out)[0] == ["0.750000", "0.250000"]
    code, out, _ = run(capsys, "--float", "--digits", "4",
                       "moments", "--sign", "-", "--b", "8", "--n", "3", "--p", "3",
                       "--stationary", "--r", "1")
    assert json.loads(out)["cov"] == "-0.0417"  # -1/24 rounded exactly


def test_out_writes_file_and_keeps_stdout_quiet(capsys, tmp_path):
    target = tmp_path / "matrix.json"
    code, out, _ = run(capsys, "--out", str(target),
                       "matrix", "--sign", "+", "--b", "2", "--n", "2", "--p", "1")
    assert code == 0 and out == ""
    assert json.loads(target.read_text()) == [["3/4", "1/4"], ["1/4", "3/4"]]


def test_simulate_seed_precedence_and_stability(capsys):
    argv = ("simulate", "--sign", "+", "--b", "3", "--n", "2", "--p", "1", "--N", "4")
    _, global_seed, _ = run(capsys, "--seed", "5", *argv)
    _, sub_seed, _ = run(capsys, *argv, "--seed", "5")
    _, again, _ = run(capsys, *argv, "--seed", "5")
    _, other, _ = run(capsys, *argv, "--seed", "6")
    assert global_seed == sub_seed == again != other
    obj = json.loads(sub_seed)
    assert obj["seed"] == 5 and len(obj["kappas"]) == 5 and len(obj["remainders"]) == 4
    _, default, _ = run(capsys, *argv)
    assert json.loads(default)["seed"] == 1729


def test_simulate_csv_layout(capsys):
    code, out, _ = run(capsys, "--format", "csv",
                       "simulate", "--sign", "-", "--b", "2", "--n", "3", "--p", "1",
                       "--N", "2", "--seed", "9")
    lines = out.splitlines()
    assert code == 0 and lines[0] == "step,kappa,remainder,digits"
    assert len(lines) == 3 and lines[1].startswith("1,")


def test_shuffle_reports_descents(capsys):
    code, out, _ = run(capsys, "shuffle", "--b", "3", "--n", "4", "--p", "2",
                       "--N", "3", "--seed", "11")
    obj = json.loads(out)
    assert code == 0 and len(obj["descents"]) == len(obj["elements"]) == 3
    assert all(len(word) == 4 for word in obj["words"])


def test_shuffle_rejects_wrong_congruence(capsys):
    code, _, err = run(capsys, "shuffle", "--sign", "+", "--b", "3", "--n", "2",
                       "--p", "3", "--N", "1")
    assert code == 2 and "mod p" in err


def test_digits_round_trip(capsys):
    code, out, _ = run(capsys, "digits", "--x", "9", "--sign", "-", "--b", "2")
    obj = json.loads(out)
    assert code == 0 and obj["value"] == obj["x"] == 9
    code, out, _ = run(capsys, "digits", "--x", "100", "--sign", "+", "--b", "10", "--d", "-5")
    assert code == 0 and json.loads(out)["value"] == 100


def test_verify_fast_suite_json_report(capsys):
    code, out, err = run(capsys, "verify", "examples-golden")
    assert code == 0 and err == ""
    obj = json.loads(out)
    assert obj["schema"] == 1 and obj["suite"] == "examples-golden" and obj["passed"]
    keys = [case["key"] for case in obj["cases"]]
    assert keys == sorted(keys) and all(case["ok"] for case in obj["cases"])


def test_verify_csv_report(capsys):
    code, out, _ = run(capsys, "--format", "csv", "verify", "symmetry")
    lines = out.splitlines()
    assert code == 0 and lines[0] == "case,ok,detail" and lines[-1] == "passed,1,"


def test_verify_bounds_flags(capsys):
    code, out, _ = run(capsys, "verify", "transition", "--b", "3", "--n", "2")
    obj = json.loads(out)
    assert code == 0 and obj["passed"]
    assert all(" b=2 " in c["key"] or " b=3 " in c["key"] or "b=" not in c["key"]
               for c in obj["cases"])


def test_verify_single_case_override(capsys):
    code, out, _ = run(capsys, "verify", "bijection-plus",
                       "--b", "3", "--n", "2", "--p", "1", "--N", "2")
    obj = json.loads(out)
    assert code == 0 and obj["passed"] and len(obj["cases"]) == 1


def test_verify_partial_case_flags_rejected(capsys):
    code, _, err = run(capsys, "verify", "bijection-plus", "--b", "3")
    assert code == 2 and "needs all of" in err


def test_verify_unused_flag_rejected(capsys):
    code, _, err = run(capsys, "verify", "eigen", "--samples", "10")
    assert code == 2 and "--samples" in err


def test_verify_failure_exits_one_with_reproduce_line(capsys, monkeypatch):
    def stub():
        return SuiteReport("transition", "stub grid",
                           [SuiteCase("forced", False, "boom")])

    monkeypatch.setitem(cli.SUITES, "transition", stub)
    code, out, err = run(capsys, "verify", "transition")
    assert code == 1
    assert "reproduce: carries-lab verify transition" in err
    obj = json.loads(out)
    assert obj["passed"] is False and obj["cases"][0]["detail"] == "boom"


def test_argparse_rejections_exit_two(capsys):
    for argv in (["verify", "not-a-suite"],
                 ["matrix", "--sign", "*", "--b", "2", "--n", "2", "--p", "1"],
                 ["--seed", "-3", "verify", "eigen"],
                 ["--digits", "0", "matrix", "--sign", "+", "--b", "2", "--n", "2", "--p", "1"],
                 []):
        with pytest.raises(SystemExit) as info:
            cli.main(argv)
        assert info.value.code == 2
        capsys.readouterr()


def test_invalid_parameters_exit_two(capsys):
    code, _, err = run(capsys, "matrix", "--sign", "+", "--b", "2", "--n", "2", "--p", "5")
    assert code == 2 and err.startswith("carries-lab:")
