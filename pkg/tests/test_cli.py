import json

import pytest

from main import main, select_log_level
from monomial_stci.algebra.parsing import parse_polynomial
from monomial_stci.curves.construction import curve_variables
from monomial_stci.data.reports import RunReport
from monomial_stci.oracle.fields import build_field
from monomial_stci.oracle.varieties import evaluate

QUARTIC = ["--delta", "4", "--eps1", "3", "--eps2", "1"]
SMALL_VALLA = ["--m", "2", "--n", "1", "--p", "1", "--r", "1", "--s", "1", "--u", "1"]


def run(capsys, *argv):
    code = main(list(argv) + ["--quiet"])
    out, err = capsys.readouterr()
    return code, out, err


def run_json(capsys, *argv):
    code, out, err = run(capsys, *argv, "--format", "json")
    return code, json.loads(out) if out else None, err


class TestDerive:
    @pytest.mark.parametrize(
        "argv, expected",
        [
            (QUARTIC, 0),
            (["--delta", "70", "--eps1", "66", "--eps2", "15"], 0),
            (["--delta", "4", "--eps1", "5", "--eps2", "1"], 2),
        ],
    )
    def test_exit_codes(self, capsys, argv, expected):
        code, _, _ = run(capsys, "derive", *argv)
        assert code == expected

    def test_input_error_is_one_line(self, capsys):
        code, out, err = run(capsys, "derive", "--delta", "4", "--eps1", "5", "--eps2", "1")
        assert code == 2
        assert out == ""
        assert err.startswith("error: ")

    def test_text_report(self, capsys):
        code, out, _ = run(capsys, "derive", *QUARTIC)
        assert code == 0
        assert out.startswith("derive: pass")
        assert "Curve parameters" in out and "Checks" in out

    def test_reduce_gcd(self, capsys):
        code, report, _ = run_json(capsys, "derive", "--delta", "8", "--eps1", "6", "--eps2", "2", "--reduce-gcd")
        assert code == 0
        assert report["params"]["delta"] == 4
        assert report["params"]["common_divisor"] == 2


class TestBinomials:
    def test_json_keys(self, capsys):
        code, report, _ = run_json(capsys, "binomials", *QUARTIC)
        assert code == 0
        assert list(report) == list(RunReport.model_fields)
        system = report["system"]
        assert system["case"] == "I"
        assert system["matrix"]["rendered"] == "x1^3,x0*x3,x2;x0^2,x1,1"
        assert system["M2"]["rendered"] == "x0*x3 - x1*x2"
        assert [m["rendered"] for m in system["members"]] == ["x1^3 - x0^2*x2", "x0*x3 - x1*x2", "x2^3 - x1*x3^2"]

    def test_binomial_variant_and_names(self, capsys):
        code, report, _ = run_json(
            capsys, "binomials", *QUARTIC, "--variant", "binomials", "--variables", "w,x,y,z"
        )
        assert code == 0
        assert report["system"]["f"]["rendered"] == "x^4 - w^3*z"

    def test_affine(self, capsys):
        code, report, _ = run_json(capsys, "binomials", "--affine", "1", "2", "3", "--variant", "binomials")
        assert code == 0
        assert report["system"]["affine"] is True
        assert all("x0" not in m["rendered"] for m in report["system"]["members"])

    def test_wrong_variable_count(self, capsys):
        code, _, err = run(capsys, "binomials", *QUARTIC, "--variables", "a,b,c")
        assert code == 2
        assert "error:" in err


class TestVerify:
    def test_quartic_with_oracle(self, capsys):
        code, report, _ = run_json(capsys, "verify", *QUARTIC, "--prime", "5", "13")
        assert code == 0
        assert report["status"] == "pass"
        assert {o["subject"] for o in report["oracle"]} == {"V(f,f1,f2) = C", "V(M1,M2,f2) = C", "V(M1,M2) = V(J)"}
        assert all(o["status"] == "equal" for o in report["oracle"])
        assert len(report["oracle"]) == 6

    def test_skip_oracle(self, capsys):
        code, report, _ = run_json(capsys, "verify", *QUARTIC, "--skip-oracle")
        assert code == 0
        assert report["oracle"] == []

    def test_extra_polynomial_fails(self, capsys):
        code, report, _ = run_json(capsys, "verify", *QUARTIC, "--skip-oracle", "--extra-poly", "x1-x0")
        assert code == 1
        assert report["status"] == "failure"
        failed = [c for c in report["checks"] if not c["passed"]]
        assert len(failed) == 1
        assert failed[0]["witnesses"] == ["-xi^4", "xi^3*omega"]

    def test_inconclusive_without_escalation(self, capsys):
        argv = ["--delta", "6", "--eps1", "4", "--eps2", "2", "--prime", "5", "--max-ext", "1", "--no-escalate"]
        code, report, _ = run_json(capsys, "verify", *argv)
        assert code == 3
        assert report["status"] == "inconclusive"

    def test_witnesses_satisfy_the_printed_equations(self, capsys):
        argv = ["--delta", "6", "--eps1", "2", "--eps2", "4", "--prime", "5", "--max-ext", "1", "--no-escalate"]
        code, report, _ = run_json(capsys, "verify", *argv)
        assert code == 3
        system = report["system"]
        printed = {
            "V(f,f1,f2) = C": [system[key]["rendered"] for key in ("f", "f1", "f2")],
            "V(M1,M2,f2) = C": [system[key]["rendered"] for key in ("M1", "M2", "f2")],
        }
        field = build_field(5)
        witnesses = 0
        for oracle in report["oracle"]:
            if oracle["subject"] not in printed:
                continue
            polys = [parse_polynomial(g, curve_variables()) for g in printed[oracle["subject"]]]
            for witness in oracle["comparison"]["left_minus_right"]:
                point = tuple(int(c) for c in witness.strip("()").split(":"))
                assert all(evaluate(g, point, field) == 0 for g in polys), (oracle["subject"], witness)
                witnesses += 1
        assert witnesses

    def test_non_prime(self, capsys):
        code, _, err = run(capsys, "verify", *QUARTIC, "--prime", "9")
        assert code == 2
        assert "not prime: 9" in err

    def test_affine_any_order(self, capsys):
        code, _, _ = run(capsys, "verify", "--affine", "3", "1", "2", "--prime", "5")
        assert code == 0


class TestProp1:
    def test_two_one_matrix(self, capsys):
        code, report, _ = run_json(capsys, "prop1", "--matrix", "a*d,b,c;b,a,d", "--oracle", "--prime", "5", "7")
        assert code == 0
        holding = [r for r in report["reductions"] if r["holds"]]
        assert [r["column"] for r in holding] == [2]
        assert holding[0]["generators"] == ["D12 = a^2*d - b^2", "D23 = b*d - a*c"]
        assert [o["status"] for o in report["oracle"]] == ["equal", "equal"]

    def test_single_column(self, capsys):
        code, report, _ = run_json(capsys, "prop1", "--matrix", "a^3,b,c;b*c,d,a^2", "--column", "3")
        assert code == 0
        assert len(report["reductions"]) == 1
        assert report["reductions"][0]["generators"] == ["D13 = a^5 - b*c^2", "D23 = a^2*b - c*d"]

    def test_bad_matrix(self, capsys):
        code, _, _ = run(capsys, "prop1", "--matrix", "a,b;c")
        assert code == 2

    def test_missing_matrix_is_usage_error(self, capsys):
        assert main(["prop1"]) == 2
        capsys.readouterr()


class TestClassify:
    def test_cyclic_matrix(self, capsys):
        code, report, _ = run_json(capsys, "classify", "--matrix", "a,b,c;b,c,a")
        assert code == 0
        assert report["forms"][0]["form"] == "i"
        assert all(c["passed"] for c in report["checks"])

    def test_not_simple(self, capsys):
        code, _, err = run(capsys, "classify", "--matrix", "a*b,b,c;b,a,d")
        assert code == 2
        assert err.startswith("error: ")


class TestValla:
    def test_small_pair(self, capsys):
        code, report, _ = run_json(capsys, "valla", *SMALL_VALLA, "--check-curve", "3", "5", "4", "--prime", "5", "7")
        assert code == 0
        assert report["polynomials"]["f"]["rendered"] == "a^2*c - b^2"
        assert report["polynomials"]["g"]["rendered"] == "a^4 - 2*a*b*c + c^3"
        assert len(report["checks"]) == 5
        assert [o["status"] for o in report["oracle"]] == ["equal", "equal"]

    def test_wrong_curve_fails(self, capsys):
        code, _, _ = run(capsys, "valla", *SMALL_VALLA, "--check-curve", "1", "2", "3")
        assert code == 1

    def test_invalid_exponent(self, capsys):
        code, _, _ = run(capsys, "valla", "--m", "0", "--n", "1", "--p", "1", "--r", "1", "--s", "1", "--u", "1")
        assert code == 2


class TestLogLevel:
    def test_flags_win(self, monkeypatch):
        monkeypatch.setenv("STCI_LOG_LEVEL", "INFO")
        assert select_log_level(True, False) == "DEBUG"
        assert select_log_level(False, True) == "ERROR"
        assert select_log_level(False, False) == "INFO"

    def test_environment_profile(self, monkeypatch):
        monkeypatch.delenv("STCI_LOG_LEVEL", raising=False)
        monkeypatch.setenv("STCI_ENV", "development")
        assert select_log_level(False, False) == "INFO"


@pytest.mark.parametrize(
    "argv",
    [
        ["binomials", *QUARTIC],
        ["verify", *QUARTIC, "--prime", "5"],
        ["prop1", "--matrix", "a*d,b,c;b,a,d", "--oracle", "--prime", "5"],
        ["classify", "--matrix", "a,b,c;b,c,a"],
        ["valla", *SMALL_VALLA, "--check-curve", "3", "5", "4", "--prime", "5"],
    ],
)
def test_json_round_trip(capsys, argv):
    _, out, _ = run(capsys, *argv, "--format", "json")
    report = RunReport.model_validate_json(out)
    assert report.model_dump_json(indent=2) == out.rstrip("\n")
