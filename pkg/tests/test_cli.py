import orjson
import pytest
from pydantic import ValidationError

from qinv.cli import EXIT_CHECK_FAILED, EXIT_OK, EXIT_USAGE, main, run
from qinv.core.models import QuasiOrder
from qinv.schemas.requests import CommandRequest
from qinv.services import QuasiService


def test_check_exit_codes(capsys: pytest.CaptureFixture[str]) -> None:
    """
    Test that check exits 0 for quasi-invariant input and 1 otherwise.

    Args:
        capsys: pytest output capture.
    """
    status = main(["check", "--p", "2", "--m-half", "1", "--poly", "x1^2 + x2^2"])
    assert status == EXIT_OK
    assert capsys.readouterr().out == "quasi_order=2, m-quasi-invariant: true\n"

    status = main(["check", "--p", "3", "--m", "1", "--poly", "x1"])
    assert status == EXIT_CHECK_FAILED
    assert capsys.readouterr().out == "quasi_order=0, m-quasi-invariant: false\n"


def test_check_symmetric_polynomial(capsys: pytest.CaptureFixture[str]) -> None:
    argv = ["check", "--m", "5", "--poly", "x1*x2*x3", "--format", "json"]
    assert main(argv) == EXIT_OK
    assert orjson.loads(capsys.readouterr().out) == {
        "m2": 10,
        "quasi_invariant": True,
        "quasi_order": "infinity",
    }


def test_counterexample_json(capsys: pytest.CaptureFixture[str]) -> None:
    """
    Test the counterexample output for m in X and outside it.

    Args:
        capsys: pytest output capture.
    """
    assert main(["counterexample", "--m", "3", "--format", "json"]) == EXIT_OK
    assert (
        capsys.readouterr().out
        == '{"a":2,"b":0,"degree":9,"k":0,"poly":"x1^9 + 2*x2^9"}\n'
    )

    assert main(["counterexample", "--m", "2", "--format", "json"]) == EXIT_OK
    assert capsys.readouterr().out == '{"none":true}\n'


def test_counterexample_plain_reports_remark(
    capsys: pytest.CaptureFixture[str],
) -> None:
    """
    Test that the plain output shows the closed-form estimate next to the search.

    Args:
        capsys: pytest output capture.
    """
    assert main(["counterexample", "--m", "1"]) == EXIT_OK
    out = capsys.readouterr().out
    assert "a=1 k=0 b=0 degree=3" in out
    assert "(agrees)" in out

    assert main(["counterexample", "--m", "2"]) == EXIT_OK
    out = capsys.readouterr().out
    assert out.startswith("no Ren-Xu counterexample")
    assert "remark" not in out


def test_dim(capsys: pytest.CaptureFixture[str]) -> None:
    assert main(["dim", "--p", "3", "--m", "1", "--degree", "3"]) == EXIT_OK
    assert capsys.readouterr().out == "dim Q_m(3, F3) in degree 3 (2m=2): 5\n"


def test_hilbert_compare(capsys: pytest.CaptureFixture[str]) -> None:
    """
    Test the closed form against the oracle from the command line.

    Args:
        capsys: pytest output capture.
    """
    argv = ["hilbert", "--p", "3", "--m", "1", "--compare", "empirical"]
    assert main(argv) == EXIT_OK
    out = capsys.readouterr().out
    assert out.startswith("closed form: 1, 1, 2, 5,")
    assert "status: MATCH" in out

    assert main(["hilbert", "--p", "2", "--m-half", "1", "--terms", "3"]) == EXIT_OK
    out = capsys.readouterr().out
    assert out.startswith("closed form: 1, 1, 4\n")
    assert "half-integer" in out


def test_hilbert_csv(capsys: pytest.CaptureFixture[str]) -> None:
    assert main(["hilbert", "--m", "0", "--terms", "3", "--format", "csv"]) == EXIT_OK
    assert capsys.readouterr().out == (
        "degree,closed_form,char0,empirical\n0,1,1,\n1,3,3,\n2,6,6,\n"
    )


def test_staircase_csv(capsys: pytest.CaptureFixture[str]) -> None:
    """
    Test the staircase table as CSV.

    Args:
        capsys: pytest output capture.
    """
    assert main(["staircase", "--max-m", "4", "--format", "csv"]) == EXIT_OK
    assert capsys.readouterr().out == (
        "m,lower,upper,in_X,phase\n"
        "0,1,2,false,closed\n"
        "1,3,6,true,flat\n"
        "2,7,8,false,closed\n"
        "3,9,12,true,flat\n"
        "4,9,18,true,flat\n"
    )


def test_staircase_verify(capsys: pytest.CaptureFixture[str]) -> None:
    assert main(["staircase", "--max-m", "2", "--verify", "--format", "csv"]) == EXIT_OK
    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == "m,lower,upper,in_X,phase,verified"
    assert all(line.endswith(",true") for line in lines[1:])


def test_classify(capsys: pytest.CaptureFixture[str]) -> None:
    """
    Test plain and JSON classification output.

    Args:
        capsys: pytest output capture.
    """
    assert main(["classify", "--p", "3", "--poly", "x1"]) == EXIT_OK
    assert capsys.readouterr().out == "triv-sign-triv (dim=3, fixed=1, sign=0)\n"

    assert main(["classify", "--p", "2", "--poly", "x1 + x2", "--format", "json"]) == 0
    assert orjson.loads(capsys.readouterr().out)["label"] == "std"


def test_classify_unclassified(capsys: pytest.CaptureFixture[str]) -> None:
    assert main(["classify", "--p", "3", "--poly", "x1^2*x2"]) == EXIT_USAGE
    assert capsys.readouterr().err.startswith("qinv classify: ")


def test_generators(capsys: pytest.CaptureFixture[str]) -> None:
    """
    Test the generator listing and its optional verification.

    Args:
        capsys: pytest output capture.
    """
    assert main(["generators", "--p", "2", "--m", "0", "--format", "json"]) == EXIT_OK
    entries = orjson.loads(capsys.readouterr().out)
    assert [e["rep"] for e in entries] == ["triv", "triv-triv", "std", "std"]
    assert [e["degree"] for e in entries] == [0, 3, 1, 2]

    assert main(["generators", "--p", "2", "--m-half", "1", "--verify"]) == EXIT_OK
    out = capsys.readouterr().out
    assert out.endswith("freely generating through degree 9\n")


def test_verify(capsys: pytest.CaptureFixture[str]) -> None:
    assert main(["verify", "--p", "3", "--m", "0", "--max-degree", "6"]) == EXIT_OK
    out = capsys.readouterr().out
    assert out.endswith("free generation verified through degree 6\n")
    assert out.count("degree ") == 8


@pytest.mark.parametrize(
    ("argv", "message"),
    [
        (["dim", "--p", "3", "--m", "1"], "--degree is required for dim"),
        (["dim", "--degree", "2"], "--m (or --m-half) is required for dim"),
        (
            ["check", "--p", "2", "--m-half", "2", "--poly", "x1"],
            "--m-half must be odd",
        ),
        (
            ["check", "--p", "3", "--m-half", "1", "--poly", "x1"],
            "--m-half needs --p 2",
        ),
        (
            ["check", "--p", "2", "--m", "1", "--m-half", "1", "--poly", "x1"],
            "mutually exclusive",
        ),
        (["check", "--m", "1"], "--poly is required for check"),
        (["counterexample", "--p", "2", "--m", "1"], "--p must be 3"),
        (["dim", "--p", "5", "--m", "1", "--degree", "1"], "--p: "),
        (["dim", "--m", "-1", "--degree", "1"], "--m: "),
    ],
)
def test_usage_errors(
    capsys: pytest.CaptureFixture[str], argv: list[str], message: str
) -> None:
    """
    Test that invalid flag combinations exit 2 with a message on stderr.

    Args:
        capsys: pytest output capture.
        argv: Command line.
        message: Expected fragment of the error message.
    """
    assert main(argv) == EXIT_USAGE
    captured = capsys.readouterr()
    assert captured.out == ""
    assert message in captured.err
    assert captured.err.startswith(f"qinv {argv[0]}: ")


def test_parse_error_reports_position(capsys: pytest.CaptureFixture[str]) -> None:
    assert main(["check", "--m", "1", "--poly", "x1 + * x2"]) == EXIT_USAGE
    assert "at position 5" in capsys.readouterr().err


def test_budget_error(capsys: pytest.CaptureFixture[str]) -> None:
    assert main(["generators", "--p", "3", "--m", "13"]) == EXIT_USAGE
    assert "max_verify_m" in capsys.readouterr().err


def test_argparse_errors() -> None:
    with pytest.raises(SystemExit) as excinfo:
        main([])
    assert excinfo.value.code == EXIT_USAGE
    with pytest.raises(SystemExit):
        main(["dim", "--format", "xml"])


def test_output_is_deterministic(capsys: pytest.CaptureFixture[str]) -> None:
    """
    Test that repeated runs give byte-identical output.

    Args:
        capsys: pytest output capture.
    """
    argv = ["generators", "--p", "3", "--m", "1", "--format", "json"]
    outputs = []
    for _ in range(2):
        assert main(argv) == EXIT_OK
        outputs.append(capsys.readouterr().out)
    assert outputs[0] == outputs[1]


def test_run_with_injected_service(service: QuasiService) -> None:
    """
    Test run() against a caller-supplied service stack.

    Args:
        service: Service over a fresh repository.
    """
    request = CommandRequest(command="dim", p=3, m=1, degree=3, format="json")
    output, status = run(request, service)
    assert status == EXIT_OK
    assert output == '{"degree":3,"dimension":5,"m2":2,"p":3}\n'
    assert len(service.oracle.repo) == 0


def test_command_request_order() -> None:
    """
    Test the order derived from --m and --m-half.
    """
    assert CommandRequest(command="dim", m=2, degree=0).order == QuasiOrder(4, 3)
    half = CommandRequest(command="dim", p=2, m_half=3, degree=0)
    assert half.twice_m == 3
    assert half.order == QuasiOrder(3, 2)
    assert CommandRequest(command="staircase").max_m == 12
    with pytest.raises(ValidationError):
        CommandRequest(command="dim", m=1, degree=0, format="xml")
