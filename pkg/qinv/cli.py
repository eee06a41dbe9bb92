"""
Command-line entry point ``qinv``.

Results go to stdout in the requested format; progress and diagnostics go
to stderr through logging. Exit status is 0 on success, 1 when a
mathematical check fails and 2 on usage errors.
"""

import argparse
import logging
import sys
from collections.abc import Sequence

from pydantic import ValidationError

from qinv.core.config import settings
from qinv.core.exceptions import QinvError
from qinv.core.log_config import setup_logging
from qinv.schemas.renxu import StaircaseRow
from qinv.schemas.requests import CommandRequest
from qinv.services.quasi_service import QuasiService
from qinv.utils.rendering import render

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_USAGE = 2


def _add_common(parser: argparse.ArgumentParser, poly: bool = False) -> None:
    parser.add_argument("--p", type=int, default=3, help="characteristic, 2 or 3")
    parser.add_argument("--m", type=int, help="integer quasi-invariance order m")
    parser.add_argument(
        "--m-half",
        type=int,
        dest="m_half",
        help="2m for half-integer m (odd, --p 2 only)",
    )
    parser.add_argument(
        "--format",
        choices=("plain", "json", "csv"),
        default=settings.output.default_format,
    )
    if poly:
        parser.add_argument("--poly", help='polynomial text, e.g. "x1^2*x2 - 2*x3"')


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qinv",
        description="Quasi-invariant polynomials in three variables over F2, F3 and Q.",
    )
    parser.add_argument(
        "-v", "--verbose", action="store_true", help="log progress to stderr"
    )
    commands = parser.add_subparsers(dest="command", required=True)

    dim = commands.add_parser("dim", help="dimension of one graded component")
    _add_common(dim)
    dim.add_argument("--degree", type=int)

    hilbert = commands.add_parser("hilbert", help="closed-form Hilbert series")
    _add_common(hilbert)
    hilbert.add_argument("--terms", type=int)
    hilbert.add_argument("--compare", choices=("none", "empirical"), default="none")

    check = commands.add_parser("check", help="quasi-invariance order of a polynomial")
    _add_common(check, poly=True)

    generators = commands.add_parser(
        "generators", help="free generators over the symmetric polynomials"
    )
    _add_common(generators)
    generators.add_argument("--verify", action="store_true")
    generators.add_argument("--max-degree", type=int, dest="max_degree")

    counterexample = commands.add_parser(
        "counterexample", help="minimal Ren-Xu counterexample over F3"
    )
    _add_common(counterexample)

    staircase = commands.add_parser(
        "staircase", help="generator degrees over F3 for m = 0..max-m"
    )
    _add_common(staircase)
    staircase.add_argument("--max-m", type=int, dest="max_m", default=12)
    staircase.add_argument("--verify", action="store_true")

    classify = commands.add_parser(
        "classify", help="S3-module generated by a polynomial"
    )
    _add_common(classify, poly=True)

    verify = commands.add_parser(
        "verify", help="check free generation against the oracle"
    )
    _add_common(verify)
    verify.add_argument("--max-degree", type=int, dest="max_degree")
    return parser


def _request_from_args(args: argparse.Namespace) -> CommandRequest:
    fields = {
        key: value
        for key, value in vars(args).items()
        if key != "verbose" and value is not None
    }
    return CommandRequest(**fields)


def run(
    request: CommandRequest, service: QuasiService | None = None
) -> tuple[str, int]:
    """
    Execute a validated request.

    Args:
        request: The command and its flags.
        service: Service stack to use; a fresh one by default.

    Returns:
        tuple[str, int]: Rendered output and exit status (0 or 1).

    Raises:
        QinvError: Budget overruns, parse errors and other request-level
                   problems; the caller maps them to status 2.
    """
    service = service or QuasiService()
    fmt = request.format
    command = request.command

    if command == "dim":
        assert request.degree is not None
        return render(command, service.dim(request.order, request.degree), fmt), EXIT_OK

    if command == "hilbert":
        read = service.hilbert_series(
            request.order, request.terms, empirical=request.compare == "empirical"
        )
        status = EXIT_CHECK_FAILED if read.match is False else EXIT_OK
        return render(command, read, fmt), status

    if command == "check":
        assert request.poly is not None
        checked = service.check(request.order, request.poly)
        status = EXIT_OK if checked.quasi_invariant else EXIT_CHECK_FAILED
        return render(command, checked, fmt), status

    if command == "counterexample":
        result = service.counterexample(request.order.integer_m())
        output = render(
            command, result.read, fmt, remark=result.remark, agrees=result.agrees
        )
        return output, EXIT_OK

    if command == "generators":
        gens = service.generator_set(request.order)
        status = EXIT_OK
        if request.verify:
            gens, report = service.generators.verified(gens, request.max_degree)
            if not report.success:
                status = EXIT_CHECK_FAILED
        output = render(
            command,
            service.generator_reads(gens),
            fmt,
            verified_to=gens.verified_to,
        )
        return output, status

    if command == "staircase":
        rows = staircase_table(request.max_m, request.verify, service)
        failed = any(row.verified is False for row in rows)
        status = EXIT_CHECK_FAILED if failed else EXIT_OK
        return render(command, rows, fmt), status

    if command == "classify":
        assert request.poly is not None
        return render(command, service.classify(request.p, request.poly), fmt), EXIT_OK

    report = service.verify(request.order, request.max_degree)
    status = EXIT_OK if report.success else EXIT_CHECK_FAILED
    return render(command, report, fmt), status


def staircase_table(
    max_m: int, verify: bool = False, service: QuasiService | None = None
) -> list[StaircaseRow]:
    """Rows (m, lower, upper, in_X, phase) for m = 0..max_m, optionally verified."""
    return (service or QuasiService()).staircase(max_m, verify)


def _usage_message(error: ValidationError) -> str:
    lines = []
    for item in error.errors():
        message = str(item["msg"]).removeprefix("Value error, ")
        if item["loc"]:
            flag = "--" + str(item["loc"][0]).replace("_", "-")
            message = f"{flag}: {message}"
        lines.append(message)
    return "\n".join(lines)


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    setup_logging(settings.logging, verbose=args.verbose)

    try:
        request = _request_from_args(args)
    except ValidationError as e:
        print(f"qinv {args.command}: {_usage_message(e)}", file=sys.stderr)
        return EXIT_USAGE

    try:
        output, status = run(request)
    except QinvError as e:
        logger.debug("request failed", exc_info=True)
        print(f"qinv {args.command}: {e}", file=sys.stderr)
        return EXIT_USAGE

    sys.stdout.write(output)
    return status


if __name__ == "__main__":
    sys.exit(main())
