#!/usr/bin/env python3
"""
braidkit Command Line Interface

Exposes the braid word problem, the mixed braid subgroups, cabling, the Borsuk–Ulam
classifier and the regression suite. Text output is one result per line; ``--json``
prints one record ``{command, inputs, result, provenance}`` instead.

Usage:
    braidkit nf "s1 s2 s1 s2^-1" --strands 3
    braidkit eq "D4 s2 s3 s1^-1 s2^-1 D4^-1" "(s2 s3 s1^-1 s2^-1)^-1" --strands 4
    braidkit bup classify --domain surface --kind II --m 0 --theta u=1,v=0 --target plane --n 2
    braidkit verify-paper --max-n 2

Exit codes: 0 success or true, 1 false, 2 usage error, 3 internal invariant violation.
"""

import argparse
import logging
import sys
from collections.abc import Callable, Sequence
from typing import Any

from pydantic import BaseModel, Field, ValidationError

from braidkit.braids.models import BraidWord
from braidkit.braids.words import is_pure, permutation_of
from braidkit.cabling.cable import cable
from braidkit.classifier.cross_validate import cross_validate
from braidkit.classifier.exceptions import InvalidDescriptorError, WitnessFailureError
from braidkit.classifier.models import BupVerdict, DomainKind, TripleDescriptor
from braidkit.classifier.rules import classify, parse_target
from braidkit.expr.exceptions import BraidSyntaxError
from braidkit.expr.parser import parse_braid
from braidkit.garside.normal_form import are_equal, normal_form
from braidkit.helpers import BraidkitError, create_user_friendly_error
from braidkit.mixed.exceptions import EpsilonParityError
from braidkit.mixed.models import MixedContext
from braidkit.mixed.subgroups import epsilon, pi_sign
from braidkit.surfaces.models import SurfaceKind, SurfacePresentation
from braidkit.verification.models import SuiteConfig
from braidkit.verification.paper_suite import render_report, run_paper_suite

logger: logging.Logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FALSE = 1
EXIT_USAGE = 2
EXIT_INTERNAL = 3

_INTERNAL_ERRORS = (WitnessFailureError, EpsilonParityError)


class CommandRecord(BaseModel):
    """Machine-readable output of one command (``--json``)."""

    command: str
    inputs: dict[str, Any] = Field(default_factory=dict)
    result: Any = None
    provenance: dict[str, str] | None = None


class _Outcome(BaseModel):
    exit_code: int = EXIT_OK
    lines: list[str] = Field(default_factory=list)
    record: CommandRecord


# ---------------------------------------------------------------------------
# Argument helpers
# ---------------------------------------------------------------------------


def _strands(args: argparse.Namespace, default: int | None = None) -> int:
    strands = args.strands if args.strands is not None else default
    if strands is None:
        raise InvalidDescriptorError(
            "strands", "this command needs --strands", suggestions=["Pass --strands M"]
        )
    return strands


def _word(args: argparse.Namespace, text: str, default_strands: int | None = None) -> BraidWord:
    return parse_braid(text, _strands(args, default_strands))


def _parse_theta(text: str) -> dict[str, int]:
    theta: dict[str, int] = {}
    for item in filter(None, (part.strip() for part in text.split(","))):
        name, sep, value = item.partition("=")
        if not sep or value.strip() not in ("0", "1"):
            raise InvalidDescriptorError(
                "theta", f"expected g=0 or g=1, got {item!r}", suggestions=["Example: --theta u=1,v=0"]
            )
        theta[name.strip()] = int(value)
    return theta


def _descriptor(args: argparse.Namespace) -> TripleDescriptor:
    domain = DomainKind(args.domain)
    target = parse_target(args.target)
    orbit_space: SurfacePresentation | None = None
    if args.kind is not None or args.theta is not None:
        if domain is DomainKind.SPHERE:
            raise InvalidDescriptorError(
                "orbit_space", "the sphere domain takes no --kind, --m or --theta"
            )
        if args.kind is None or args.theta is None:
            raise InvalidDescriptorError("orbit_space", "--kind and --theta go together")
        try:
            orbit_space = SurfacePresentation(
                kind=SurfaceKind(args.kind), m=args.m, theta=_parse_theta(args.theta)
            )
        except ValidationError as exc:
            reason = "; ".join(str(e["msg"]) for e in exc.errors())
            raise InvalidDescriptorError("orbit_space", reason) from None
    return TripleDescriptor(domain=domain, orbit_space=orbit_space, target=target, n=args.n)


def _verdict_lines(verdict: BupVerdict) -> list[str]:
    return [
        f"split: {verdict.split.value} ({verdict.split_provenance or 'open'})",
        f"nonsplit: {verdict.nonsplit.value} ({verdict.nonsplit_provenance or 'open'})",
    ]


def _verdict_provenance(verdict: BupVerdict) -> dict[str, str]:
    return {"split": verdict.split_provenance, "nonsplit": verdict.nonsplit_provenance}


def _predicate(command: str, inputs: dict[str, Any], value: bool) -> _Outcome:
    return _Outcome(
        exit_code=EXIT_OK if value else EXIT_FALSE,
        lines=[str(value).lower()],
        record=CommandRecord(command=command, inputs=inputs, result=value),
    )


# ---------------------------------------------------------------------------
# Commands
# ---------------------------------------------------------------------------


def cmd_nf(args: argparse.Namespace) -> _Outcome:
    """Print the normal form of a braid."""
    nf = normal_form(_word(args, args.word))
    return _Outcome(
        lines=[str(nf)],
        record=CommandRecord(
            command="nf",
            inputs={"word": args.word, "strands": nf.strands},
            result={
                "inf": nf.inf,
                "factors": [list(f.permutation.images) for f in nf.factors],
                "canonical_length": nf.canonical_length,
            },
        ),
    )


def cmd_eq(args: argparse.Namespace) -> _Outcome:
    """Decide whether two words are the same braid."""
    equal = are_equal(_word(args, args.left), _word(args, args.right))
    inputs = {"left": args.left, "right": args.right, "strands": args.strands}
    return _predicate("eq", inputs, equal)


def cmd_perm(args: argparse.Namespace) -> _Outcome:
    perm = permutation_of(_word(args, args.word))
    return _Outcome(
        lines=[perm.one_line()],
        record=CommandRecord(
            command="perm",
            inputs={"word": args.word, "strands": perm.size},
            result=list(perm.images),
        ),
    )


def cmd_pure(args: argparse.Namespace) -> _Outcome:
    value = is_pure(_word(args, args.word))
    return _predicate("pure", {"word": args.word, "strands": args.strands}, value)


def cmd_eps(args: argparse.Namespace) -> _Outcome:
    """Print ε of a block-preserving braid on 2n strands."""
    ctx = MixedContext(n=args.n)
    value = epsilon(_word(args, args.word, ctx.strands), ctx)
    return _Outcome(
        lines=[str(value)],
        record=CommandRecord(command="eps", inputs={"word": args.word, "n": args.n}, result=value),
    )


def cmd_pi(args: argparse.Namespace) -> _Outcome:
    """Print the block sign of a braid in B²_{n,n}."""
    ctx = MixedContext(n=args.n)
    value = pi_sign(_word(args, args.word, ctx.strands), ctx)
    return _Outcome(
        lines=[str(value)],
        record=CommandRecord(command="pi", inputs={"word": args.word, "n": args.n}, result=value),
    )


def cmd_cable(args: argparse.Namespace) -> _Outcome:
    cabled = cable(_word(args, args.word), args.k)
    return _Outcome(
        lines=[str(cabled)],
        record=CommandRecord(
            command="cable",
            inputs={"word": args.word, "strands": args.strands, "k": args.k},
            result={"strands": cabled.strands, "letters": list(cabled.letters)},
        ),
    )


def _descriptor_inputs(args: argparse.Namespace) -> dict[str, Any]:
    return {
        "domain": args.domain,
        "kind": args.kind,
        "m": args.m,
        "theta": args.theta,
        "target": args.target,
        "n": args.n,
    }


def cmd_bup_classify(args: argparse.Namespace) -> _Outcome:
    """Print the split and non-split verdicts of a triple."""
    verdict = classify(_descriptor(args))
    return _Outcome(
        lines=_verdict_lines(verdict),
        record=CommandRecord(
            command="bup classify",
            inputs=_descriptor_inputs(args),
            result={"split": verdict.split.value, "nonsplit": verdict.nonsplit.value},
            provenance=_verdict_provenance(verdict),
        ),
    )


def cmd_bup_cross_validate(args: argparse.Namespace) -> _Outcome:
    """Classify a plane-target triple and back the verdict with computations."""
    report = cross_validate(_descriptor(args))
    lines = _verdict_lines(report.verdict)
    for check in report.checks:
        status = "pass" if check.passed else "fail"
        lines.append(
            f"check {check.name}: {status} (expected {check.expected}, observed {check.observed})"
        )
    return _Outcome(
        exit_code=EXIT_OK if report.passed else EXIT_FALSE,
        lines=lines,
        record=CommandRecord(
            command="bup cross-validate",
            inputs=_descriptor_inputs(args),
            result={
                "split": report.verdict.split.value,
                "nonsplit": report.verdict.nonsplit.value,
                "checks": [check.model_dump() for check in report.checks],
                "passed": report.passed,
            },
            provenance=_verdict_provenance(report.verdict),
        ),
    )


def cmd_verify_paper(args: argparse.Namespace) -> _Outcome:
    """Run the regression suite; the table is printed here, not returned as lines."""
    overrides: dict[str, Any] = {}
    if args.max_n is not None:
        overrides["max_n"] = args.max_n
    if args.seed is not None:
        overrides["seed"] = args.seed
    config = SuiteConfig(**overrides)
    report = run_paper_suite(config)
    if not args.json:
        render_report(report)
    return _Outcome(
        exit_code=EXIT_OK if report.passed else EXIT_FALSE,
        record=CommandRecord(
            command="verify-paper",
            inputs={"max_n": config.max_n, "seed": config.seed},
            result={
                "passed": report.passed,
                "total": report.total_count,
                "failed": report.failure_count,
                "checks": [r.model_dump() for r in report.results],
            },
        ),
    )


def cmd_help() -> None:
    """Show help information."""
    print("braidkit: braid groups, mixed braid groups and the Borsuk–Ulam property")
    print("\nCommands:")
    print("   braidkit nf WORD --strands M            Left-greedy normal form")
    print("   braidkit eq A B --strands M             Exit 0 iff A and B are the same braid")
    print("   braidkit perm WORD --strands M          Permutation in one-line notation")
    print("   braidkit pure WORD --strands M          Exit 0 iff the braid is pure")
    print("   braidkit eps WORD --n N                 epsilon of a block-preserving braid")
    print("   braidkit pi WORD --n N                  Block sign of a braid in B2_{n,n}")
    print("   braidkit cable WORD --strands M --k K   Replace every strand by K parallel strands")
    print("   braidkit bup classify ...               Borsuk–Ulam verdicts of a triple")
    print("   braidkit bup cross-validate ...         Verdicts backed by explicit lifts")
    print("   braidkit verify-paper                   Regression suite")
    print("   braidkit examples                       Show example commands")
    print("\nWords: s1 s2^-1 (generators), D4 (half twist), F4 (full twist), W2 (omega_2),")
    print("A1,3 (pure generator), parentheses and integer powers: (s1 s2)^3")


def cmd_examples() -> None:
    """Show example commands."""
    print("braidkit CLI examples:\n")

    print("Word problem:")
    print('   braidkit nf "s1 s2 s1" --strands 3')
    print('   braidkit eq "s1 s2 s1" "s2 s1 s2" --strands 3')
    print('   braidkit eq "D4 s2 s3 s1^-1 s2^-1 D4^-1" "(s2 s3 s1^-1 s2^-1)^-1" --strands 4')

    print("\nMixed braid groups:")
    print('   braidkit perm "W2" --strands 4')
    print('   braidkit pi "W3" --n 3')
    print('   braidkit eps "F6" --n 3')
    print('   braidkit cable "W2" --strands 4 --k 2')

    print("\nBorsuk–Ulam property:")
    print("   braidkit bup classify --domain sphere --target rp2 --n 2")
    print(
        "   braidkit bup classify --domain surface --kind II --m 0 --theta u=1,v=0"
        " --target plane --n 2"
    )
    print(
        "   braidkit bup cross-validate --domain surface --kind I --m 1 --theta a1=1,a2=0"
        " --target plane --n 3"
    )

    print("\nRegression suite:")
    print("   braidkit verify-paper --max-n 2 --seed 7")


# ---------------------------------------------------------------------------
# Parser
# ---------------------------------------------------------------------------


def _common_options() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--strands", type=int, default=None, help="Strand count of every word")
    common.add_argument("--json", action="store_true", help="Print one JSON record")
    common.add_argument("-v", "--verbose", action="store_true", help="Debug logging on stderr")
    return common


def _add_descriptor_options(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--domain", choices=[d.value for d in DomainKind], required=True)
    parser.add_argument(
        "--kind", choices=[k.value for k in SurfaceKind], default=None, help="Orbit-space kind"
    )
    parser.add_argument("--m", type=int, default=0, help="Handle count of the orbit space")
    parser.add_argument("--theta", default=None, help="Values of theta, e.g. u=1,v=0")
    parser.add_argument(
        "--target", required=True, help="plane, sphere, rp2, or:G (genus G) or nonor:G"
    )
    parser.add_argument("--n", type=int, required=True, help="Number of values")


def build_parser() -> argparse.ArgumentParser:
    common = _common_options()
    parser = argparse.ArgumentParser(
        prog="braidkit",
        description="braidkit - braid groups and the Borsuk–Ulam property of n-valued maps",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
Examples:
  braidkit nf "s1 s2 s1 s2^-1" --strands 3
  braidkit eq "s1 s2 s1" "s2 s1 s2" --strands 3
  braidkit bup classify --domain sphere --target sphere --n 1
  braidkit verify-paper
        """,
    )
    subparsers = parser.add_subparsers(dest="command", help="Available commands")

    nf_parser = subparsers.add_parser("nf", parents=[common], help="Normal form of a braid")
    nf_parser.add_argument("word")
    nf_parser.set_defaults(handler=cmd_nf)

    eq_parser = subparsers.add_parser("eq", parents=[common], help="Equality of two braids")
    eq_parser.add_argument("left")
    eq_parser.add_argument("right")
    eq_parser.set_defaults(handler=cmd_eq)

    perm_parser = subparsers.add_parser("perm", parents=[common], help="Permutation of a braid")
    perm_parser.add_argument("word")
    perm_parser.set_defaults(handler=cmd_perm)

    pure_parser = subparsers.add_parser("pure", parents=[common], help="Is the braid pure?")
    pure_parser.add_argument("word")
    pure_parser.set_defaults(handler=cmd_pure)

    eps_parser = subparsers.add_parser("eps", parents=[common], help="epsilon on B_{n,n}")
    eps_parser.add_argument("word")
    eps_parser.add_argument("--n", type=int, required=True, help="Block size")
    eps_parser.set_defaults(handler=cmd_eps)

    pi_parser = subparsers.add_parser("pi", parents=[common], help="Block sign on B2_{n,n}")
    pi_parser.add_argument("word")
    pi_parser.add_argument("--n", type=int, required=True, help="Block size")
    pi_parser.set_defaults(handler=cmd_pi)

    cable_parser = subparsers.add_parser("cable", parents=[common], help="k-cabling of a braid")
    cable_parser.add_argument("word")
    cable_parser.add_argument("--k", type=int, required=True, help="Cabling multiplicity")
    cable_parser.set_defaults(handler=cmd_cable)

    bup_parser = subparsers.add_parser("bup", help="Borsuk–Ulam property of n-valued maps")
    bup_commands = bup_parser.add_subparsers(dest="bup_command", required=True)
    classify_parser = bup_commands.add_parser("classify", parents=[common], help="Verdicts")
    _add_descriptor_options(classify_parser)
    classify_parser.set_defaults(handler=cmd_bup_classify)
    cross_parser = bup_commands.add_parser(
        "cross-validate", parents=[common], help="Verdicts backed by explicit lifts"
    )
    _add_descriptor_options(cross_parser)
    cross_parser.set_defaults(handler=cmd_bup_cross_validate)

    suite_parser = subparsers.add_parser(
        "verify-paper", parents=[common], help="Run the regression suite"
    )
    suite_parser.add_argument("--max-n", type=int, default=None, help="Largest block size (1-4)")
    suite_parser.add_argument("--seed", type=int, default=None, help="Seed of randomized checks")
    suite_parser.set_defaults(handler=cmd_verify_paper)

    subparsers.add_parser("help", help="Show detailed help")
    subparsers.add_parser("examples", help="Show example commands")
    return parser


def _report_error(error: Exception, args: argparse.Namespace) -> None:
    print(create_user_friendly_error(error, context=f"running {args.command}"), file=sys.stderr)
    if isinstance(error, BraidSyntaxError):
        print(error.caret_line(), file=sys.stderr)


def _run(handler: Callable[[argparse.Namespace], _Outcome], args: argparse.Namespace) -> int:
    try:
        outcome = handler(args)
    except _INTERNAL_ERRORS as exc:
        logger.error("Invariant violated", extra={"command": args.command}, exc_info=True)
        _report_error(exc, args)
        return EXIT_INTERNAL
    except (BraidkitError, ValidationError, ValueError, IndexError) as exc:
        _report_error(exc, args)
        return EXIT_USAGE
    except Exception as exc:  # noqa: BLE001
        logger.error("Unexpected error", extra={"command": args.command}, exc_info=True)
        print(f"unexpected error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL

    if args.json:
        print(outcome.record.model_dump_json())
    else:
        for line in outcome.lines:
            print(line)
    return outcome.exit_code


def main(argv: Sequence[str] | None = None) -> int:
    """Main CLI entry point; returns the process exit code."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE

    logging.basicConfig(
        level=logging.DEBUG if getattr(args, "verbose", False) else logging.WARNING,
        stream=sys.stderr,
        format="%(levelname)s %(name)s: %(message)s",
    )

    if not args.command:
        parser.print_help()
        return EXIT_USAGE
    if args.command == "help":
        cmd_help()
        return EXIT_OK
    if args.command == "examples":
        cmd_examples()
        return EXIT_OK

    try:
        return _run(args.handler, args)
    except KeyboardInterrupt:
        print("\nCancelled by user", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
