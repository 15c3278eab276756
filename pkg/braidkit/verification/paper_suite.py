"""
Regression suite of identities, witnesses and classifier rows.

Each check is registered under a name and an area, runs independently of the others and
reports ``(passed, detail)``. ``run_paper_suite`` executes them on a thread pool and
returns the results in registration order; a check that raises becomes a failed result
carrying the exception type.
"""

from __future__ import annotations

import logging
import random
import time
from collections.abc import Callable, Iterable, Iterator
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from rich import box
from rich.console import Console
from rich.table import Table

from braidkit.braids.models import BraidWord, Permutation
from braidkit.braids.words import (
    a_gen,
    a_gen_cross,
    big_omega,
    concat,
    delta,
    full_twist,
    generator,
    inverse,
    is_pure,
    omega,
    permutation_of,
    power,
    random_word,
)
from braidkit.cabling.cable import cable, check_cabling_diagram
from braidkit.classifier.cross_validate import cross_validate
from braidkit.classifier.models import (
    DomainKind,
    Status,
    TargetKind,
    TargetSurface,
    TripleDescriptor,
)
from braidkit.classifier.rules import classify
from braidkit.expr.parser import parse_braid
from braidkit.garside.normal_form import are_equal, is_trivial
from braidkit.mixed.models import MixedContext
from braidkit.mixed.presentation import (
    bnn_generators,
    bnn_relations,
    epsilon_table,
    random_b2nn_word,
    random_block_word,
)
from braidkit.mixed.subgroups import epsilon, in_bnn, in_bnn2, pi_sign
from braidkit.surfaces.models import SurfacePresentation
from braidkit.surfaces.presentations import (
    enumerate_presentations,
    non_orientable_even,
    non_orientable_odd,
    orientable,
    theta_hat_delta,
)
from braidkit.surfaces.verification import evaluate, verify_hom
from braidkit.surfaces.witnesses import (
    delta_normalized_relator,
    lift_from_blocks,
    witness_even_n,
    witness_four_strand,
    witness_nonsplit,
    witness_split,
)
from braidkit.verification.models import CheckResult, SuiteConfig, SuiteReport

logger: logging.Logger = logging.getLogger(__name__)

Outcome = tuple[bool, str]
CheckFn = Callable[[SuiteConfig], Outcome]


@dataclass(frozen=True)
class RegisteredCheck:
    name: str
    category: str
    fn: CheckFn


_REGISTRY: list[RegisteredCheck] = []


def register(name: str, category: str) -> Callable[[CheckFn], CheckFn]:
    """Add a check to the suite; registration order is report order."""

    def decorator(fn: CheckFn) -> CheckFn:
        if any(c.name == name for c in _REGISTRY):
            raise ValueError(f"check {name!r} is already registered")
        _REGISTRY.append(RegisteredCheck(name=name, category=category, fn=fn))
        return fn

    return decorator


def registered_checks() -> list[RegisteredCheck]:
    return list(_REGISTRY)


def _all_hold(cases: Iterable[tuple[str, bool]], summary: str) -> Outcome:
    """Pass with ``summary`` if every case holds, else fail naming the first bad case."""
    count = 0
    for label, ok in cases:
        count += 1
        if not ok:
            return False, f"fails at {label}"
    return True, f"{summary} ({count} cases)"


def _word(strands: int, *letters: int) -> BraidWord:
    return BraidWord(strands=strands, letters=letters)


def _block_sizes(config: SuiteConfig, start: int = 1) -> range:
    return range(start, config.max_n + 1)


# ---------------------------------------------------------------------------
# Braid words and permutations
# ---------------------------------------------------------------------------


@register("half twist permutes by reversal", "braids")
def _delta_reversal(config: SuiteConfig) -> Outcome:
    def cases() -> Iterator[tuple[str, bool]]:
        for n in range(1, config.max_n + 2):
            m = 2 * n
            expected = Permutation(images=tuple(range(m, 0, -1)))
            yield f"n={n}", permutation_of(delta(m)) == expected
            ctx = MixedContext(n=n)
            yield f"n={n} coset", in_bnn2(delta(m), ctx) and not in_bnn(delta(m), ctx)

    return _all_hold(cases(), "Delta_2n reverses the strands and swaps the blocks")


@register("pure braid generators", "braids")
def _pure_generators(config: SuiteConfig) -> Outcome:
    cases = [
        ("A1,3 pure on 4 strands", is_pure(a_gen(1, 3, 4))),
        ("A1,2 on 2 strands", a_gen(1, 2, 2) == _word(2, 1, 1)),
        ("A1,3 on 3 strands", a_gen(1, 3, 3) == _word(3, 2, 1, 1, -2)),
        ("A2,4 on 5 strands", a_gen(2, 4, 5) == _word(5, 3, 2, 2, -3)),
    ]
    return _all_hold(cases, "A_{i,j} words match their defining conjugates")


@register("half and full twist words", "braids")
def _twist_words(config: SuiteConfig) -> Outcome:
    cases = [
        ("Delta_2", delta(2) == _word(2, 1)),
        ("full twist on 2 strands", full_twist(2) == _word(2, 1, 1)),
        ("Delta_4", delta(4) == _word(4, 1, 2, 3, 1, 2, 1)),
        ("full twist on 3 strands", are_equal(full_twist(3), power(delta(3), 2))),
    ]
    return _all_hold(cases, "Delta_m and Delta_m^2 have their standard words")


@register("omega swaps the blocks", "braids")
def _omega_swaps(config: SuiteConfig) -> Outcome:
    def cases() -> Iterator[tuple[str, bool]]:
        yield "omega_2 word", omega(2) == _word(4, 2, 3, 1, 2)
        for n in range(1, config.max_n + 2):
            m = 2 * n
            ctx = MixedContext(n=n)
            w = omega(n)
            shift = Permutation(images=tuple((p - 1 + n) % m + 1 for p in range(1, m + 1)))
            yield f"n={n} permutation", permutation_of(w) == shift
            yield f"n={n} coset", in_bnn2(w, ctx) and not in_bnn(w, ctx)
            yield f"n={n} sign", pi_sign(w, ctx) == 1

    return _all_hold(cases(), "omega_n is the block swap i -> i+n mod 2n")


# ---------------------------------------------------------------------------
# Word problem
# ---------------------------------------------------------------------------


@register("Artin braid relation", "garside")
def _artin_relation(config: SuiteConfig) -> Outcome:
    ok = are_equal(_word(3, 1, 2, 1), _word(3, 2, 1, 2))
    return ok, "s1 s2 s1 = s2 s1 s2"


@register("half twist conjugation flips generators", "garside")
def _delta_flip(config: SuiteConfig) -> Outcome:
    def cases() -> Iterator[tuple[str, bool]]:
        for m in range(2, 2 * config.max_n + 1):
            d = delta(m)
            for i in range(1, m):
                lhs = concat(d, generator(i, m), inverse(d))
                yield f"m={m}, i={i}", are_equal(lhs, generator(m - i, m))

    return _all_hold(cases(), "Delta_m s_i Delta_m^-1 = s_(m-i)")


@register("full twist is central", "garside")
def _full_twist_central(config: SuiteConfig) -> Outcome:
    def cases() -> Iterator[tuple[str, bool]]:
        for m in range(2, 2 * config.max_n + 1):
            f = full_twist(m)
            yield f"m={m} square", are_equal(f, power(delta(m), 2))
            for i in range(1, m):
                s = generator(i, m)
                yield f"m={m}, i={i}", are_equal(concat(f, s), concat(s, f))

    return _all_hold(cases(), "Delta_m^2 equals the full twist and commutes with every s_i")


@register("Omega identities on four strands", "garside")
def _omega_identities(config: SuiteConfig) -> Outcome:
    big, d4 = big_omega(), delta(4)
    cases = [
        ("Delta_4 Omega Delta_4^-1", are_equal(concat(d4, big, inverse(d4)), inverse(big))),
        (
            "s2 s1^2 s3^-2 s2^-1",
            are_equal(_word(4, 2, 1, 1, -3, -3, -2), power(big, -2)),
        ),
    ]
    return _all_hold(cases, "Delta_4 conjugation inverts Omega")


@register("free cancellation is trivial", "garside")
def _free_cancellation(config: SuiteConfig) -> Outcome:
    rng = random.Random(config.seed)

    def cases() -> Iterator[tuple[str, bool]]:
        for index in range(config.random_words):
            w = random_word(rng, rng.randint(2, 6), rng.randint(0, 40))
            yield f"word #{index}", is_trivial(concat(w, inverse(w)))

    return _all_hold(cases(), "w w^-1 has trivial normal form")


# ---------------------------------------------------------------------------
# Mixed braid groups
# ---------------------------------------------------------------------------


@register("cross-block generator formula", "mixed")
def _cross_block(config: SuiteConfig) -> Outcome:
    def cases() -> Iterator[tuple[str, bool]]:
        for n in _block_sizes(config, start=2):
            for i in range(1, n + 1):
                for j in range(n + 1, 2 * n + 1):
                    yield f"A{i},{j} n={n}", are_equal(a_gen_cross(i, j, n), a_gen(i, j, 2 * n))

    return _all_hold(cases(), "the cross-block word equals A_{i,j}")


@register("B_{n,n} presentation relations", "mixed")
def _presentation(config: SuiteConfig) -> Outcome:
    def cases() -> Iterator[tuple[str, bool]]:
        for n in _block_sizes(config, start=2):
            for relation in bnn_relations(MixedContext(n=n)):
                yield f"n={n} {relation.label}", are_equal(relation.lhs, relation.rhs)

    return _all_hold(cases(), "both sides of every relation agree")


@register("epsilon on generators", "mixed")
def _epsilon_generators(config: SuiteConfig) -> Outcome:
    def cases() -> Iterator[tuple[str, bool]]:
        for n in _block_sizes(config, start=2):
            ctx = MixedContext(n=n)
            table = epsilon_table(ctx)
            for label, g in bnn_generators(ctx).items():
                yield f"n={n} {label}", epsilon(g, ctx) == table[label]
            yield f"n={n} A1,{n + 1}", epsilon(a_gen(1, n + 1, 2 * n), ctx) == 1
            yield f"n={n} A1,2", epsilon(a_gen(1, 2, 2 * n), ctx) == 0

    return _all_hold(cases(), "crossing-count epsilon matches the generator table")


@register("epsilon of the full twist", "mixed")
def _epsilon_full_twist(config: SuiteConfig) -> Outcome:
    def cases() -> Iterator[tuple[str, bool]]:
        for n in range(2, config.max_n + 2):
            ctx = MixedContext(n=n)
            yield f"n={n}", epsilon(full_twist(2 * n), ctx) == n * n % 2

    return _all_hold(cases(), "epsilon(Delta^2) = n^2 mod 2")


@register("epsilon is a Delta-invariant homomorphism", "mixed")
def _epsilon_laws(config: SuiteConfig) -> Outcome:
    rng = random.Random(config.seed)

    def cases() -> Iterator[tuple[str, bool]]:
        for n in _block_sizes(config, start=2):
            ctx = MixedContext(n=n)
            d = delta(ctx.strands)
            for index in range(config.random_words):
                a = random_block_word(rng, ctx, rng.randint(0, 6))
                b = random_block_word(rng, ctx, rng.randint(0, 6))
                ea, eb = epsilon(a, ctx), epsilon(b, ctx)
                yield f"n={n} #{index} product", epsilon(concat(a, b), ctx) == (ea + eb) % 2
                flipped = epsilon(concat(d, a, inverse(d)), ctx)
                yield f"n={n} #{index} conjugate", (ea + flipped) % 2 == 0

    return _all_hold(cases(), "epsilon is additive and invariant under Delta conjugation")


# ---------------------------------------------------------------------------
# Cabling
# ---------------------------------------------------------------------------


@register("cabling preserves relations", "cabling")
def _cabled_relations(config: SuiteConfig) -> Outcome:
    def cases() -> Iterator[tuple[str, bool]]:
        for n in range(2, min(config.max_n, 3) + 1):
            relations = bnn_relations(MixedContext(n=n))
            for k in (2, 3):
                for relation in relations:
                    label = f"n={n} k={k} {relation.label}"
                    yield label, are_equal(cable(relation.lhs, k), cable(relation.rhs, k))

    return _all_hold(cases(), "B_{n,n} relations stay equal after k-cabling for k = 2, 3")


@register("cabling commutes with the block sign", "cabling")
def _cabling_diagram(config: SuiteConfig) -> Outcome:
    rng = random.Random(config.seed)
    ctx = MixedContext(n=2)

    def cases() -> Iterator[tuple[str, bool]]:
        yield "omega_2", check_cabling_diagram(omega(2), 2, ctx)
        for index in range(config.random_words):
            w = random_b2nn_word(rng, ctx, rng.randint(0, 8))
            yield f"word #{index}", check_cabling_diagram(w, 2, ctx)

    return _all_hold(cases(), "pi_sign(cable(w, 2)) = pi_sign(w)")


# ---------------------------------------------------------------------------
# Surface groups
# ---------------------------------------------------------------------------


@register("theta of the distinguished element", "surfaces")
def _theta_delta(config: SuiteConfig) -> Outcome:
    cases = [
        ("kind II", theta_hat_delta(non_orientable_even(0, {"u": 1, "v": 0})) == 1),
        ("kind III", theta_hat_delta(non_orientable_odd(1, {"c": 0, "a1": 1, "a2": 0})) == 0),
        ("kind I", theta_hat_delta(orientable(1, {"a1": 1, "a2": 0})) is None),
    ]
    return _all_hold(cases, "theta(delta) is read off the distinguished generator")


def _presentations(config: SuiteConfig, delta_trivial: bool) -> Iterator[SurfacePresentation]:
    for p in enumerate_presentations(config.max_m):
        if (theta_hat_delta(p) != 1) is delta_trivial:
            yield p


@register("lifts for theta(delta) = 0", "surfaces")
def _delta_trivial_lifts(config: SuiteConfig) -> Outcome:
    def cases() -> Iterator[tuple[str, bool]]:
        for p in _presentations(config, delta_trivial=True):
            for n in _block_sizes(config, start=2):
                label = f"{p.describe()} n={n}"
                yield f"{label} split", verify_hom(witness_split(p, n)).as_tuple() == (True, True, True)
                yield (
                    f"{label} non-split",
                    verify_hom(witness_nonsplit(p, n)).as_tuple() == (True, True, False),
                )

    return _all_hold(cases(), "omega_n and sigma_1 omega_n lift theta as split and non-split maps")


@register("four-strand non-split lifts", "surfaces")
def _four_strand_lifts(config: SuiteConfig) -> Outcome:
    def cases() -> Iterator[tuple[str, bool]]:
        for p in _presentations(config, delta_trivial=False):
            yield p.describe(), verify_hom(witness_four_strand(p)).as_tuple() == (True, True, False)

    return _all_hold(cases(), "the Omega/Delta_4 lifts are non-split homomorphisms")


@register("cabled non-split lifts", "surfaces")
def _cabled_lifts(config: SuiteConfig) -> Outcome:
    def cases() -> Iterator[tuple[str, bool]]:
        for n in range(4, config.max_n + 2, 2):
            for p in _presentations(config, delta_trivial=False):
                label = f"{p.describe()} n={n}"
                yield label, verify_hom(witness_even_n(p, n)).as_tuple() == (True, True, False)

    return _all_hold(cases(), "cabled four-strand lifts stay non-split")


@register("relator rewrite with central Delta^2", "surfaces")
def _relator_rewrite(config: SuiteConfig) -> Outcome:
    rng = random.Random(config.seed)

    def cases() -> Iterator[tuple[str, bool]]:
        for p in _presentations(config, delta_trivial=False):
            for n in _block_sizes(config, start=2):
                ctx = MixedContext(n=n)
                blocks = {g: random_block_word(rng, ctx, rng.randint(0, 3)) for g in p.generators}
                rewritten = delta_normalized_relator(p, blocks, n)
                relator = evaluate(lift_from_blocks(p, blocks, n), p.relator)
                label = f"{p.describe()} n={n}"
                yield f"{label} equal", are_equal(rewritten, relator)
                yield f"{label} epsilon", epsilon(rewritten, ctx) == n * n % 2

    return _all_hold(cases(), "the rewritten relator equals the original and has epsilon n^2")


# ---------------------------------------------------------------------------
# Classifier
# ---------------------------------------------------------------------------

_TARGETS: tuple[TargetSurface, ...] = (
    TargetSurface(kind=TargetKind.PLANE),
    TargetSurface(kind=TargetKind.SPHERE),
    TargetSurface(kind=TargetKind.PROJECTIVE_PLANE),
    TargetSurface(kind=TargetKind.ORIENTABLE_CLOSED, genus=1),
    TargetSurface(kind=TargetKind.NON_ORIENTABLE_CLOSED, genus=2),
)


@register("sphere domain rows", "classifier")
def _sphere_rows(config: SuiteConfig) -> Outcome:
    def cases() -> Iterator[tuple[str, bool]]:
        for target in _TARGETS:
            for n in (1, 2, 3):
                v = classify(TripleDescriptor(domain=DomainKind.SPHERE, target=target, n=n))
                if n == 1:
                    expected = Status.DOES_NOT_HAVE if target.kind is TargetKind.SPHERE else Status.HAS
                    ok = v.split is expected and v.nonsplit is Status.NOT_APPLICABLE
                else:
                    ok = v.split is Status.HAS and v.nonsplit is Status.HAS
                yield f"{target.describe()} n={n}", ok

    return _all_hold(cases(), "S^2 with the antipodal map")


@register("plane target rows", "classifier")
def _plane_rows(config: SuiteConfig) -> Outcome:
    plane = TargetSurface(kind=TargetKind.PLANE)

    def cases() -> Iterator[tuple[str, bool]]:
        for p in enumerate_presentations(config.max_m):
            nontrivial = theta_hat_delta(p) == 1
            for n in range(1, config.max_n + 2):
                v = classify(
                    TripleDescriptor(domain=DomainKind.SURFACE, orbit_space=p, target=plane, n=n)
                )
                split = Status.HAS if nontrivial else Status.DOES_NOT_HAVE
                if n == 1:
                    nonsplit = Status.NOT_APPLICABLE
                elif nontrivial and n % 2:
                    nonsplit = Status.HAS
                else:
                    nonsplit = Status.DOES_NOT_HAVE
                yield f"{p.describe()} n={n}", (v.split, v.nonsplit) == (split, nonsplit)

    return _all_hold(cases(), "theta(delta) and the parity of n decide the plane target")


@register("closed target rows", "classifier")
def _closed_rows(config: SuiteConfig) -> Outcome:
    torus = TargetSurface(kind=TargetKind.ORIENTABLE_CLOSED, genus=1)
    klein = non_orientable_even(0, {"u": 1, "v": 0})
    genus_three = non_orientable_odd(1, {"c": 1, "a1": 1, "a2": 0})
    torus_domain = orientable(1, {"a1": 1, "a2": 0})

    def verdict(p: SurfacePresentation, n: int) -> tuple[Status, Status]:
        v = classify(TripleDescriptor(domain=DomainKind.SURFACE, orbit_space=p, target=torus, n=n))
        return v.split, v.nonsplit

    cases = [
        ("Klein bottle n=4", verdict(klein, 4) == (Status.HAS, Status.DOES_NOT_HAVE)),
        ("genus 3 n=2", verdict(genus_three, 2) == (Status.HAS, Status.DOES_NOT_HAVE)),
        ("torus n=2", verdict(torus_domain, 2) == (Status.DOES_NOT_HAVE, Status.DOES_NOT_HAVE)),
        ("Klein bottle n=3", verdict(klein, 3) == (Status.HAS, Status.UNKNOWN)),
    ]
    return _all_hold(cases, "plane results transfer and two families have the 1-BUP")


@register("1-BUP implies the n-split BUP", "classifier")
def _monotonicity(config: SuiteConfig) -> Outcome:
    def cases() -> Iterator[tuple[str, bool]]:
        for p in enumerate_presentations(config.max_m):
            for target in _TARGETS:
                if target.kind in (TargetKind.SPHERE, TargetKind.PROJECTIVE_PLANE):
                    continue
                base = TripleDescriptor(domain=DomainKind.SURFACE, orbit_space=p, target=target, n=1)
                if classify(base).split is not Status.HAS:
                    continue
                for n in range(2, config.max_n + 2):
                    v = classify(base.model_copy(update={"n": n}))
                    yield f"{p.describe()} {target.describe()} n={n}", v.split is Status.HAS

    return _all_hold(cases(), "the first coordinate of a split map collapses a pair")


@register("cross-validation of plane verdicts", "classifier")
def _cross_validation(config: SuiteConfig) -> Outcome:
    plane = TargetSurface(kind=TargetKind.PLANE)

    def cases() -> Iterator[tuple[str, bool]]:
        for p in enumerate_presentations(config.max_m):
            for n in range(1, config.max_n + 1):
                t = TripleDescriptor(domain=DomainKind.SURFACE, orbit_space=p, target=plane, n=n)
                yield f"{p.describe()} n={n}", cross_validate(t).passed

    return _all_hold(cases(), "every decided plane verdict is backed by a computation")


# ---------------------------------------------------------------------------
# Expressions
# ---------------------------------------------------------------------------


@register("braid expressions", "expr")
def _expressions(config: SuiteConfig) -> Outcome:
    big = big_omega()
    cases = [
        ("Omega literal", parse_braid("s2 s3 s1^-1 s2^-1", 4) == big),
        ("D4", parse_braid("D4", 4) == delta(4)),
        ("(s1 s2)^3", are_equal(parse_braid("(s1 s2)^3", 3), parse_braid("F3", 3))),
        (
            "Delta_4 conjugation",
            are_equal(
                parse_braid("D4 s2 s3 s1^-1 s2^-1 D4^-1", 4),
                parse_braid("(s2 s3 s1^-1 s2^-1)^-1", 4),
            ),
        ),
        ("W2", parse_braid("W2", 4) == omega(2)),
    ]
    return _all_hold(cases, "surface syntax elaborates to the named braids")


# ---------------------------------------------------------------------------
# Runner
# ---------------------------------------------------------------------------


def _run_one(check: RegisteredCheck, config: SuiteConfig) -> CheckResult:
    t0 = time.monotonic()
    try:
        passed, detail = check.fn(config)
        exception_type = None
    except Exception as exc:  # noqa: BLE001
        # One broken check must not hide the results of the others.
        passed, detail, exception_type = False, str(exc), type(exc).__qualname__
        logger.error(
            "Check raised",
            extra={"check": check.name, "exception_type": exception_type, "error": detail},
            exc_info=True,
        )
    result = CheckResult(
        name=check.name,
        category=check.category,
        passed=passed,
        detail=detail,
        exception_type=exception_type,
        elapsed_seconds=time.monotonic() - t0,
    )
    logger.log(
        logging.INFO if passed else logging.WARNING,
        "Check finished",
        extra={"check": check.name, "passed": passed, "elapsed": result.elapsed_seconds},
    )
    return result


def run_paper_suite(
    config: SuiteConfig | None = None, checks: list[RegisteredCheck] | None = None
) -> SuiteReport:
    """
    Run every registered check.

    Args:
        config: Suite settings; read from ``BRAIDKIT_*`` environment variables when None.
        checks: Subset of ``registered_checks()`` to run; all of them when None.

    Returns:
        SuiteReport with results in registration order, whatever order they finish in.
    """
    config = config or SuiteConfig()
    selected = checks if checks is not None else registered_checks()
    t0 = time.monotonic()
    with ThreadPoolExecutor(max_workers=config.workers) as pool:
        results = list(pool.map(lambda c: _run_one(c, config), selected))
    report = SuiteReport(
        results=tuple(results),
        seed=config.seed,
        max_n=config.max_n,
        elapsed_seconds=time.monotonic() - t0,
    )
    logger.info(
        "Suite complete",
        extra={
            "total": report.total_count,
            "failed": report.failure_count,
            "elapsed": report.elapsed_seconds,
        },
    )
    return report


def render_report(report: SuiteReport, console: Console | None = None) -> None:
    """Print the report as a pass/fail table followed by a one-line summary."""
    console = console or Console()
    table = Table(
        title=f"verify-paper (seed {report.seed}, n <= {report.max_n})",
        box=box.SIMPLE,
        show_lines=False,
    )
    table.add_column("Area", style="cyan", no_wrap=True)
    table.add_column("Check")
    table.add_column("Result", no_wrap=True)
    table.add_column("Detail", overflow="fold")
    for r in report.results:
        status = "[green]PASS[/green]" if r.passed else "[red]FAIL[/red]"
        detail = f"{r.exception_type}: {r.detail}" if r.exception_type else r.detail
        table.add_row(r.category, r.name, status, detail)
    console.print(table)
    passed = report.total_count - report.failure_count
    colour = "green" if report.passed else "red"
    console.print(
        f"[bold {colour}]{passed}/{report.total_count} checks passed[/bold {colour}]"
        f" in {report.elapsed_seconds:.1f}s"
    )
