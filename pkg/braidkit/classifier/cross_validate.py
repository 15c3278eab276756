"""
Back plane-target verdicts with explicit braid computations.

A "does not have" verdict is backed by building the lift of θ that the verdict relies
on and running ``verify_hom``. A "has" verdict is backed by the epsilon ingredients
that rule lifts out: ε(Δ²) = n² mod 2 and ε(b) = ε(ΔbΔ⁻¹) on the generators of
B_{n,n}, plus ε(Δ²) = 1 when n is odd.
"""

import logging

from braidkit.braids.words import concat, delta, full_twist, inverse
from braidkit.classifier.exceptions import InvalidDescriptorError, WitnessFailureError
from braidkit.classifier.models import (
    CrossValidationReport,
    DomainKind,
    Status,
    TargetKind,
    TripleDescriptor,
    WitnessCheck,
)
from braidkit.classifier.rules import classify
from braidkit.mixed.models import MixedContext
from braidkit.mixed.presentation import bnn_generators
from braidkit.mixed.subgroups import epsilon
from braidkit.surfaces.models import GroupHom, SurfacePresentation
from braidkit.surfaces.presentations import theta_hat_delta
from braidkit.surfaces.verification import verify_hom
from braidkit.surfaces.witnesses import witness_even_n, witness_nonsplit, witness_split

logger: logging.Logger = logging.getLogger(__name__)

MAX_N = 4
MAX_M = 2


def _fmt(values: tuple[bool, bool, bool]) -> str:
    return "(" + ", ".join(str(v).lower() for v in values) + ")"


def _witness_check(name: str, h: GroupHom, expected: tuple[bool, bool, bool]) -> WitnessCheck:
    observed = verify_hom(h).as_tuple()
    return WitnessCheck(
        name=name, expected=_fmt(expected), observed=_fmt(observed), passed=observed == expected
    )


def _epsilon_checks(n: int, require_odd: bool) -> list[WitnessCheck]:
    ctx = MixedContext(n=n)
    d = delta(ctx.strands)
    checks: list[WitnessCheck] = []

    twist = epsilon(full_twist(ctx.strands), ctx)
    checks.append(
        WitnessCheck(
            name="epsilon(Delta^2) = n^2 mod 2",
            expected=str(n * n % 2),
            observed=str(twist),
            passed=twist == n * n % 2,
        )
    )

    mismatched = [
        label
        for label, g in bnn_generators(ctx).items()
        if epsilon(g, ctx) != epsilon(concat(d, g, inverse(d)), ctx)
    ]
    checks.append(
        WitnessCheck(
            name="epsilon(b) = epsilon(Delta b Delta^-1) on generators",
            expected="no mismatch",
            observed=", ".join(mismatched) or "no mismatch",
            passed=not mismatched,
        )
    )

    if require_odd:
        checks.append(
            WitnessCheck(
                name="epsilon(Delta^2) = 1 for odd n",
                expected="1",
                observed=str(twist),
                passed=twist == 1,
            )
        )
    return checks


def _require_in_range(t: TripleDescriptor, p: SurfacePresentation | None) -> None:
    if t.target.kind is not TargetKind.PLANE:
        raise InvalidDescriptorError("target", "cross-validation only covers the plane target")
    if t.n > MAX_N:
        raise InvalidDescriptorError("n", f"cross-validation covers n <= {MAX_N}, got {t.n}")
    if p is not None and p.m > MAX_M:
        raise InvalidDescriptorError("orbit_space", f"cross-validation covers m <= {MAX_M}, got {p.m}")


def cross_validate(t: TripleDescriptor) -> CrossValidationReport:
    """
    Classify ``t`` and back every decided plane-target verdict with a computation.

    The sphere domain yields a report without checks: its verdicts rest on facts about
    braid groups of the sphere, which are not computed here.

    Raises:
        InvalidDescriptorError: If the target is not the plane, n > 4 or m > 2.
        WitnessFailureError: If a construction disagrees with the verdict.
    """
    verdict = classify(t)
    _require_in_range(t, t.orbit_space)
    if t.domain is DomainKind.SPHERE or t.orbit_space is None:
        return CrossValidationReport(descriptor=t, verdict=verdict)

    p, n = t.orbit_space, t.n
    delta_trivial = theta_hat_delta(p) != 1
    checks: list[WitnessCheck] = []

    if verdict.split is Status.DOES_NOT_HAVE:
        checks.append(_witness_check("split witness", witness_split(p, n), (True, True, True)))

    if verdict.nonsplit is Status.DOES_NOT_HAVE:
        if delta_trivial:
            h = witness_nonsplit(p, n)
            checks.append(_witness_check("non-split witness", h, (True, True, False)))
        else:
            h = witness_even_n(p, n)
            checks.append(_witness_check("cabled four-strand witness", h, (True, True, False)))

    if not delta_trivial and Status.HAS in (verdict.split, verdict.nonsplit):
        checks.extend(_epsilon_checks(n, require_odd=verdict.nonsplit is Status.HAS))

    report = CrossValidationReport(descriptor=t, verdict=verdict, checks=tuple(checks))
    for check in checks:
        if not check.passed:
            logger.error(
                "Witness check failed",
                extra={"check": check.name, "expected": check.expected, "observed": check.observed},
            )
            raise WitnessFailureError(check.name, check.expected, check.observed)
    logger.debug("Cross-validation passed", extra={"n": n, "checks": len(checks)})
    return report
