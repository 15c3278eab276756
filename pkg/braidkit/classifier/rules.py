"""
Decision table for the n-split and n-non-split Borsuk–Ulam properties.

Each rule carries a provenance string naming the argument that decides it. The table
is complete for the sphere domain and for the plane target; closed targets reached
from a surface domain are only partially decided and otherwise return ``UNKNOWN``.
"""

import logging

from braidkit.classifier.exceptions import InvalidDescriptorError
from braidkit.classifier.models import (
    BupVerdict,
    DomainKind,
    Status,
    TargetKind,
    TargetSurface,
    TripleDescriptor,
)
from braidkit.surfaces.models import SurfaceKind, SurfacePresentation
from braidkit.surfaces.presentations import theta_hat_delta

logger: logging.Logger = logging.getLogger(__name__)

SPHERE_IDENTITY = (
    "sphere/identity: the identity map of S^2 separates every antipodal pair"
)
SPHERE_ONE_VALUED = (
    "sphere/one-valued: every map from the antipodal sphere into the plane or a closed "
    "surface other than S^2 collapses an antipodal pair"
)
SPHERE_SPLIT_COORDINATE = (
    "sphere/split-coordinate: every n-valued map on the simply connected sphere is split, "
    "and its first coordinate already collapses an antipodal pair"
)
SPHERE_ORDER_TWO = (
    "sphere/order-two: a lift would send the generator of pi_1(RP^2) to a block-swapping "
    "braid of order two, but the full twist is the only element of order two and it "
    "preserves the blocks"
)
ONE_VALUED_NONSPLIT = "one-valued: every 1-valued map is split"
PLANE_DELTA_TRIVIAL_SPLIT = (
    "plane/delta-trivial: g -> omega_n^i(g) lifts theta and sends ker theta into the pure braids"
)
PLANE_DELTA_TRIVIAL_NONSPLIT = (
    "plane/delta-trivial: g -> (sigma_1 omega_n)^i(g) lifts theta and sends the square of a "
    "theta = 1 generator outside the pure braids"
)
PLANE_DELTA_TRIVIAL_ONE_VALUED = (
    "plane/delta-trivial: an orientable orbit space or theta(delta) = 0 admits a map into "
    "the plane without antipodal coincidence"
)
PLANE_ONE_BUP = (
    "plane/delta-nontrivial: theta(delta) = 1 gives the 1-BUP, and the 1-BUP gives the "
    "n-split BUP for every n"
)
PLANE_EVEN_NONSPLIT = (
    "plane/even-n: the four-strand lift built from Omega and Delta_4, cabled n/2 times, is a "
    "non-split lift of theta"
)
PLANE_ODD_NONSPLIT = (
    "plane/odd-n: epsilon of the relator image of any lift equals epsilon(Delta^2) = n^2 = 1 "
    "mod 2, so no lift exists"
)
CLOSED_TRANSFER = (
    "closed-target/transfer: embedding the plane in Y carries every coincidence-free "
    "n-valued map into the plane over to Y"
)
CLOSED_ONE_BUP = (
    "closed-target/one-bup: Klein bottle with theta(u) = 1, or genus 3 with theta(c) = 1 and "
    "theta(a_i) = 1 for some i in {1, 2}, into an orientable Y other than S^2 has the 1-BUP, "
    "hence the n-split BUP"
)
CLOSED_OPEN = "closed-target/open: not decided by the available results (work in progress)"


def parse_target(text: str) -> TargetSurface:
    """
    Parse ``plane``, ``sphere``, ``rp2``, ``or:G`` or ``nonor:G``.

    Raises:
        InvalidDescriptorError: On any other spelling or an impossible genus.
    """
    name, _, genus_text = text.strip().lower().partition(":")
    try:
        kind = TargetKind(name)
    except ValueError:
        raise InvalidDescriptorError(
            "target",
            f"unknown target {text!r}",
            suggestions=["Use one of: plane, sphere, rp2, or:G, nonor:G"],
        ) from None
    genus: int | None = None
    if genus_text:
        if not genus_text.isdigit():
            raise InvalidDescriptorError("target", f"genus must be a non-negative integer in {text!r}")
        genus = int(genus_text)
    target = TargetSurface(kind=kind, genus=genus)
    _validate_target(target)
    return target


def validate_descriptor(t: TripleDescriptor) -> None:
    """
    Check that a descriptor names an actual triple.

    Raises:
        InvalidDescriptorError: On a non-positive n, an impossible genus, a missing or
            superfluous orbit space, a non-surjective θ, or a surface domain whose
            double cover would be the sphere.
    """
    if t.n < 1:
        raise InvalidDescriptorError("n", f"n must be a positive integer, got {t.n}")
    _validate_target(t.target)
    if t.domain is DomainKind.SPHERE:
        if t.orbit_space is not None:
            raise InvalidDescriptorError(
                "orbit_space",
                "the sphere domain carries the antipodal map; no orbit-space presentation is taken",
            )
        return
    p = t.orbit_space
    if p is None:
        raise InvalidDescriptorError(
            "orbit_space",
            "a surface domain needs the presentation of its orbit space",
            suggestions=["Pass --kind, --m and --theta"],
        )
    if not p.is_surjective:
        raise InvalidDescriptorError(
            "theta",
            "theta must be surjective: it classifies the double covering X -> X/tau",
        )
    if p.kind is SurfaceKind.NON_ORIENTABLE_ODD and p.m == 0:
        raise InvalidDescriptorError(
            "orbit_space",
            "the double cover of the projective plane is the sphere",
            suggestions=["Use --domain sphere for the antipodal sphere"],
        )


def _validate_target(target: TargetSurface) -> None:
    kind, genus = target.kind, target.genus
    if kind is TargetKind.ORIENTABLE_CLOSED:
        if genus is None or genus < 1:
            raise InvalidDescriptorError(
                "target", f"or:G needs genus G >= 1, got {genus}", suggestions=["Use 'sphere' for genus 0"]
            )
    elif kind is TargetKind.NON_ORIENTABLE_CLOSED:
        if genus is None or genus < 2:
            raise InvalidDescriptorError(
                "target", f"nonor:G needs genus G >= 2, got {genus}", suggestions=["Use 'rp2' for genus 1"]
            )
    elif genus is not None:
        raise InvalidDescriptorError("target", f"target {kind.value} takes no genus")


def _has_one_bup_closed(p: SurfacePresentation, target: TargetSurface) -> bool:
    if target.kind is not TargetKind.ORIENTABLE_CLOSED:
        return False
    theta = p.theta
    if p.kind is SurfaceKind.NON_ORIENTABLE_EVEN and p.m == 0:
        return theta["u"] == 1
    if p.kind is SurfaceKind.NON_ORIENTABLE_ODD and p.m == 1:
        return theta["c"] == 1 and (theta["a1"] == 1 or theta["a2"] == 1)
    return False


def _sphere_domain(t: TripleDescriptor) -> BupVerdict:
    if t.n == 1:
        if t.target.kind is TargetKind.SPHERE:
            return BupVerdict(
                split=Status.DOES_NOT_HAVE,
                nonsplit=Status.NOT_APPLICABLE,
                split_provenance=SPHERE_IDENTITY,
                nonsplit_provenance=ONE_VALUED_NONSPLIT,
            )
        return BupVerdict(
            split=Status.HAS,
            nonsplit=Status.NOT_APPLICABLE,
            split_provenance=SPHERE_ONE_VALUED,
            nonsplit_provenance=ONE_VALUED_NONSPLIT,
        )
    reason = SPHERE_ORDER_TWO if t.target.kind is TargetKind.SPHERE else SPHERE_SPLIT_COORDINATE
    return BupVerdict(
        split=Status.HAS, nonsplit=Status.HAS, split_provenance=reason, nonsplit_provenance=reason
    )


def _plane_target(p: SurfacePresentation, n: int) -> BupVerdict:
    delta_value = theta_hat_delta(p)
    if delta_value != 1:
        if n == 1:
            return BupVerdict(
                split=Status.DOES_NOT_HAVE,
                nonsplit=Status.NOT_APPLICABLE,
                split_provenance=PLANE_DELTA_TRIVIAL_ONE_VALUED,
                nonsplit_provenance=ONE_VALUED_NONSPLIT,
            )
        return BupVerdict(
            split=Status.DOES_NOT_HAVE,
            nonsplit=Status.DOES_NOT_HAVE,
            split_provenance=PLANE_DELTA_TRIVIAL_SPLIT,
            nonsplit_provenance=PLANE_DELTA_TRIVIAL_NONSPLIT,
        )
    if n % 2 == 0:
        return BupVerdict(
            split=Status.HAS,
            nonsplit=Status.DOES_NOT_HAVE,
            split_provenance=PLANE_ONE_BUP,
            nonsplit_provenance=PLANE_EVEN_NONSPLIT,
        )
    if n == 1:
        return BupVerdict(
            split=Status.HAS,
            nonsplit=Status.NOT_APPLICABLE,
            split_provenance=PLANE_ONE_BUP,
            nonsplit_provenance=ONE_VALUED_NONSPLIT,
        )
    return BupVerdict(
        split=Status.HAS,
        nonsplit=Status.HAS,
        split_provenance=PLANE_ONE_BUP,
        nonsplit_provenance=PLANE_ODD_NONSPLIT,
    )


def _closed_target(p: SurfacePresentation, target: TargetSurface, n: int) -> BupVerdict:
    plane = _plane_target(p, n)
    if theta_hat_delta(p) != 1:
        return BupVerdict(
            split=Status.DOES_NOT_HAVE,
            nonsplit=plane.nonsplit,
            split_provenance=CLOSED_TRANSFER,
            nonsplit_provenance=CLOSED_TRANSFER
            if plane.nonsplit is Status.DOES_NOT_HAVE
            else ONE_VALUED_NONSPLIT,
        )

    if _has_one_bup_closed(p, target):
        split, split_provenance = Status.HAS, CLOSED_ONE_BUP
    else:
        split, split_provenance = Status.UNKNOWN, CLOSED_OPEN

    if n == 1:
        nonsplit, nonsplit_provenance = Status.NOT_APPLICABLE, ONE_VALUED_NONSPLIT
    elif n % 2 == 0:
        nonsplit, nonsplit_provenance = Status.DOES_NOT_HAVE, CLOSED_TRANSFER
    else:
        nonsplit, nonsplit_provenance = Status.UNKNOWN, CLOSED_OPEN

    return BupVerdict(
        split=split,
        nonsplit=nonsplit,
        split_provenance=split_provenance,
        nonsplit_provenance=nonsplit_provenance,
    )


def classify(t: TripleDescriptor) -> BupVerdict:
    """
    Decide the n-split and n-non-split Borsuk–Ulam properties of a triple.

    Sphere domain: for n = 1 the property holds iff Y ≠ S²; for n ≥ 2 both hold for
    every target. Surface domain into the plane: the verdict is driven by θ(δ) and the
    parity of n and is never ``UNKNOWN``. Surface domain into a closed Y: the plane
    verdicts that say "does not have" transfer; the split property holds for two
    explicit orbit-space families into orientable Y; everything else is ``UNKNOWN``.

    Raises:
        InvalidDescriptorError: If ``t`` does not name an actual triple.

    Example:
        >>> klein = non_orientable_even(0, {"u": 1, "v": 0})
        >>> t = TripleDescriptor(domain="surface", orbit_space=klein,
        ...                      target=TargetSurface(kind="plane"), n=2)
        >>> classify(t).split, classify(t).nonsplit  # HAS, DOES_NOT_HAVE
    """
    validate_descriptor(t)
    if t.domain is DomainKind.SPHERE:
        verdict = _sphere_domain(t)
    else:
        assert t.orbit_space is not None
        if t.target.kind is TargetKind.PLANE:
            verdict = _plane_target(t.orbit_space, t.n)
        else:
            verdict = _closed_target(t.orbit_space, t.target, t.n)

    if Status.UNKNOWN in (verdict.split, verdict.nonsplit):
        logger.info(
            "Verdict not decided for closed target",
            extra={"target": t.target.describe(), "n": t.n},
        )
    return verdict
