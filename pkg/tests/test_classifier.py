"""
Tests for braidkit.classifier — the Borsuk–Ulam decision table.

Test categories:
  - Target parsing: every family, genus bounds, unknown names
  - Descriptor validation: n, orbit space presence, surjective θ, projective plane
  - Sphere domain: n = 1 by target, n >= 2 for every target
  - Plane target: θ(δ) = 0 and θ(δ) = 1 by parity of n
  - Closed targets: transferred verdicts, the two 1-BUP families, open cases
  - Verdict model: provenance required, has_bup
"""

import pytest
from pydantic import ValidationError

from braidkit.classifier import (
    BupVerdict,
    DomainKind,
    InvalidDescriptorError,
    Status,
    TargetKind,
    TargetSurface,
    TripleDescriptor,
    classify,
    parse_target,
    validate_descriptor,
)
from braidkit.surfaces import (
    SurfacePresentation,
    enumerate_presentations,
    non_orientable_even,
    non_orientable_odd,
    orientable,
)

HAS = Status.HAS
DNH = Status.DOES_NOT_HAVE
UNKNOWN = Status.UNKNOWN
NA = Status.NOT_APPLICABLE

KLEIN_DELTA = non_orientable_even(0, {"u": 1, "v": 0})
KLEIN_PLAIN = non_orientable_even(0, {"u": 0, "v": 1})
TORUS = orientable(1, {"a1": 1, "a2": 0})
GENUS3_ONE_BUP = non_orientable_odd(1, {"c": 1, "a1": 1, "a2": 0})
GENUS3_TRIVIAL_HANDLES = non_orientable_odd(1, {"c": 1, "a1": 0, "a2": 0})


def _surface(p: SurfacePresentation, target: str, n: int) -> TripleDescriptor:
    return TripleDescriptor(
        domain=DomainKind.SURFACE, orbit_space=p, target=parse_target(target), n=n
    )


def _sphere(target: str, n: int) -> TripleDescriptor:
    return TripleDescriptor(domain=DomainKind.SPHERE, target=parse_target(target), n=n)


def _statuses(t: TripleDescriptor) -> tuple[Status, Status]:
    verdict = classify(t)
    return verdict.split, verdict.nonsplit


# ---------------------------------------------------------------------------
# Target parsing
# ---------------------------------------------------------------------------


class TestParseTarget:
    @pytest.mark.parametrize(
        "text, kind, genus",
        [
            ("plane", TargetKind.PLANE, None),
            ("sphere", TargetKind.SPHERE, None),
            ("rp2", TargetKind.PROJECTIVE_PLANE, None),
            ("or:1", TargetKind.ORIENTABLE_CLOSED, 1),
            ("or:3", TargetKind.ORIENTABLE_CLOSED, 3),
            ("nonor:2", TargetKind.NON_ORIENTABLE_CLOSED, 2),
            (" Plane ", TargetKind.PLANE, None),
        ],
    )
    def test_valid(self, text: str, kind: TargetKind, genus: int | None) -> None:
        target = parse_target(text)
        assert target.kind is kind
        assert target.genus == genus

    @pytest.mark.parametrize("text", ["torus", "or:0", "or", "nonor:1", "plane:2", "or:x", "or:-1"])
    def test_invalid(self, text: str) -> None:
        with pytest.raises(InvalidDescriptorError) as exc_info:
            parse_target(text)
        assert exc_info.value.field == "target"

    def test_describe(self) -> None:
        assert parse_target("or:2").describe() == "or:2"
        assert parse_target("rp2").describe() == "rp2"

    def test_orientability(self) -> None:
        assert parse_target("or:2").is_orientable
        assert not parse_target("nonor:3").is_orientable
        assert not parse_target("plane").is_closed


# ---------------------------------------------------------------------------
# Descriptor validation
# ---------------------------------------------------------------------------


class TestValidateDescriptor:
    def test_n_must_be_positive(self) -> None:
        with pytest.raises(InvalidDescriptorError) as exc_info:
            validate_descriptor(_sphere("plane", 0))
        assert exc_info.value.field == "n"

    def test_sphere_takes_no_orbit_space(self) -> None:
        t = TripleDescriptor(
            domain=DomainKind.SPHERE, orbit_space=TORUS, target=parse_target("plane"), n=1
        )
        with pytest.raises(InvalidDescriptorError) as exc_info:
            classify(t)
        assert exc_info.value.field == "orbit_space"

    def test_surface_needs_orbit_space(self) -> None:
        t = TripleDescriptor(domain=DomainKind.SURFACE, target=parse_target("plane"), n=2)
        with pytest.raises(InvalidDescriptorError):
            validate_descriptor(t)

    def test_theta_must_be_surjective(self) -> None:
        with pytest.raises(InvalidDescriptorError) as exc_info:
            classify(_surface(orientable(1, {"a1": 0, "a2": 0}), "plane", 2))
        assert exc_info.value.field == "theta"

    def test_projective_plane_orbit_space_rejected(self) -> None:
        with pytest.raises(InvalidDescriptorError) as exc_info:
            classify(_surface(non_orientable_odd(0, {"c": 1}), "plane", 2))
        assert exc_info.value.suggestions

    def test_target_genus_is_revalidated(self) -> None:
        t = TripleDescriptor(
            domain=DomainKind.SPHERE,
            target=TargetSurface(kind=TargetKind.ORIENTABLE_CLOSED, genus=0),
            n=2,
        )
        with pytest.raises(InvalidDescriptorError):
            classify(t)


# ---------------------------------------------------------------------------
# Sphere domain
# ---------------------------------------------------------------------------


class TestSphereDomain:
    def test_identity_map_into_the_sphere(self) -> None:
        assert _statuses(_sphere("sphere", 1)) == (DNH, NA)

    @pytest.mark.parametrize("target", ["plane", "rp2", "or:1", "or:4", "nonor:2", "nonor:5"])
    def test_one_valued_into_other_targets(self, target: str) -> None:
        assert _statuses(_sphere(target, 1)) == (HAS, NA)

    @pytest.mark.parametrize("target", ["plane", "sphere", "rp2", "or:2", "nonor:3"])
    @pytest.mark.parametrize("n", [2, 3, 7])
    def test_multivalued_always_has(self, target: str, n: int) -> None:
        verdict = classify(_sphere(target, n))
        assert (verdict.split, verdict.nonsplit) == (HAS, HAS)
        assert verdict.has_bup

    def test_sphere_target_cites_order_two(self) -> None:
        verdict = classify(_sphere("sphere", 2))
        assert verdict.split_provenance.startswith("sphere/order-two")


# ---------------------------------------------------------------------------
# Plane target
# ---------------------------------------------------------------------------


class TestPlaneTarget:
    @pytest.mark.parametrize("p", [TORUS, KLEIN_PLAIN, non_orientable_odd(1, {"c": 0, "a1": 1, "a2": 0})])
    def test_delta_trivial_one_valued(self, p: SurfacePresentation) -> None:
        assert _statuses(_surface(p, "plane", 1)) == (DNH, NA)

    @pytest.mark.parametrize("p", [TORUS, KLEIN_PLAIN])
    @pytest.mark.parametrize("n", [2, 3, 4, 5])
    def test_delta_trivial_multivalued(self, p: SurfacePresentation, n: int) -> None:
        assert _statuses(_surface(p, "plane", n)) == (DNH, DNH)

    def test_delta_nontrivial_one_valued(self) -> None:
        verdict = classify(_surface(KLEIN_DELTA, "plane", 1))
        assert (verdict.split, verdict.nonsplit) == (HAS, NA)
        assert verdict.has_bup

    @pytest.mark.parametrize("p", [KLEIN_DELTA, GENUS3_ONE_BUP, GENUS3_TRIVIAL_HANDLES])
    @pytest.mark.parametrize("n", [2, 4, 6])
    def test_delta_nontrivial_even(self, p: SurfacePresentation, n: int) -> None:
        verdict = classify(_surface(p, "plane", n))
        assert (verdict.split, verdict.nonsplit) == (HAS, DNH)
        assert verdict.nonsplit_provenance.startswith("plane/even-n")
        assert not verdict.has_bup

    @pytest.mark.parametrize("p", [KLEIN_DELTA, GENUS3_TRIVIAL_HANDLES])
    @pytest.mark.parametrize("n", [3, 5])
    def test_delta_nontrivial_odd(self, p: SurfacePresentation, n: int) -> None:
        verdict = classify(_surface(p, "plane", n))
        assert (verdict.split, verdict.nonsplit) == (HAS, HAS)
        assert verdict.nonsplit_provenance.startswith("plane/odd-n")

    def test_plane_is_never_unknown(self) -> None:
        for p in enumerate_presentations(1):
            for n in range(1, 6):
                assert UNKNOWN not in _statuses(_surface(p, "plane", n))


# ---------------------------------------------------------------------------
# Closed targets
# ---------------------------------------------------------------------------


class TestClosedTargets:
    @pytest.mark.parametrize("target", ["sphere", "rp2", "or:1", "nonor:2"])
    def test_delta_trivial_transfers_from_plane(self, target: str) -> None:
        assert _statuses(_surface(TORUS, target, 3)) == (DNH, DNH)
        assert _statuses(_surface(TORUS, target, 1)) == (DNH, NA)

    @pytest.mark.parametrize("p", [KLEIN_DELTA, GENUS3_ONE_BUP])
    @pytest.mark.parametrize("target", ["or:1", "or:2"])
    def test_one_bup_families_into_orientable(self, p: SurfacePresentation, target: str) -> None:
        assert _statuses(_surface(p, target, 4)) == (HAS, DNH)
        assert _statuses(_surface(p, target, 1)) == (HAS, NA)
        assert _statuses(_surface(p, target, 3)) == (HAS, UNKNOWN)

    def test_one_bup_family_not_for_sphere_target(self) -> None:
        assert _statuses(_surface(KLEIN_DELTA, "sphere", 2)) == (UNKNOWN, DNH)

    def test_trivial_handles_are_open(self) -> None:
        assert _statuses(_surface(GENUS3_TRIVIAL_HANDLES, "or:1", 2)) == (UNKNOWN, DNH)
        assert _statuses(_surface(GENUS3_TRIVIAL_HANDLES, "nonor:2", 3)) == (UNKNOWN, UNKNOWN)

    def test_open_verdict_has_no_bup_claim(self) -> None:
        verdict = classify(_surface(KLEIN_DELTA, "nonor:3", 3))
        assert verdict.split is UNKNOWN
        assert verdict.split_provenance.startswith("closed-target/open")
        assert not verdict.has_bup


# ---------------------------------------------------------------------------
# Verdict model
# ---------------------------------------------------------------------------


class TestBupVerdict:
    def test_decided_status_needs_provenance(self) -> None:
        with pytest.raises(ValidationError):
            BupVerdict(split=HAS, nonsplit=UNKNOWN)

    def test_unknown_needs_no_provenance(self) -> None:
        verdict = BupVerdict(split=UNKNOWN, nonsplit=UNKNOWN)
        assert not verdict.has_bup

    def test_has_bup_with_not_applicable(self) -> None:
        verdict = BupVerdict(
            split=HAS, nonsplit=NA, split_provenance="x", nonsplit_provenance="y"
        )
        assert verdict.has_bup
