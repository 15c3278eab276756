"""
Tests for braidkit.classifier.cross_validate — plane verdicts backed by computation.

Test categories:
  - θ(δ) = 0: split and non-split witnesses back the "does not have" verdicts
  - θ(δ) = 1: cabled four-strand witness for even n, ε ingredients for "has" verdicts
  - Sphere domain: report without checks
  - Range: closed targets, n > 4 and m > 2 are rejected
  - Failure: a disagreeing witness raises WitnessFailureError
  - Coverage: every plane instance with n <= 4 and m <= 2 passes
"""

import importlib

import pytest

from braidkit.classifier import (
    DomainKind,
    InvalidDescriptorError,
    TripleDescriptor,
    WitnessFailureError,
    cross_validate,
    parse_target,
)
from braidkit.surfaces import (
    SurfacePresentation,
    enumerate_presentations,
    non_orientable_even,
    non_orientable_odd,
    orientable,
)

cross_validate_module = importlib.import_module("braidkit.classifier.cross_validate")

TORUS = orientable(1, {"a1": 1, "a2": 0})
KLEIN_DELTA = non_orientable_even(0, {"u": 1, "v": 0})


def _plane(p: SurfacePresentation, n: int) -> TripleDescriptor:
    return TripleDescriptor(
        domain=DomainKind.SURFACE, orbit_space=p, target=parse_target("plane"), n=n
    )


def _names(p: SurfacePresentation, n: int) -> list[str]:
    return [check.name for check in cross_validate(_plane(p, n)).checks]


def _ids(p: SurfacePresentation) -> str:
    values = "".join(str(p.theta[g]) for g in p.generators)
    return f"{p.kind.value}-m{p.m}-{values}"


class TestDeltaTrivial:
    @pytest.mark.parametrize("n", [2, 3])
    def test_both_witnesses(self, n: int) -> None:
        report = cross_validate(_plane(TORUS, n))
        assert report.passed
        assert [c.name for c in report.checks] == ["split witness", "non-split witness"]
        assert report.checks[0].observed == "(true, true, true)"
        assert report.checks[1].observed == "(true, true, false)"

    def test_one_valued_has_only_the_split_witness(self) -> None:
        assert _names(TORUS, 1) == ["split witness"]


class TestDeltaNontrivial:
    def test_even_n_uses_cabled_witness(self) -> None:
        names = _names(KLEIN_DELTA, 2)
        assert names[0] == "cabled four-strand witness"
        assert "epsilon(Delta^2) = n^2 mod 2" in names
        assert "epsilon(Delta^2) = 1 for odd n" not in names

    def test_odd_n_requires_odd_epsilon(self) -> None:
        report = cross_validate(_plane(KLEIN_DELTA, 3))
        assert report.passed
        assert [c.name for c in report.checks] == [
            "epsilon(Delta^2) = n^2 mod 2",
            "epsilon(b) = epsilon(Delta b Delta^-1) on generators",
            "epsilon(Delta^2) = 1 for odd n",
        ]

    def test_one_valued(self) -> None:
        assert len(_names(KLEIN_DELTA, 1)) == 2

    @pytest.mark.slow
    def test_four_blocks_on_genus_three(self) -> None:
        report = cross_validate(_plane(non_orientable_odd(1, {"c": 1, "a1": 0, "a2": 0}), 4))
        assert report.passed
        assert report.checks[0].observed == "(true, true, false)"


class TestScope:
    def test_sphere_domain_has_no_checks(self) -> None:
        t = TripleDescriptor(domain=DomainKind.SPHERE, target=parse_target("plane"), n=3)
        report = cross_validate(t)
        assert report.checks == ()
        assert report.passed

    def test_closed_target_rejected(self) -> None:
        t = TripleDescriptor(
            domain=DomainKind.SURFACE, orbit_space=TORUS, target=parse_target("or:1"), n=2
        )
        with pytest.raises(InvalidDescriptorError) as exc_info:
            cross_validate(t)
        assert exc_info.value.field == "target"

    def test_large_n_rejected(self) -> None:
        with pytest.raises(InvalidDescriptorError) as exc_info:
            cross_validate(_plane(TORUS, 5))
        assert exc_info.value.field == "n"

    def test_large_m_rejected(self) -> None:
        theta = {f"a{k}": 0 for k in range(1, 7)} | {"a1": 1}
        with pytest.raises(InvalidDescriptorError):
            cross_validate(_plane(orientable(3, theta), 2))


class TestFailure:
    def test_disagreeing_witness_raises(self, monkeypatch: pytest.MonkeyPatch) -> None:
        # a split witness in place of the non-split one reports a pure kernel
        monkeypatch.setattr(
            cross_validate_module, "witness_nonsplit", cross_validate_module.witness_split
        )
        with pytest.raises(WitnessFailureError) as exc_info:
            cross_validate(_plane(TORUS, 2))
        assert exc_info.value.check == "non-split witness"
        assert exc_info.value.observed == "(true, true, true)"


# ---------------------------------------------------------------------------
# Coverage
# ---------------------------------------------------------------------------


class TestEveryPlaneInstance:
    @pytest.mark.parametrize("p", list(enumerate_presentations(1)), ids=_ids)
    def test_one_handle(self, p: SurfacePresentation) -> None:
        for n in range(1, 4):
            assert cross_validate(_plane(p, n)).passed, n

    @pytest.mark.slow
    @pytest.mark.parametrize("p", list(enumerate_presentations(2)), ids=_ids)
    def test_two_handles_and_four_blocks(self, p: SurfacePresentation) -> None:
        for n in range(1, 5):
            assert cross_validate(_plane(p, n)).passed, n
