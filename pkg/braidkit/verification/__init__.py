"""
braidkit.verification — regression suite of braid identities, lifts and verdicts.

Public API::

    from braidkit.verification import (
        run_paper_suite, render_report, register, registered_checks,
        SuiteConfig, SuiteReport, CheckResult,
    )
"""

from braidkit.verification.models import CheckResult, SuiteConfig, SuiteReport
from braidkit.verification.paper_suite import (
    RegisteredCheck,
    register,
    registered_checks,
    render_report,
    run_paper_suite,
)

__all__ = [
    "run_paper_suite",
    "render_report",
    "register",
    "registered_checks",
    "RegisteredCheck",
    "SuiteConfig",
    "SuiteReport",
    "CheckResult",
]
