"""Configuration and result models for the regression suite."""

from __future__ import annotations

from pydantic import BaseModel, ConfigDict, Field, model_validator
from pydantic_settings import BaseSettings, SettingsConfigDict

__all__ = [
    "CheckResult",
    "SuiteConfig",
    "SuiteReport",
]


class SuiteConfig(BaseSettings):
    """
    Settings of the regression suite.

    Values can be read from environment variables with the ``BRAIDKIT_`` prefix:

    +--------------------+----------------------------+
    | Field              | Environment variable       |
    +====================+============================+
    | ``seed``           | ``BRAIDKIT_SEED``          |
    +--------------------+----------------------------+
    | ``max_n``          | ``BRAIDKIT_MAX_N``         |
    +--------------------+----------------------------+
    | ``max_m``          | ``BRAIDKIT_MAX_M``         |
    +--------------------+----------------------------+
    | ``workers``        | ``BRAIDKIT_WORKERS``       |
    +--------------------+----------------------------+
    | ``random_words``   | ``BRAIDKIT_RANDOM_WORDS``  |
    +--------------------+----------------------------+

    The environment is read when the object is created, so set the variables before
    calling ``run_paper_suite``. An explicit config always wins over the environment.

    .. code-block:: python

        from braidkit.verification import SuiteConfig, run_paper_suite

        report = run_paper_suite(SuiteConfig(max_n=2, seed=7))
    """

    model_config = SettingsConfigDict(env_prefix="BRAIDKIT_", frozen=True)

    seed: int = Field(default=20240611, description="Seed of every randomized check.")
    max_n: int = Field(
        default=3, ge=1, le=4, description="Largest block size n visited (braids on 2n strands)."
    )
    max_m: int = Field(
        default=2, ge=0, le=2, description="Largest handle count m of enumerated orbit spaces."
    )
    workers: int = Field(default=4, ge=1, description="Thread pool size for independent checks.")
    random_words: int = Field(
        default=100, ge=1, description="Corpus size of each randomized check."
    )


class CheckResult(BaseModel):
    """Outcome of one named check.

    Invariants enforced by model_validator:
    - ``passed=True``  → ``exception_type is None``
    """

    model_config = ConfigDict(frozen=True)

    name: str = Field(description="Registered check name.")
    category: str = Field(description="Area the check belongs to (braids, garside, ...).")
    passed: bool = Field(description="True if every instance of the check held.")
    detail: str = Field(default="", description="What was checked, or the first mismatch.")
    exception_type: str | None = Field(
        default=None, description="Exception class name if the check raised instead of finishing."
    )
    elapsed_seconds: float = Field(default=0.0, ge=0.0)

    @model_validator(mode="after")
    def _no_exception_on_pass(self) -> CheckResult:
        if self.passed and self.exception_type is not None:
            raise ValueError("a passed check cannot carry an exception")
        return self


class SuiteReport(BaseModel):
    """All check results in registration order, with the settings used."""

    model_config = ConfigDict(frozen=True)

    results: tuple[CheckResult, ...]
    seed: int
    max_n: int
    elapsed_seconds: float = Field(ge=0.0)

    @property
    def total_count(self) -> int:
        return len(self.results)

    @property
    def failure_count(self) -> int:
        return sum(1 for r in self.results if not r.passed)

    @property
    def passed(self) -> bool:
        return self.failure_count == 0

    @property
    def failures(self) -> list[CheckResult]:
        return [r for r in self.results if not r.passed]
