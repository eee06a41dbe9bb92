from typing import Literal

from pydantic import (
    BaseModel,
    ConfigDict,
    NonNegativeInt,
    PositiveInt,
    model_validator,
)

from qinv.core.config import settings
from qinv.core.models import QuasiOrder

Command = Literal[
    "dim",
    "hilbert",
    "check",
    "generators",
    "counterexample",
    "staircase",
    "classify",
    "verify",
]
OutputFormat = Literal["plain", "json", "csv"]

_NEEDS_M = {"dim", "hilbert", "check", "generators", "counterexample", "verify"}
_NEEDS_POLY = {"check", "classify"}


class CommandRequest(BaseModel):
    """
    One validated CLI invocation.

    Validation messages name the offending flag so they can be shown to the
    user unchanged.
    """

    model_config = ConfigDict(frozen=True)

    command: Command
    p: Literal[2, 3] = 3
    m: NonNegativeInt | None = None
    m_half: PositiveInt | None = None
    degree: NonNegativeInt | None = None
    terms: PositiveInt | None = None
    max_degree: NonNegativeInt | None = None
    max_m: NonNegativeInt = 12
    poly: str | None = None
    format: OutputFormat = settings.output.default_format
    verify: bool = False
    compare: Literal["none", "empirical"] = "none"

    @model_validator(mode="after")
    def _check_flags(self) -> "CommandRequest":
        if self.m is not None and self.m_half is not None:
            raise ValueError("--m and --m-half are mutually exclusive")
        if self.m_half is not None:
            if self.m_half % 2 == 0:
                raise ValueError(
                    f"--m-half must be odd, got {self.m_half}; "
                    f"use --m {self.m_half // 2}"
                )
            if self.p != 2:
                raise ValueError("--m-half needs --p 2")
        if self.command in _NEEDS_M and self.m is None and self.m_half is None:
            raise ValueError(f"--m (or --m-half) is required for {self.command}")
        if self.command in _NEEDS_POLY and not self.poly:
            raise ValueError(f"--poly is required for {self.command}")
        if self.command == "dim" and self.degree is None:
            raise ValueError("--degree is required for dim")
        if self.command == "counterexample" and self.p != 3:
            raise ValueError("--p must be 3 for counterexample")
        return self

    @property
    def twice_m(self) -> int:
        if self.m_half is not None:
            return self.m_half
        return 2 * (self.m or 0)

    @property
    def order(self) -> QuasiOrder:
        return QuasiOrder(self.twice_m, self.p)
