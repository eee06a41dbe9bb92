from typing import Literal

from pydantic import BaseModel, ConfigDict, NonNegativeInt, PositiveInt, model_validator

StaircasePhase = Literal["flat", "climbing", "closed"]


class CounterexampleSpec(BaseModel):
    """
    Shape P_k^(3^a) * Delta^(2b) of a Ren-Xu counterexample over F3.
    """

    model_config = ConfigDict(frozen=True)

    a: PositiveInt
    k: NonNegativeInt
    b: NonNegativeInt
    degree: PositiveInt

    @model_validator(mode="after")
    def _check_degree(self) -> "CounterexampleSpec":
        expected = 3**self.a * (3 * self.k + 1) + 6 * self.b
        if self.degree != expected:
            raise ValueError(f"degree {self.degree} != 3^a(3k+1) + 6b = {expected}")
        return self


class StaircaseInfo(BaseModel):
    """
    Position of m on the staircase that starts at the last non-member t of X.

    Attributes:
        t: Largest m' < m outside X.
        a: Power-of-three exponent of R_(t+1).
        k: Characteristic-zero generator index of R_(t+1).
        d: Half-width (3^(a-1) + 1) / 2 of the staircase.
        phase: ``flat`` while R_m = R_(t+1), ``climbing`` while a Delta^2
               factor is added per step.
        degree: Degree of R_m.
    """

    model_config = ConfigDict(frozen=True)

    t: NonNegativeInt
    a: PositiveInt
    k: NonNegativeInt
    d: PositiveInt
    phase: StaircasePhase
    degree: PositiveInt


class RemarkEstimate(BaseModel):
    """Closed-form guess for the minimal counterexample; reported, never trusted."""

    model_config = ConfigDict(frozen=True)

    a: PositiveInt
    k: NonNegativeInt
    b: NonNegativeInt
    degree: PositiveInt


class StaircaseRow(BaseModel):
    """
    One row of the characteristic-3 generator degree table.

    Attributes:
        lower: Degree of the lowest nonsymmetric generator.
        upper: Complementary degree 6m + 3 - lower.
        in_X: Whether m has a base-3 digit 1.
        verified: Oracle confirmation of ``lower``; None when not requested.
    """

    model_config = ConfigDict(frozen=True)

    m: NonNegativeInt
    lower: PositiveInt
    upper: PositiveInt
    in_X: bool  # noqa: N815
    phase: StaircasePhase
    verified: bool | None = None
