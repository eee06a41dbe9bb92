from pydantic import (
    BaseModel,
    ConfigDict,
    NonNegativeInt,
    PositiveInt,
    computed_field,
    model_validator,
)


class TruncatedSeries(BaseModel):
    """
    A formal power series known up to (but excluding) ``truncation_order``.
    """

    model_config = ConfigDict(frozen=True)

    coefficients: list[NonNegativeInt]

    @computed_field  # type: ignore[prop-decorator]
    @property
    def truncation_order(self) -> int:
        return len(self.coefficients)

    def __getitem__(self, degree: int) -> int:
        return self.coefficients[degree]

    def __len__(self) -> int:
        return len(self.coefficients)


class HilbertShape(BaseModel):
    """
    Numerator data of a Hilbert series of the form
    (1 + 2t^d + 2t^(6m+3-d) + t^(6m+3)) / ((1-t)(1-t^2)(1-t^3)).

    ``d_high`` defaults to the complement 6m + 3 - d_low; it is stored so a
    malformed shape can be represented and rejected by the palindrome check.
    """

    model_config = ConfigDict(frozen=True)

    p: NonNegativeInt
    twice_m: NonNegativeInt
    d_low: PositiveInt
    d_high: NonNegativeInt | None = None

    @model_validator(mode="after")
    def _check_low_degree(self) -> "HilbertShape":
        # d_low <= 3m + 1, with m = twice_m / 2
        if 2 * self.d_low > 3 * self.twice_m + 2:
            raise ValueError(
                f"d_low {self.d_low} exceeds 3m + 1 for twice_m {self.twice_m}"
            )
        return self

    @property
    def top_degree(self) -> int:
        return 3 * self.twice_m + 3

    @property
    def upper(self) -> int:
        return self.top_degree - self.d_low if self.d_high is None else self.d_high

    @property
    def exponents(self) -> tuple[int, ...]:
        return (0, self.d_low, self.d_low, self.upper, self.upper, self.top_degree)

    @property
    def extended(self) -> bool:
        """True for half-integer m, where the closed form is a tested extension."""
        return self.twice_m % 2 == 1
