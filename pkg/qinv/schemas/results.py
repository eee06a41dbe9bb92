from typing import Literal

from pydantic import BaseModel, ConfigDict, NonNegativeInt, PositiveInt


class DimRead(BaseModel):
    """
    Dimension of one graded component.
    """

    model_config = ConfigDict(frozen=True)

    p: NonNegativeInt
    m2: NonNegativeInt
    degree: NonNegativeInt
    dimension: NonNegativeInt


class HilbertRead(BaseModel):
    """
    Closed-form, characteristic-zero and empirical series side by side.

    ``empirical`` and ``match`` are null unless the oracle was asked for.
    """

    closed_form: list[int]
    empirical: list[int] | None = None
    char0: list[int] | None = None
    match: bool | None = None
    extended: bool = False


class CheckRead(BaseModel):
    """
    Quasi-invariance of a user polynomial.

    ``quasi_order`` is ``"infinity"`` for symmetric input and null for zero.
    """

    quasi_order: int | Literal["infinity"] | None
    m2: NonNegativeInt
    quasi_invariant: bool


class CounterexampleRead(BaseModel):
    a: PositiveInt
    k: NonNegativeInt
    b: NonNegativeInt
    degree: PositiveInt
    poly: str


class NoCounterexampleRead(BaseModel):
    none: Literal[True] = True


class GeneratorRead(BaseModel):
    poly: str
    degree: NonNegativeInt
    rep: str


class ClassifyRead(BaseModel):
    """
    Fingerprint and label of the cyclic S3-module generated by a polynomial.
    """

    dim: NonNegativeInt
    fixed_dim: NonNegativeInt
    sign_dim: NonNegativeInt
    label: str
