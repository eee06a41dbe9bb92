from typing import Literal

from pydantic import BaseModel, ConfigDict, NonNegativeInt

INDECOMPOSABLE_F2 = ("triv", "std", "triv-triv")
INDECOMPOSABLE_F3 = (
    "triv",
    "sign",
    "sign-triv",
    "triv-sign",
    "triv-sign-triv",
    "sign-triv-sign",
)


class ModuleFingerprint(BaseModel):
    """
    Invariants of a cyclic S3-module V = span{sigma K}.

    Attributes:
        dim: dim V.
        fixed_dim: Dimension of the S3-fixed vectors in V.
        sign_dim: Dimension of the vectors negated by every transposition.
        cycle_fixed_dim: Dimension of the vectors fixed by the 3-cycle.
    """

    model_config = ConfigDict(frozen=True)

    dim: NonNegativeInt
    fixed_dim: NonNegativeInt
    sign_dim: NonNegativeInt
    cycle_fixed_dim: NonNegativeInt


class RepLabel(BaseModel):
    """Name of an indecomposable S3-module, or ``decomposable{...}``."""

    model_config = ConfigDict(frozen=True)

    name: str

    @classmethod
    def decomposable(cls, *parts: str) -> "RepLabel":
        return cls(name="decomposable{" + ",".join(parts) + "}")

    @property
    def is_decomposable(self) -> bool:
        return self.name.startswith("decomposable")

    def __str__(self) -> str:
        return self.name


FailureKind = Literal["quasi-invariance", "spanning", "freeness", "series"]


class DegreeCheck(BaseModel):
    """
    Rank data of one degree of a free-generation check.

    Attributes:
        degree: The degree checked.
        dimension: dim of the component, from the oracle.
        products: Number of products e1^a e2^b e3^c * g in this degree.
        rank: Rank of those products.
        expected: Coefficient of the free-module series in this degree.
    """

    model_config = ConfigDict(frozen=True)

    degree: NonNegativeInt
    dimension: NonNegativeInt
    products: NonNegativeInt
    rank: NonNegativeInt
    expected: NonNegativeInt


class VerifyFailure(BaseModel):
    model_config = ConfigDict(frozen=True)

    kind: FailureKind
    degree: int | None = None
    detail: str


class VerifyReport(BaseModel):
    """Outcome of a free-generation check: per-degree data and the first failure."""

    model_config = ConfigDict(frozen=True)

    p: NonNegativeInt
    twice_m: NonNegativeInt
    max_degree: NonNegativeInt
    degrees: list[DegreeCheck]
    failure: VerifyFailure | None = None

    @property
    def success(self) -> bool:
        return self.failure is None
