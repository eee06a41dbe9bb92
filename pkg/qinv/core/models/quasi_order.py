from dataclasses import dataclass
from fractions import Fraction

from qinv.algebra.primes import is_prime
from qinv.core.exceptions import QuasiOrderError


@dataclass(frozen=True, slots=True)
class QuasiOrder:
    """
    The quasi-invariance parameter m, stored as ``twice_m`` so that the
    half-integers used in characteristic 2 are exact.

    Attributes:
        twice_m: 2m, a non-negative integer.
        characteristic: 0 for the rationals, otherwise a prime. Odd
            ``twice_m`` is only meaningful in characteristic 2.
    """

    twice_m: int
    characteristic: int

    def __post_init__(self) -> None:
        if self.twice_m < 0:
            raise QuasiOrderError(f"twice_m must be non-negative, got {self.twice_m}")
        if self.characteristic != 0 and not is_prime(self.characteristic):
            raise QuasiOrderError(
                f"characteristic must be 0 or a prime, got {self.characteristic}"
            )
        if self.twice_m % 2 and self.characteristic != 2:
            raise QuasiOrderError(
                f"half-integer m={self.m} needs characteristic 2, "
                f"not {self.characteristic}"
            )

    @classmethod
    def integer(cls, m: int, characteristic: int) -> "QuasiOrder":
        return cls(2 * m, characteristic)

    @property
    def m(self) -> Fraction:
        return Fraction(self.twice_m, 2)

    @property
    def r(self) -> int:
        """Required divisibility exponent 2m + 1."""
        return self.twice_m + 1

    @property
    def top_degree(self) -> int:
        """6m + 3, the degree of the Vandermonde power Delta^(2m+1)."""
        return 3 * self.twice_m + 3

    @property
    def is_half_integer(self) -> bool:
        return self.twice_m % 2 == 1

    def integer_m(self) -> int:
        if self.is_half_integer:
            raise QuasiOrderError(f"m={self.m} is not an integer")
        return self.twice_m // 2

    def __str__(self) -> str:
        field = "QQ" if self.characteristic == 0 else f"F{self.characteristic}"
        return f"m={self.m} over {field}"
