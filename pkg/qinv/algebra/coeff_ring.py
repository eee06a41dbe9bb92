"""
Exact scalar arithmetic for the coefficient domains.

Three rings sit behind one interface: prime fields F_p (any prime below
2^31, one machine word per element), the integers and the rationals.
Polynomials store raw Python scalars (``int`` for F_p and ZZ, ``Fraction``
for QQ) and delegate every operation on them to their ring, so the same
polynomial and solver code runs in every characteristic.
"""

import math
from abc import ABC, abstractmethod
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from qinv.algebra.primes import MAX_PRIME, is_prime
from qinv.core.exceptions import (
    CoefficientError,
    DivisionByZeroError,
    DomainMismatchError,
)

Scalar = int | Fraction


def _extended_gcd(a: int, b: int) -> tuple[int, int, int]:
    """Return (g, s, t) with s*a + t*b = g = gcd(a, b)."""
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    return old_r, old_s, old_t


@dataclass(frozen=True, slots=True)
class PrimeFieldElement:
    """
    Element of F_p, always stored fully reduced.

    Attributes:
        value: Representative in [0, modulus).
        modulus: The prime p.
    """

    value: int
    modulus: int

    def __post_init__(self) -> None:
        if not 0 <= self.value < self.modulus:
            raise CoefficientError(
                f"{self.value} is not reduced modulo {self.modulus}"
            )

    def _coerce(self, other: "PrimeFieldElement | int") -> int:
        if isinstance(other, PrimeFieldElement):
            if other.modulus != self.modulus:
                raise DomainMismatchError(
                    f"F_{self.modulus} element combined with F_{other.modulus}"
                )
            return other.value
        return other % self.modulus

    def __add__(self, other: "PrimeFieldElement | int") -> "PrimeFieldElement":
        return PrimeFieldElement(
            (self.value + self._coerce(other)) % self.modulus, self.modulus
        )

    __radd__ = __add__

    def __sub__(self, other: "PrimeFieldElement | int") -> "PrimeFieldElement":
        return PrimeFieldElement(
            (self.value - self._coerce(other)) % self.modulus, self.modulus
        )

    def __mul__(self, other: "PrimeFieldElement | int") -> "PrimeFieldElement":
        return PrimeFieldElement(
            (self.value * self._coerce(other)) % self.modulus, self.modulus
        )

    __rmul__ = __mul__

    def __neg__(self) -> "PrimeFieldElement":
        return PrimeFieldElement(-self.value % self.modulus, self.modulus)

    def __truediv__(self, other: "PrimeFieldElement | int") -> "PrimeFieldElement":
        divisor = PrimeFieldElement(self._coerce(other), self.modulus)
        return self * ff_inv(divisor)

    def inverse(self) -> "PrimeFieldElement":
        return ff_inv(self)

    def __str__(self) -> str:
        return str(self.value)


def ff_inv(x: PrimeFieldElement) -> PrimeFieldElement:
    """
    Invert a nonzero element of F_p by the extended Euclidean algorithm.

    Args:
        x: Element to invert.

    Returns:
        PrimeFieldElement: y with x*y = 1.

    Raises:
        DivisionByZeroError: If x is zero.
    """
    if x.value == 0:
        raise DivisionByZeroError(f"0 has no inverse in F_{x.modulus}")
    _, s, _ = _extended_gcd(x.value, x.modulus)
    return PrimeFieldElement(s % x.modulus, x.modulus)


def rat_normalize(num: int, den: int) -> Fraction:
    """
    Canonical reduced rational with positive denominator.

    Raises:
        DivisionByZeroError: If den is zero.
    """
    if den == 0:
        raise DivisionByZeroError(f"{num}/0 is undefined")
    return Fraction(num, den)


def integer_content(coeffs: list[int]) -> int:
    """gcd of the absolute values; 0 for an empty or all-zero list."""
    return math.gcd(*coeffs)


class CoefficientRing(ABC):
    """
    Common interface of the coefficient domains.

    Scalars are plain Python numbers; a ring only knows how to bring them
    into canonical form and how to combine canonical values.
    """

    characteristic: int
    is_field: bool

    @abstractmethod
    def normalize(self, value: Scalar) -> Scalar:
        """Bring an int or Fraction into this ring's canonical form."""

    def add(self, a: Scalar, b: Scalar) -> Scalar:
        return self.normalize(a + b)

    def sub(self, a: Scalar, b: Scalar) -> Scalar:
        return self.normalize(a - b)

    def mul(self, a: Scalar, b: Scalar) -> Scalar:
        return self.normalize(a * b)

    def neg(self, a: Scalar) -> Scalar:
        return self.normalize(-a)

    @abstractmethod
    def inverse(self, a: Scalar) -> Scalar:
        """Multiplicative inverse; raises for zero or non-units."""

    def div(self, a: Scalar, b: Scalar) -> Scalar:
        return self.mul(a, self.inverse(b))

    def from_fraction(self, num: int, den: int) -> Scalar:
        """Coefficient ``num/den`` as read by the parser."""
        if den == 1:
            return self.normalize(num)
        raise CoefficientError(
            f"rational coefficient {num}/{den} needs the rational field, not {self}"
        )

    def format(self, value: Scalar) -> str:
        return str(value)

    @property
    def zero(self) -> Scalar:
        return self.normalize(0)

    @property
    def one(self) -> Scalar:
        return self.normalize(1)


@dataclass(frozen=True)
class PrimeField(CoefficientRing):
    """F_p for a prime p below 2^31."""

    p: int

    def __post_init__(self) -> None:
        if not (self.p < MAX_PRIME and is_prime(self.p)):
            raise CoefficientError(f"F_{self.p}: modulus must be a prime below 2^31")

    @property
    def characteristic(self) -> int:  # type: ignore[override]
        return self.p

    @property
    def is_field(self) -> bool:  # type: ignore[override]
        return True

    def normalize(self, value: Scalar) -> int:
        if isinstance(value, Fraction):
            if value.denominator % self.p == 0:
                raise CoefficientError(f"{value} has no image in F_{self.p}")
            return (
                value.numerator * pow(value.denominator % self.p, -1, self.p)
            ) % self.p
        return value % self.p

    def add(self, a: Scalar, b: Scalar) -> int:
        return (a + b) % self.p  # type: ignore[return-value,operator]

    def sub(self, a: Scalar, b: Scalar) -> int:
        return (a - b) % self.p  # type: ignore[return-value,operator]

    def mul(self, a: Scalar, b: Scalar) -> int:
        return (a * b) % self.p  # type: ignore[return-value,operator]

    def inverse(self, a: Scalar) -> int:
        return ff_inv(PrimeFieldElement(self.normalize(a), self.p)).value

    def element(self, value: int) -> PrimeFieldElement:
        return PrimeFieldElement(value % self.p, self.p)

    def __str__(self) -> str:
        return f"F{self.p}"


@dataclass(frozen=True)
class IntegerRing(CoefficientRing):
    """The integers, arbitrary precision."""

    @property
    def characteristic(self) -> int:  # type: ignore[override]
        return 0

    @property
    def is_field(self) -> bool:  # type: ignore[override]
        return False

    def normalize(self, value: Scalar) -> int:
        if isinstance(value, Fraction):
            if value.denominator != 1:
                raise CoefficientError(f"{value} is not an integer")
            return value.numerator
        return int(value)

    def inverse(self, a: Scalar) -> int:
        if a in (1, -1):
            return int(a)
        if a == 0:
            raise DivisionByZeroError("0 has no inverse in ZZ")
        raise CoefficientError(f"{a} is not a unit of ZZ")

    def __str__(self) -> str:
        return "ZZ"


@dataclass(frozen=True)
class RationalField(CoefficientRing):
    """The rationals, stored as normalized ``Fraction`` values."""

    @property
    def characteristic(self) -> int:  # type: ignore[override]
        return 0

    @property
    def is_field(self) -> bool:  # type: ignore[override]
        return True

    def normalize(self, value: Scalar) -> Fraction:
        return value if isinstance(value, Fraction) else Fraction(value)

    def inverse(self, a: Scalar) -> Fraction:
        if a == 0:
            raise DivisionByZeroError("0 has no inverse in QQ")
        return 1 / self.normalize(a)

    def from_fraction(self, num: int, den: int) -> Fraction:
        return rat_normalize(num, den)

    def __str__(self) -> str:
        return "QQ"


ZZ = IntegerRing()
QQ = RationalField()


@lru_cache(maxsize=None)
def GF(p: int) -> PrimeField:  # noqa: N802
    return PrimeField(p)


def ring_for(p: int) -> CoefficientRing:
    """Coefficient field of characteristic p (QQ for p = 0)."""
    return QQ if p == 0 else GF(p)
