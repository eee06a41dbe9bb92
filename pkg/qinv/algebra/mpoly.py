"""
Sparse polynomials in x1, x2, x3 over a coefficient ring.

A polynomial is a map from exponent triples to nonzero canonical
coefficients. Graded lexicographic order (total degree first, then lex on
(e1, e2, e3) with x1 > x2 > x3) is the single order used for storage
iteration, printing, leading terms and division.
"""

import math
from collections.abc import Iterable, Iterator, Mapping
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from types import MappingProxyType
from typing import NamedTuple

from qinv.algebra.coeff_ring import GF, ZZ, CoefficientRing, Scalar
from qinv.core.exceptions import (
    ContractViolationError,
    DomainMismatchError,
    UnsupportedOperationError,
)

Order = int | float
INFINITY: float = math.inf


class ExponentVector(NamedTuple):
    e1: int
    e2: int
    e3: int

    @property
    def degree(self) -> int:
        return self.e1 + self.e2 + self.e3


def glex_key(e: tuple[int, int, int]) -> tuple[int, int, int, int]:
    return (e[0] + e[1] + e[2], e[0], e[1], e[2])


def monomials_of_degree(d: int) -> list[ExponentVector]:
    """All C(d+2, 2) exponent vectors of total degree d, graded-lex descending."""
    return [
        ExponentVector(a, b, d - a - b)
        for a in range(d, -1, -1)
        for b in range(d - a, -1, -1)
    ]


@dataclass(frozen=True, slots=True)
class Permutation:
    """
    Element of S3 acting on variables by x_i -> x_{images[i-1]}.

    With this convention (sigma * tau)(K) = sigma(tau(K)).
    """

    images: tuple[int, int, int]

    def __post_init__(self) -> None:
        if tuple(sorted(self.images)) != (1, 2, 3):
            raise UnsupportedOperationError(
                f"{self.images} is not a permutation of (1, 2, 3)"
            )

    @classmethod
    def transposition(cls, i: int, j: int) -> "Permutation":
        if i == j or {i, j} - {1, 2, 3}:
            raise UnsupportedOperationError(f"({i} {j}) is not a transposition")
        images = [1, 2, 3]
        images[i - 1], images[j - 1] = j, i
        return cls((images[0], images[1], images[2]))

    def __mul__(self, other: "Permutation") -> "Permutation":
        return Permutation(
            (
                self.images[other.images[0] - 1],
                self.images[other.images[1] - 1],
                self.images[other.images[2] - 1],
            )
        )

    def inverse(self) -> "Permutation":
        inv = [0, 0, 0]
        for i, target in enumerate(self.images, start=1):
            inv[target - 1] = i
        return Permutation((inv[0], inv[1], inv[2]))

    @property
    def sign(self) -> int:
        inversions = sum(
            1
            for a in range(3)
            for b in range(a + 1, 3)
            if self.images[a] > self.images[b]
        )
        return -1 if inversions % 2 else 1

    def act(self, e: tuple[int, int, int]) -> tuple[int, int, int]:
        out = [0, 0, 0]
        for i in range(3):
            out[self.images[i] - 1] = e[i]
        return (out[0], out[1], out[2])

    def __str__(self) -> str:
        moved = [i for i in (1, 2, 3) if self.images[i - 1] != i]
        if not moved:
            return "()"
        if len(moved) == 2:
            return f"({moved[0]} {moved[1]})"
        return f"(1 {self.images[0]} {self.images[self.images[0] - 1]})"


IDENTITY = Permutation((1, 2, 3))
S12 = Permutation.transposition(1, 2)
S13 = Permutation.transposition(1, 3)
S23 = Permutation.transposition(2, 3)
CYCLE = Permutation((2, 3, 1))
S3 = (IDENTITY, S12, S13, S23, CYCLE, CYCLE * CYCLE)
TRANSPOSITIONS = {(1, 2): S12, (1, 3): S13, (2, 3): S23}


class Polynomial:
    """
    Immutable sparse polynomial in x1, x2, x3.

    Construction normalizes every coefficient through the ring and drops
    zeros, so equal polynomials have equal term maps.
    """

    __slots__ = ("ring", "_terms", "_hash")

    def __init__(
        self,
        ring: CoefficientRing,
        terms: Mapping[tuple[int, int, int], Scalar] | None = None,
    ) -> None:
        self.ring = ring
        clean: dict[tuple[int, int, int], Scalar] = {}
        for exps, coeff in (terms or {}).items():
            if len(exps) != 3 or min(exps) < 0:
                raise UnsupportedOperationError(f"bad exponent vector {exps}")
            value = ring.normalize(coeff)
            if value != 0:
                clean[(exps[0], exps[1], exps[2])] = value
        self._terms = clean
        self._hash: int | None = None

    @classmethod
    def _trusted(
        cls, ring: CoefficientRing, terms: dict[tuple[int, int, int], Scalar]
    ) -> "Polynomial":
        poly = cls.__new__(cls)
        poly.ring = ring
        poly._terms = terms
        poly._hash = None
        return poly

    @classmethod
    def constant(cls, ring: CoefficientRing, value: Scalar) -> "Polynomial":
        return cls(ring, {(0, 0, 0): value})

    @classmethod
    def variable(cls, ring: CoefficientRing, i: int) -> "Polynomial":
        exps = [0, 0, 0]
        exps[i - 1] = 1
        return cls(ring, {(exps[0], exps[1], exps[2]): 1})

    @classmethod
    def zero(cls, ring: CoefficientRing) -> "Polynomial":
        return cls._trusted(ring, {})

    @property
    def terms(self) -> Mapping[tuple[int, int, int], Scalar]:
        return MappingProxyType(self._terms)

    @property
    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    @property
    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((sum(e) for e in self._terms), default=-1)

    @property
    def is_homogeneous(self) -> bool:
        return len({sum(e) for e in self._terms}) <= 1

    def coefficient(self, exps: tuple[int, int, int]) -> Scalar:
        return self._terms.get(tuple(exps), self.ring.zero)  # type: ignore[arg-type]

    def sorted_terms(self) -> list[tuple[ExponentVector, Scalar]]:
        """Terms in graded-lex descending order."""
        return [
            (ExponentVector(*e), self._terms[e])
            for e in sorted(self._terms, key=glex_key, reverse=True)
        ]

    def leading_term(self) -> tuple[ExponentVector, Scalar]:
        if not self._terms:
            raise UnsupportedOperationError("zero polynomial has no leading term")
        e = max(self._terms, key=glex_key)
        return ExponentVector(*e), self._terms[e]

    def _check(self, other: "Polynomial") -> None:
        if other.ring != self.ring:
            raise DomainMismatchError(
                f"cannot combine polynomials over {self.ring} and {other.ring}"
            )

    def _lift(self, other: "Polynomial | Scalar") -> "Polynomial":
        if isinstance(other, Polynomial):
            self._check(other)
            return other
        if isinstance(other, int | Fraction):
            return Polynomial.constant(self.ring, other)
        return NotImplemented

    def __add__(self, other: "Polynomial | Scalar") -> "Polynomial":
        rhs = self._lift(other)
        if rhs is NotImplemented:
            return NotImplemented
        acc = dict(self._terms)
        add = self.ring.add
        for e, c in rhs._terms.items():
            value = add(acc[e], c) if e in acc else c
            if value == 0:
                acc.pop(e, None)
            else:
                acc[e] = value
        return Polynomial._trusted(self.ring, acc)

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        neg = self.ring.neg
        return Polynomial._trusted(
            self.ring, {e: neg(c) for e, c in self._terms.items()}
        )

    def __sub__(self, other: "Polynomial | Scalar") -> "Polynomial":
        rhs = self._lift(other)
        if rhs is NotImplemented:
            return NotImplemented
        return self + (-rhs)

    def __rsub__(self, other: Scalar) -> "Polynomial":
        return (-self) + other

    def scale(self, c: Scalar) -> "Polynomial":
        value = self.ring.normalize(c)
        if value == 0:
            return Polynomial.zero(self.ring)
        mul = self.ring.mul
        return Polynomial._trusted(
            self.ring, {e: mul(v, value) for e, v in self._terms.items()}
        )

    def __mul__(self, other: "Polynomial | Scalar") -> "Polynomial":
        if isinstance(other, int | Fraction):
            return self.scale(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        self._check(other)
        acc: dict[tuple[int, int, int], Scalar] = {}
        for (a1, a2, a3), c in self._terms.items():
            for (b1, b2, b3), d in other._terms.items():
                key = (a1 + b1, a2 + b2, a3 + b3)
                acc[key] = acc.get(key, 0) + c * d
        return Polynomial(self.ring, acc)

    def __rmul__(self, other: Scalar) -> "Polynomial":
        if isinstance(other, int | Fraction):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, n: int) -> "Polynomial":
        if n < 0:
            raise UnsupportedOperationError("negative powers are not polynomials")
        result = Polynomial.constant(self.ring, 1)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Polynomial):
            return self.ring == other.ring and self._terms == other._terms
        if isinstance(other, int | Fraction):
            return self._terms == Polynomial.constant(self.ring, other)._terms
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.ring, frozenset(self._terms.items())))
        return self._hash

    def __str__(self) -> str:
        return format_poly(self)

    def __repr__(self) -> str:
        return f"Polynomial({self.ring}, {format_poly(self)!r})"

    def permute(self, sigma: Permutation) -> "Polynomial":
        act = sigma.act
        return Polynomial._trusted(
            self.ring, {act(e): c for e, c in self._terms.items()}
        )

    def change_ring(self, ring: CoefficientRing) -> "Polynomial":
        return Polynomial(ring, self._terms)

    def evaluate(self, point: tuple[Scalar, Scalar, Scalar]) -> Scalar:
        ring = self.ring
        total = ring.zero
        for (a, b, c), coeff in self._terms.items():
            value = coeff * point[0] ** a * point[1] ** b * point[2] ** c
            total = ring.add(total, value)
        return total

    def homogeneous_part(self, d: int) -> "Polynomial":
        return Polynomial._trusted(
            self.ring, {e: c for e, c in self._terms.items() if sum(e) == d}
        )


def format_poly(poly: Polynomial) -> str:
    """
    Render in graded-lex descending order, e.g. ``2*x1^2*x2 + x1*x3^2``.

    The output round-trips through ``parse_poly``.
    """
    if poly.is_zero:
        return "0"
    pieces: list[str] = []
    for exps, coeff in poly.sorted_terms():
        negative = coeff < 0
        magnitude = -coeff if negative else coeff
        factors = [
            f"x{i}" if k == 1 else f"x{i}^{k}"
            for i, k in enumerate(exps, start=1)
            if k
        ]
        mono = "*".join(factors)
        if not mono:
            body = poly.ring.format(magnitude)
        elif magnitude == 1:
            body = mono
        else:
            body = f"{poly.ring.format(magnitude)}*{mono}"
        if not pieces:
            pieces.append(f"-{body}" if negative else body)
        else:
            pieces.append(f"- {body}" if negative else f"+ {body}")
    return " ".join(pieces)


def apply_permutation(poly: Polynomial, sigma: Permutation) -> Polynomial:
    return poly.permute(sigma)


def valuation_along(poly: Polynomial, i: int, j: int) -> Order:
    """
    Largest r with (x_i - x_j)^r dividing the polynomial.

    Substitutes x_j = x_i + u and returns the lowest u-degree present;
    the zero polynomial has valuation infinity.
    """
    if i == j or {i, j} - {1, 2, 3}:
        raise UnsupportedOperationError(f"valuation along ({i}, {j}) is undefined")
    if poly.is_zero:
        return INFINITY
    k = 6 - i - j
    ring = poly.ring
    items = list(poly.terms.items())
    top = max(e[j - 1] for e, _ in items)
    for t in range(top + 1):
        acc: dict[tuple[int, int], Scalar] = {}
        for e, c in items:
            b = e[j - 1]
            if b < t:
                continue
            key = (e[i - 1] + b - t, e[k - 1])
            acc[key] = acc.get(key, 0) + math.comb(b, t) * c
        if any(ring.normalize(v) != 0 for v in acc.values()):
            return t
    raise ContractViolationError("nonzero polynomial with infinite valuation")


def reduce_mod_p(poly: Polynomial, p: int) -> Polynomial:
    """Coefficient-wise image in F_p of an integer or p-integral rational polynomial."""
    if poly.ring.characteristic != 0:
        raise DomainMismatchError(f"reduce_mod_p expects ZZ or QQ, got {poly.ring}")
    return poly.change_ring(GF(p))


def elementary_symmetric(i: int, ring: CoefficientRing = ZZ) -> Polynomial:
    if i == 1:
        return Polynomial(ring, {(1, 0, 0): 1, (0, 1, 0): 1, (0, 0, 1): 1})
    if i == 2:
        return Polynomial(ring, {(1, 1, 0): 1, (1, 0, 1): 1, (0, 1, 1): 1})
    if i == 3:
        return Polynomial(ring, {(1, 1, 1): 1})
    raise UnsupportedOperationError(
        f"no elementary symmetric polynomial e{i} in 3 variables"
    )


def linear_form(
    ring: CoefficientRing, c1: Scalar, c2: Scalar, c3: Scalar
) -> Polynomial:
    return Polynomial(ring, {(1, 0, 0): c1, (0, 1, 0): c2, (0, 0, 1): c3})


def vandermonde(ring: CoefficientRing) -> Polynomial:
    """Delta = (x1 - x2)(x1 - x3)(x2 - x3)."""
    return (
        linear_form(ring, 1, -1, 0)
        * linear_form(ring, 1, 0, -1)
        * linear_form(ring, 0, 1, -1)
    )


def symmetric_exponents(d: int) -> Iterator[tuple[int, int, int]]:
    """(a, b, c) with a + 2b + 3c = d, i.e. monomials e1^a e2^b e3^c of degree d."""
    for c in range(d // 3, -1, -1):
        for b in range((d - 3 * c) // 2, -1, -1):
            yield (d - 3 * c - 2 * b, b, c)


def count_symmetric_monomials(d: int) -> int:
    return sum(1 for _ in symmetric_exponents(d)) if d >= 0 else 0


@lru_cache(maxsize=4096)
def symmetric_monomial(a: int, b: int, c: int, ring: CoefficientRing) -> Polynomial:
    """e1^a * e2^b * e3^c, built incrementally from cached smaller products."""
    if a:
        return symmetric_monomial(a - 1, b, c, ring) * elementary_symmetric(1, ring)
    if b:
        return symmetric_monomial(a, b - 1, c, ring) * elementary_symmetric(2, ring)
    if c:
        return Polynomial(ring, {(c, c, c): 1})
    return Polynomial.constant(ring, 1)


def m_d_polynomial(d: int) -> Polynomial:
    """M_d = (x1 + x2 - 2x3)^(d mod 2) (x1 - x3)^(d // 2) (x2 - x3)^(d // 2) over F3."""
    f3 = GF(3)
    half = d // 2
    return (
        linear_form(f3, 1, 1, -2) ** (d % 2)
        * linear_form(f3, 1, 0, -1) ** half
        * linear_form(f3, 0, 1, -1) ** half
    )


def is_symmetric(poly: Polynomial) -> bool:
    return poly.permute(S12) == poly and poly.permute(S23) == poly


def divmod_poly(poly: Polynomial, divisor: Polynomial) -> tuple[Polynomial, Polynomial]:
    """
    Division by a single polynomial under graded-lex order.

    The remainder is zero exactly when the divisor divides the input.
    """
    poly._check(divisor)
    ring = poly.ring
    lead, lead_coeff = divisor.leading_term()
    inv = ring.inverse(lead_coeff)
    work = dict(poly.terms)
    quotient: dict[tuple[int, int, int], Scalar] = {}
    remainder: dict[tuple[int, int, int], Scalar] = {}
    div_terms = list(divisor.terms.items())
    while work:
        e = max(work, key=glex_key)
        c = work[e]
        if all(e[t] >= lead[t] for t in range(3)):
            shift = (e[0] - lead[0], e[1] - lead[1], e[2] - lead[2])
            factor = ring.mul(c, inv)
            quotient[shift] = ring.add(quotient.get(shift, 0), factor)
            for (d1, d2, d3), dc in div_terms:
                key = (d1 + shift[0], d2 + shift[1], d3 + shift[2])
                value = ring.sub(work.get(key, 0), ring.mul(factor, dc))
                if value == 0:
                    work.pop(key, None)
                else:
                    work[key] = value
        else:
            remainder[e] = c
            del work[e]
    return Polynomial(ring, quotient), Polynomial(ring, remainder)


def shifted_x3_degree(poly: Polynomial, mod_square: bool = False) -> int:
    """
    Degree in x3 after the change of variables x1 = x3 + v + w, x2 = x3 + v.

    Here w = x1 - x2 and v = x2 - x3, so this is the x3-degree with respect
    to the basis {x1 - x3, x2 - x3, x3}. With ``mod_square`` the expansion
    is taken modulo (x1 - x2)^2. Returns -1 when nothing survives.
    """
    ring = poly.ring
    acc: dict[tuple[int, int, int], Scalar] = {}
    for (a, b, c), coeff in poly.terms.items():
        for r in range(min(a, 1) + 1 if mod_square else a + 1):
            rest = a - r + b
            for s in range(rest + 1):
                key = (r, s + c, rest - s)
                term = coeff * math.comb(a, r) * math.comb(rest, s)
                acc[key] = acc.get(key, 0) + term
    return max((key[1] for key, v in acc.items() if ring.normalize(v) != 0), default=-1)


def combine(
    ring: CoefficientRing, pairs: Iterable[tuple[Scalar, Polynomial]]
) -> Polynomial:
    """Linear combination sum(c * P)."""
    total = Polynomial.zero(ring)
    for c, poly in pairs:
        if c != 0:
            total = total + poly.scale(c)
    return total


def frobenius_power(poly: Polynomial, a: int) -> Polynomial:
    """
    poly ** (p ** a) over F_p, computed by scaling exponents.

    Coefficients are fixed because c ** p = c in the prime field.
    """
    p = poly.ring.characteristic
    if p == 0:
        raise UnsupportedOperationError("Frobenius needs a prime field")
    q = p**a
    return Polynomial._trusted(
        poly.ring, {(e[0] * q, e[1] * q, e[2] * q): c for e, c in poly.terms.items()}
    )
