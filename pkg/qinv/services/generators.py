"""
Explicit free generators of Q_m(3, F2) and Q_m(3, F3), and the S3-module
bookkeeping around them.

Over F2 the generators are written down directly. Over F3 the two
sign-triv generators K, L come from eigenspace searches at the degrees
predicted by the counterexample arithmetic, and K1, L1 are the
s23-invariant lifts of K, L through (1 - s12).
"""

import logging
from collections.abc import Sequence
from dataclasses import dataclass, field

from qinv.algebra.coeff_ring import GF, Scalar, ring_for
from qinv.algebra.linalg import express_in_span, left_kernel, rank_of, row_reduce
from qinv.algebra.mpoly import (
    CYCLE,
    S3,
    S12,
    S13,
    S23,
    Permutation,
    Polynomial,
    combine,
    frobenius_power,
    glex_key,
    linear_form,
    monomials_of_degree,
    vandermonde,
)
from qinv.core.config import settings
from qinv.core.exceptions import (
    BudgetExceededError,
    ContractViolationError,
    DomainMismatchError,
    UnclassifiedModuleError,
    UnsupportedOperationError,
)
from qinv.core.models import GradedComponentBasis, QuasiOrder
from qinv.schemas.modules import (
    DegreeCheck,
    FailureKind,
    ModuleFingerprint,
    RepLabel,
    VerifyFailure,
    VerifyReport,
)
from qinv.services.hilbert import hilbert_shape, series_of_free_module
from qinv.services.quasi_core import QuasiOracle, coefficient_row, is_m_quasi_invariant
from qinv.services.renxu import char2_exponent, lowest_generator_degree

logger = logging.getLogger(__name__)

TRIV = RepLabel(name="triv")
SIGN = RepLabel(name="sign")
STD = RepLabel(name="std")
TRIV_TRIV = RepLabel(name="triv-triv")
SIGN_TRIV = RepLabel(name="sign-triv")
TRIV_SIGN = RepLabel(name="triv-sign")
TRIV_SIGN_TRIV = RepLabel(name="triv-sign-triv")
SIGN_TRIV_SIGN = RepLabel(name="sign-triv-sign")

# (dim, fixed_dim, sign_dim) -> label
_F3_TABLE: dict[tuple[int, int, int], RepLabel] = {
    (1, 1, 0): TRIV,
    (1, 0, 1): SIGN,
    (2, 1, 0): SIGN_TRIV,
    (2, 0, 1): TRIV_SIGN,
    (2, 1, 1): RepLabel.decomposable("triv", "sign"),
    (3, 1, 0): TRIV_SIGN_TRIV,
    (3, 0, 1): SIGN_TRIV_SIGN,
    (3, 2, 0): RepLabel.decomposable("triv", "sign-triv"),
    (3, 0, 2): RepLabel.decomposable("sign", "triv-sign"),
}

# (dim, fixed_dim) -> label
_F2_TABLE: dict[tuple[int, int], RepLabel] = {
    (1, 1): TRIV,
    (2, 0): STD,
    (2, 1): TRIV_TRIV,
    (3, 1): RepLabel.decomposable("std", "triv"),
}


@dataclass(frozen=True)
class SpecialPolynomials:
    """
    Named polynomials over F_p.

    Attributes:
        delta: The Vandermonde product (x1 - x2)(x1 - x3)(x2 - x3).
        e_triv_triv: x1^2 x2 + x2^2 x3 + x3^2 x1, a triv-triv generator over F2.
        e: -x1^2 x2 - x1^2 x3 + x1 x2^2 + x1 x3^2, a triv-sign vector over F3.
        f: (x1 - x2) x1 x2, a sign-triv-sign generator over F3.
    """

    delta: Polynomial
    e_triv_triv: Polynomial
    e: Polynomial
    f: Polynomial


def special_polys(p: int) -> SpecialPolynomials:
    ring = ring_for(p)
    return SpecialPolynomials(
        delta=vandermonde(ring),
        e_triv_triv=Polynomial(ring, {(2, 1, 0): 1, (0, 2, 1): 1, (1, 0, 2): 1}),
        e=Polynomial(
            ring, {(2, 1, 0): -1, (2, 0, 1): -1, (1, 2, 0): 1, (1, 0, 2): 1}
        ),
        f=linear_form(ring, 1, -1, 0) * Polynomial(ring, {(1, 1, 0): 1}),
    )


@dataclass(frozen=True)
class GeneratorEntry:
    poly: Polynomial
    rep: RepLabel

    @property
    def degree(self) -> int:
        return self.poly.degree


def orbit_generators(entry: GeneratorEntry) -> list[Polynomial]:
    """
    Module generators contributed by one entry.

    A std entry spans a 2-dimensional orbit and contributes itself and its
    s23-image; every other entry contributes itself.
    """
    if entry.rep == STD:
        return [entry.poly, entry.poly.permute(S23)]
    return [entry.poly]


@dataclass(frozen=True)
class GeneratorSet:
    """
    Candidate free generators of Q_m(3, F_p) over the symmetric polynomials.

    Attributes:
        order: Quasi-invariance order; its characteristic is the field.
        entries: Generators with their representation labels.
        verified_to: Last degree certified by ``verify_free_generation``.
    """

    order: QuasiOrder
    entries: tuple[GeneratorEntry, ...]
    verified_to: int | None = field(default=None, compare=False)

    @property
    def p(self) -> int:
        return self.order.characteristic

    @property
    def module_generators(self) -> list[Polynomial]:
        return [g for entry in self.entries for g in orbit_generators(entry)]

    @property
    def orbit_degrees(self) -> list[int]:
        return sorted(g.degree for g in self.module_generators)


def _check_generator_set(gens: GeneratorSet) -> GeneratorSet:
    for entry in gens.entries:
        if not is_m_quasi_invariant(entry.poly, gens.order):
            raise ContractViolationError(
                f"{entry.rep} generator of degree {entry.degree} "
                f"is not quasi-invariant for {gens.order}"
            )
    expected = sorted(hilbert_shape(gens.order).exponents)
    if gens.orbit_degrees != expected:
        raise ContractViolationError(
            f"generator degrees {gens.orbit_degrees} do not match "
            f"the series numerator {expected}"
        )
    return gens


def char2_generator_set(order: QuasiOrder) -> GeneratorSet:
    """
    Free generators of Q_m(3, F2) for integer or half-integer m.

    1, E_triv-triv * Delta^(2m), G1 = (x1 - x2)^(2^(a+1)) and
    G2 = (x1 - x2)^(2^a) * Delta^(2m+1-2^a), where 2^a is the largest power
    of two below 2m + 1. For m = 0 the std pair is x1 - x2, (x1 - x2)^2.

    Raises:
        UnsupportedOperationError: If the order is not over F2.
    """
    if order.characteristic != 2:
        raise UnsupportedOperationError(
            f"char2_generator_set needs characteristic 2, got {order}"
        )
    special = special_polys(2)
    w = linear_form(GF(2), 1, -1, 0)
    if order.twice_m == 0:
        g1, g2 = w, w**2
    else:
        a = char2_exponent(order)
        g1 = frobenius_power(w, a + 1)
        g2 = frobenius_power(w, a) * special.delta ** (order.twice_m + 1 - 2**a)
    one = Polynomial.constant(GF(2), 1)
    entries = (
        GeneratorEntry(one, TRIV),
        GeneratorEntry(special.e_triv_triv * special.delta**order.twice_m, TRIV_TRIV),
        GeneratorEntry(g1, STD),
        GeneratorEntry(g2, STD),
    )
    return _check_generator_set(GeneratorSet(order, entries))


def sign_pairing(k_poly: Polynomial, l_poly: Polynomial) -> Polynomial:
    """K * s23(L) - L * s23(K), a nonzero multiple of Delta^(2m+1) when K, L pair."""
    return k_poly * l_poly.permute(S23) - l_poly * k_poly.permute(S23)


def triv_triv_pairing(k_poly: Polynomial, l_poly: Polynomial) -> Polynomial:
    """K * L + s13(K) * s23(L); (1 + s12) of it is Delta^(2m+1) for the F2 std pair."""
    return k_poly * l_poly + k_poly.permute(S13) * l_poly.permute(S23)


def module_fingerprint(poly: Polynomial, p: int | None = None) -> ModuleFingerprint:
    """
    Dimensions that identify the cyclic module span{sigma K : sigma in S3}.

    Args:
        poly: Nonzero polynomial over a field; need not be homogeneous.
        p: Expected characteristic, checked against the polynomial's ring.

    Returns:
        ModuleFingerprint: dim V and the dimensions of its fixed, sign and
                           3-cycle-fixed subspaces.

    Raises:
        ContractViolationError: For the zero polynomial.
        DomainMismatchError: If ``p`` differs from the ring's characteristic.
    """
    if poly.is_zero:
        raise ContractViolationError("the zero polynomial generates no module")
    ring = poly.ring
    if p is not None and ring.characteristic != p:
        raise DomainMismatchError(f"polynomial over {ring} classified for p={p}")
    if not ring.is_field:
        raise UnsupportedOperationError(f"module fingerprints need a field, got {ring}")

    orbit = [poly.permute(sigma) for sigma in S3]
    columns = sorted({e for g in orbit for e in g.terms}, key=glex_key, reverse=True)
    index = {e: i for i, e in enumerate(columns)}
    rows = [coefficient_row(g, index, ring) for g in orbit]
    ech = row_reduce(rows, ring, len(columns))
    basis = [
        Polynomial(ring, {columns[c]: v for c, v in enumerate(row) if v != 0})
        for row in ech.rows
    ]

    def eigen_dim(conditions: Sequence[tuple[Permutation, int]]) -> int:
        vectors: list[list[Scalar]] = []
        for b in basis:
            row: list[Scalar] = []
            for sigma, eigenvalue in conditions:
                moved = b.permute(sigma) - b.scale(eigenvalue)
                row.extend(coefficient_row(moved, index, ring))
            vectors.append(row)
        return len(left_kernel(vectors, ring, len(columns) * len(conditions)))

    return ModuleFingerprint(
        dim=ech.rank,
        fixed_dim=eigen_dim([(S12, 1), (S23, 1)]),
        sign_dim=eigen_dim([(S12, -1), (S23, -1)]),
        cycle_fixed_dim=eigen_dim([(CYCLE, 1)]),
    )


def classify_module(poly: Polynomial, p: int | None = None) -> RepLabel:
    """
    Name the cyclic S3-module generated by a polynomial over F2 or F3.

    Raises:
        UnclassifiedModuleError: If the fingerprint is not in the table.
        UnsupportedOperationError: Outside characteristics 2 and 3.
    """
    fingerprint = module_fingerprint(poly, p)
    characteristic = poly.ring.characteristic
    label: RepLabel | None
    if characteristic == 3:
        label = _F3_TABLE.get(
            (fingerprint.dim, fingerprint.fixed_dim, fingerprint.sign_dim)
        )
    elif characteristic == 2:
        label = _F2_TABLE.get((fingerprint.dim, fingerprint.fixed_dim))
    else:
        raise UnsupportedOperationError(
            f"classification tables exist for F2 and F3, not {poly.ring}"
        )
    if label is None:
        raise UnclassifiedModuleError(fingerprint)
    return label


class GeneratorService:
    """
    Oracle-backed construction and verification of generator sets.

    Responsibilities:
        - Search the F3 generators K, L, K1, L1 in the oracle's eigenspaces.
        - Certify free generation degree by degree against the oracle.

    Dependencies:
        - QuasiOracle: component dimensions and eigenspace bases.
    """

    def __init__(self, oracle: QuasiOracle | None = None) -> None:
        self.oracle = oracle or QuasiOracle()

    @staticmethod
    def _check_budget(order: QuasiOrder) -> None:
        limit = settings.oracle.max_verify_m
        if order.twice_m > 2 * limit:
            raise BudgetExceededError(
                f"{order} exceeds oracle.max_verify_m={limit}"
            )

    def generator_set(self, order: QuasiOrder) -> GeneratorSet:
        if order.characteristic == 2:
            return char2_generator_set(order)
        if order.characteristic == 3:
            return self.char3_generator_set(order)
        raise UnsupportedOperationError(
            f"generator sets exist over F2 and F3, not {order}"
        )

    def _lift_through_s12(
        self, component: GradedComponentBasis, target: Polynomial
    ) -> Polynomial:
        """
        The s23-invariant T in the component with (1 - s12)T = target.

        Unknowns are coordinates on the echelon basis; free coordinates are
        set to zero, which removes the symmetric part of the solution space.
        """
        ring = target.ring
        index = {e: i for i, e in enumerate(component.columns)}
        zeros: list[Scalar] = [ring.zero] * len(index)
        vectors = [
            coefficient_row(b - b.permute(S12), index, ring)
            + coefficient_row(b - b.permute(S23), index, ring)
            for b in component.basis
        ]
        rhs = coefficient_row(target, index, ring) + zeros
        solution = express_in_span(vectors, rhs, ring)
        if solution is None:
            raise ContractViolationError(
                f"no s23-invariant lift of a degree-{target.degree} generator "
                f"for {component.order}"
            )
        return combine(ring, zip(solution, component.basis, strict=True))

    def _complement_generator(
        self, order: QuasiOrder, k: Polynomial, degree: int
    ) -> Polynomial:
        ring = k.ring
        eigenspace = self.oracle.eigen_component(order, degree, S12, -1)
        index = {e: i for i, e in enumerate(monomials_of_degree(degree))}
        span = [
            coefficient_row(product, index, ring)
            for _, product in QuasiOracle.symmetric_multiples(k, degree)
        ]
        base_rank = rank_of(span, ring, len(index))
        if eigenspace.dimension != base_rank + 1:
            raise ContractViolationError(
                f"(-1)-eigenspace of s12 in degree {degree} has dimension "
                f"{eigenspace.dimension}, expected {base_rank + 1} for {order}"
            )
        # smallest leading monomial first
        for vector, candidate in zip(
            reversed(eigenspace.vectors), reversed(eigenspace.basis), strict=True
        ):
            if rank_of([*span, list(vector)], ring, len(index)) > base_rank:
                return candidate
        raise ContractViolationError(f"no generator L in degree {degree} for {order}")

    def char3_generator_set(self, order: QuasiOrder) -> GeneratorSet:
        """
        Free generators 1, K, L, K1, L1, F * Delta^(2m) of Q_m(3, F3).

        K spans the lowest (-1)-eigenvector of s12 (the echelon vector with
        the largest leading monomial), L is an eigenvector in the
        complementary degree 6m + 3 - deg K outside the symmetric multiples
        of K, and K1, L1 are their s23-invariant lifts through (1 - s12).

        Args:
            order: An integer order over F3.

        Returns:
            GeneratorSet: Six entries, each checked to be quasi-invariant.

        Raises:
            BudgetExceededError: If m exceeds ``oracle.max_verify_m``.
            ContractViolationError: If a search finds no candidate at the
                                    predicted degree.
        """
        if order.characteristic != 3:
            raise UnsupportedOperationError(
                f"char3_generator_set needs characteristic 3, got {order}"
            )
        m = order.integer_m()
        self._check_budget(order)
        d_low = lowest_generator_degree(order)
        d_high = order.top_degree - d_low
        logger.info(
            "searching generators for %s in degrees %d and %d", order, d_low, d_high
        )

        low = self.oracle.eigen_component(order, d_low, S12, -1)
        if not low.basis:
            raise ContractViolationError(
                f"no (-1)-eigenvector of s12 in degree {d_low} for {order}"
            )
        k = low.basis[0]
        l_poly = self._complement_generator(order, k, d_high)
        k1 = self._lift_through_s12(self.oracle.component_basis(order, d_low), k)
        l1 = self._lift_through_s12(self.oracle.component_basis(order, d_high), l_poly)

        special = special_polys(3)
        one = Polynomial.constant(k.ring, 1)
        entries = (
            GeneratorEntry(one, TRIV),
            GeneratorEntry(k, SIGN_TRIV),
            GeneratorEntry(l_poly, SIGN_TRIV),
            GeneratorEntry(k1, TRIV_SIGN_TRIV),
            GeneratorEntry(l1, TRIV_SIGN_TRIV),
            GeneratorEntry(special.f * special.delta ** (2 * m), SIGN_TRIV_SIGN),
        )
        return _check_generator_set(GeneratorSet(order, entries))

    def _dimensions(self, order: QuasiOrder, degrees: list[int]) -> list[int]:
        if settings.oracle.workers > 1:
            from qinv.tasks.sweep import sweep_dimensions

            return sweep_dimensions(
                order, degrees, settings.oracle.workers, repo=self.oracle.repo
            )
        return [self.oracle.dim_component(order, d) for d in degrees]

    def verify_free_generation(
        self, gens: GeneratorSet, max_degree: int | None = None
    ) -> VerifyReport:
        """
        Certify that the generators freely span Q_m(3, F_p) up to a degree.

        In each degree d the products e1^a e2^b e3^c * g over all module
        generators g are row reduced. Once every generator is known to be
        quasi-invariant, rank == dim_component means they span the
        component, and rank == number of products means no relation holds.
        The component dimension must also equal the free-module series
        coefficient of the generator degrees.

        Args:
            gens: Generators to check; ``gens.order`` fixes p and m.
            max_degree: Last degree checked. Defaults to 6m + relation_margin.

        Returns:
            VerifyReport: Per-degree rank data and the first failure, if any.

        Raises:
            BudgetExceededError: If m exceeds ``oracle.max_verify_m``.
        """
        order = gens.order
        self._check_budget(order)
        if max_degree is None:
            max_degree = 3 * order.twice_m + settings.oracle.relation_margin
        ring = ring_for(order.characteristic)
        checks: list[DegreeCheck] = []

        def report(
            kind: FailureKind | None = None,
            degree: int | None = None,
            detail: str = "",
        ) -> VerifyReport:
            failure = None
            if kind is not None:
                failure = VerifyFailure(kind=kind, degree=degree, detail=detail)
            if failure is not None:
                logger.warning("free generation fails for %s: %s", order, detail)
            return VerifyReport(
                p=order.characteristic,
                twice_m=order.twice_m,
                max_degree=max_degree,
                degrees=checks,
                failure=failure,
            )

        for entry in gens.entries:
            if not is_m_quasi_invariant(entry.poly, order):
                return report(
                    "quasi-invariance",
                    entry.degree,
                    f"generator {entry.poly} is not quasi-invariant",
                )

        generators = gens.module_generators
        expected = series_of_free_module((g.degree for g in generators), max_degree + 1)
        dims = self._dimensions(order, list(range(max_degree + 1)))

        for degree, dimension in enumerate(dims):
            index = {e: i for i, e in enumerate(monomials_of_degree(degree))}
            rows = [
                coefficient_row(product, index, ring)
                for g in generators
                for _, product in QuasiOracle.symmetric_multiples(g, degree)
            ]
            rank = rank_of(rows, ring, len(index)) if rows else 0
            checks.append(
                DegreeCheck(
                    degree=degree,
                    dimension=dimension,
                    products=len(rows),
                    rank=rank,
                    expected=expected[degree],
                )
            )
            logger.info(
                "%s degree %d: rank %d of %d products, dim %d",
                order,
                degree,
                rank,
                len(rows),
                dimension,
            )
            if rank < dimension:
                return report(
                    "spanning",
                    degree,
                    f"products span {rank} of {dimension} dimensions "
                    f"in degree {degree}",
                )
            if rank < len(rows):
                return report(
                    "freeness",
                    degree,
                    f"{len(rows) - rank} relation(s) among the products "
                    f"in degree {degree}",
                )
            if expected[degree] != dimension:
                return report(
                    "series",
                    degree,
                    f"series predicts {expected[degree]}, oracle gives {dimension} "
                    f"in degree {degree}",
                )
        return report()

    def verified(
        self, gens: GeneratorSet, max_degree: int | None = None
    ) -> tuple[GeneratorSet, VerifyReport]:
        """Run the free-generation check and record the certified degree on the set."""
        result = self.verify_free_generation(gens, max_degree)
        verified_to = result.max_degree if result.success else None
        return GeneratorSet(gens.order, gens.entries, verified_to), result
