"""
The brute-force oracle for spaces of quasi-invariants.

A homogeneous component of Q_m(3, k) is the kernel of a linear system whose
unknowns are the monomial coefficients of degree d. For every transposition
s_ij the substitution x_j = x_i + u turns (1 - s_ij)K into a polynomial in
(x_i, u, x_k); requiring the coefficients of u^t to vanish for t < 2m + 1
gives one equation per (pair, t, exponent of x_k).
"""

import logging
import math
from collections.abc import Sequence
from dataclasses import dataclass

from qinv.algebra.coeff_ring import CoefficientRing, Scalar, ring_for
from qinv.algebra.linalg import (
    LinearSystem,
    express_in_span,
    kernel_from_echelon,
    left_kernel,
    rank_of,
)
from qinv.algebra.mpoly import (
    INFINITY,
    TRANSPOSITIONS,
    ExponentVector,
    Order,
    Permutation,
    Polynomial,
    combine,
    monomials_of_degree,
    symmetric_exponents,
    symmetric_monomial,
    valuation_along,
)
from qinv.core.exceptions import (
    ContractViolationError,
    DomainMismatchError,
    UndefinedOrderError,
    UnsupportedOperationError,
)
from qinv.core.models import GradedComponentBasis, QuasiOrder, component_key
from qinv.repositories import ComponentRepository, component_repository

logger = logging.getLogger(__name__)


def quasi_order(poly: Polynomial) -> Order:
    """
    Largest r such that (x_i - x_j)^r divides (1 - s_ij)K for all i < j.

    Args:
        poly: A nonzero polynomial.

    Returns:
        Order: The minimum valuation over the three transpositions;
               ``INFINITY`` exactly when the polynomial is symmetric.

    Raises:
        UndefinedOrderError: For the zero polynomial.
    """
    if poly.is_zero:
        raise UndefinedOrderError("quasi_order of the zero polynomial is undefined")
    best: Order = INFINITY
    for (i, j), sigma in TRANSPOSITIONS.items():
        best = min(best, valuation_along(poly - poly.permute(sigma), i, j))
    return best


def is_m_quasi_invariant(poly: Polynomial, order: QuasiOrder) -> bool:
    if poly.ring.characteristic != order.characteristic:
        raise DomainMismatchError(
            f"polynomial over {poly.ring} tested against {order}"
        )
    return poly.is_zero or quasi_order(poly) >= order.r


def symmetric_dimension(degree: int) -> int:
    """Number of monomials e1^a e2^b e3^c of the given degree."""
    return sum(1 for _ in symmetric_exponents(degree)) if degree >= 0 else 0


def coefficient_row(
    poly: Polynomial, index: dict[tuple[int, int, int], int], ring: CoefficientRing
) -> list[Scalar]:
    row: list[Scalar] = [ring.zero] * len(index)
    for e, c in poly.terms.items():
        row[index[e]] = c
    return row


@dataclass(frozen=True)
class SpanResult:
    """
    Outcome of a symmetric-module membership test.

    Attributes:
        contained: Whether the target lies in the module span.
        witness: One symmetric coefficient per generator when contained.
    """

    contained: bool
    witness: tuple[Polynomial, ...] | None = None

    def __bool__(self) -> bool:
        return self.contained


@dataclass(frozen=True)
class Relation:
    """
    A nontrivial syzygy sum(P_i * g_i) = 0 with symmetric P_i.

    Attributes:
        degree: Degree of the products P_i * g_i.
        coefficients: The symmetric polynomials P_i, one per generator.
    """

    degree: int
    coefficients: tuple[Polynomial, ...]


class QuasiOracle:
    """
    Exact linear-algebra oracle for Q_m(3, F_p) and Q_m(3, QQ).

    Every component is computed by solving the constraint system directly,
    so the closed forms elsewhere in the package can be checked against it.

    Dependencies:
        - ComponentRepository: cache of computed bases and dimensions.
    """

    def __init__(self, repository: ComponentRepository | None = None) -> None:
        """
        Initialize the oracle.

        Args:
            repository: Component cache. Defaults to the process-wide one.
        """
        self.repo = repository if repository is not None else component_repository

    def constraint_system(self, order: QuasiOrder, degree: int) -> LinearSystem:
        """
        Quasi-invariance conditions on the degree-d monomial coefficients.

        Row for (i, j), t and c = e_k: sum over monomials with e_k = c of
        (C(e_j, t) - C(e_i, t)) * coeff(e). The t = 0 rows vanish identically.

        Args:
            order: The quasi-invariance order.
            degree: Total degree of the unknown polynomial.

        Returns:
            LinearSystem: Columns are the degree-d monomials, graded-lex descending.
        """
        ring = ring_for(order.characteristic)
        columns = monomials_of_degree(degree)
        system = LinearSystem(ring, columns)
        for (i, j) in TRANSPOSITIONS:
            k = 6 - i - j
            for c in range(degree + 1):
                block = [e for e in columns if e[k - 1] == c]
                for t in range(1, min(order.r, degree - c + 1)):
                    system.add_row(
                        {
                            e: math.comb(e[j - 1], t) - math.comb(e[i - 1], t)
                            for e in block
                        }
                    )
        return system

    def _eigen_rows(
        self, system: LinearSystem, sigma: Permutation, eigenvalue: int
    ) -> None:
        for f in system.columns:
            image = ExponentVector(*sigma.act(f))
            if image == f:
                system.add_row({f: 1 - eigenvalue})
            else:
                system.add_row({image: 1, f: -eigenvalue})

    def dim_component(self, order: QuasiOrder, degree: int) -> int:
        """
        Dimension of the degree-d piece of Q_m(3, k).

        Args:
            order: Quasi-invariance order; its characteristic selects the field.
            degree: Total degree.

        Returns:
            int: Kernel dimension of the constraint system.
        """
        if degree < 0:
            return 0
        key = component_key(order, degree)
        cached = self.repo.get_dimension(key)
        if cached is not None:
            return cached
        system = self.constraint_system(order, degree)
        dimension = system.n_cols - system.rank()
        self.repo.add_dimension(key, dimension)
        logger.debug("dim %s degree %d = %d", order, degree, dimension)
        return dimension

    def _basis_from_system(
        self,
        order: QuasiOrder,
        degree: int,
        system: LinearSystem,
        eigen: tuple[Permutation, int] | None,
    ) -> GradedComponentBasis:
        ring = system.ring
        vectors = kernel_from_echelon(system.echelon(), ring)
        columns = tuple(system.columns)
        basis = tuple(
            Polynomial(
                ring, {e: v for e, v in zip(columns, vec, strict=True) if v != 0}
            )
            for vec in vectors
        )
        return GradedComponentBasis(
            order=order,
            degree=degree,
            basis=basis,
            columns=columns,
            vectors=tuple(tuple(vec) for vec in vectors),
            eigen=eigen,
        )

    def component_basis(self, order: QuasiOrder, degree: int) -> GradedComponentBasis:
        """
        Reduced-echelon basis of the degree-d piece of Q_m(3, k).

        Args:
            order: Quasi-invariance order.
            degree: Total degree (non-negative).

        Returns:
            GradedComponentBasis: Basis whose length is ``dim_component``.
        """
        key = component_key(order, degree)
        cached = self.repo.get(key)
        if cached is not None:
            return cached
        basis = self._basis_from_system(
            order, degree, self.constraint_system(order, degree), None
        )
        self.repo.add(basis)
        return basis

    def eigen_component(
        self,
        order: QuasiOrder,
        degree: int,
        transposition: Permutation,
        eigenvalue: int,
    ) -> GradedComponentBasis:
        """
        Eigenspace of a transposition inside the degree-d component.

        Args:
            order: Quasi-invariance order.
            degree: Total degree.
            transposition: One of S12, S13, S23.
            eigenvalue: +1 or -1.

        Returns:
            GradedComponentBasis: Echelon basis of the eigenspace.

        Raises:
            UnsupportedOperationError: For eigenvalue -1 in characteristic 2,
                                       or a non-transposition.
        """
        if eigenvalue not in (1, -1):
            raise UnsupportedOperationError(
                f"eigenvalue must be +1 or -1, got {eigenvalue}"
            )
        if eigenvalue == -1 and order.characteristic == 2:
            raise UnsupportedOperationError(
                "eigenvalue -1 equals +1 in characteristic 2"
            )
        if transposition not in TRANSPOSITIONS.values():
            raise UnsupportedOperationError(f"{transposition} is not a transposition")
        eigen = (transposition, eigenvalue)
        key = component_key(order, degree, eigen)
        cached = self.repo.get(key)
        if cached is not None:
            return cached
        system = self.constraint_system(order, degree)
        self._eigen_rows(system, transposition, eigenvalue)
        basis = self._basis_from_system(order, degree, system, eigen)
        self.repo.add(basis)
        return basis

    @staticmethod
    def symmetric_multiples(
        generator: Polynomial, degree: int
    ) -> list[tuple[tuple[int, int, int], Polynomial]]:
        """All products e1^a e2^b e3^c * g landing in the given degree."""
        gap = degree - generator.degree
        if gap < 0:
            return []
        ring = generator.ring
        return [
            (abc, symmetric_monomial(*abc, ring) * generator)
            for abc in symmetric_exponents(gap)
        ]

    @staticmethod
    def _check_homogeneous(polys: Sequence[Polynomial], what: str) -> None:
        for poly in polys:
            if poly.is_zero:
                raise ContractViolationError(f"{what} contains the zero polynomial")
            if not poly.is_homogeneous:
                raise ContractViolationError(f"{what} {poly} is not homogeneous")

    def in_module_span(
        self, target: Polynomial, generators: Sequence[Polynomial]
    ) -> SpanResult:
        """
        Decide whether target = sum(P_i * g_i) with every P_i symmetric.

        Args:
            target: Homogeneous polynomial to express.
            generators: Homogeneous module generators over the same ring.

        Returns:
            SpanResult: Membership flag and, when contained, the P_i.

        Raises:
            ContractViolationError: If an input is not homogeneous.
        """
        self._check_homogeneous(generators, "generator")
        ring = target.ring
        if target.is_zero:
            return SpanResult(True, tuple(Polynomial.zero(ring) for _ in generators))
        self._check_homogeneous([target], "target")

        degree = target.degree
        index = {e: i for i, e in enumerate(monomials_of_degree(degree))}
        labels: list[tuple[int, tuple[int, int, int]]] = []
        vectors: list[list[Scalar]] = []
        for g_index, generator in enumerate(generators):
            for abc, product in self.symmetric_multiples(generator, degree):
                labels.append((g_index, abc))
                vectors.append(coefficient_row(product, index, ring))

        solution = express_in_span(vectors, coefficient_row(target, index, ring), ring)
        if solution is None:
            return SpanResult(False)
        return SpanResult(True, self._witness(ring, generators, labels, solution))

    @staticmethod
    def _witness(
        ring: CoefficientRing,
        generators: Sequence[Polynomial],
        labels: list[tuple[int, tuple[int, int, int]]],
        coefficients: Sequence[Scalar],
    ) -> tuple[Polynomial, ...]:
        parts: list[list[tuple[Scalar, Polynomial]]] = [[] for _ in generators]
        for (g_index, abc), c in zip(labels, coefficients, strict=True):
            parts[g_index].append((c, symmetric_monomial(*abc, ring)))
        return tuple(combine(ring, pairs) for pairs in parts)

    def find_relation(
        self, generators: Sequence[Polynomial], max_degree: int
    ) -> Relation | None:
        """
        Search for a symmetric syzygy among the generators.

        Degrees are scanned upward from the lowest generator degree; the
        first relation found is returned as the reduced-echelon kernel vector.

        Args:
            generators: Homogeneous generators over one ring.
            max_degree: Last degree searched (inclusive).

        Returns:
            Relation | None: The first relation, or None if none exists up to
                             ``max_degree``.
        """
        self._check_homogeneous(generators, "generator")
        if not generators:
            return None
        ring = generators[0].ring
        for degree in range(min(g.degree for g in generators), max_degree + 1):
            index = {e: i for i, e in enumerate(monomials_of_degree(degree))}
            labels: list[tuple[int, tuple[int, int, int]]] = []
            vectors: list[list[Scalar]] = []
            for g_index, generator in enumerate(generators):
                for abc, product in self.symmetric_multiples(generator, degree):
                    labels.append((g_index, abc))
                    vectors.append(coefficient_row(product, index, ring))
            if not vectors or rank_of(vectors, ring, len(index)) == len(vectors):
                continue
            kernel = left_kernel(vectors, ring, len(index))
            logger.info(
                "relation among %d generators in degree %d", len(generators), degree
            )
            return Relation(degree, self._witness(ring, generators, labels, kernel[0]))
        return None
