from dataclasses import dataclass

from qinv.algebra.coeff_ring import Scalar
from qinv.algebra.mpoly import ExponentVector, Permutation, Polynomial
from qinv.core.models.quasi_order import QuasiOrder

EigenSlice = tuple[tuple[int, int, int], int] | None
ComponentKey = tuple[int, int, int, EigenSlice]


@dataclass(frozen=True)
class GradedComponentBasis:
    """
    Reduced-echelon basis of one homogeneous piece of Q_m(3, k).

    ``vectors[i]`` is the coefficient row of ``basis[i]`` against
    ``columns`` (all monomials of the degree, graded-lex descending), so
    the pivot of each row is the leading monomial of its polynomial.

    Attributes:
        order: The quasi-invariance order (carries the characteristic).
        degree: Total degree of every basis element.
        basis: The basis polynomials.
        columns: Monomials indexing the coefficient rows.
        vectors: Coefficient rows in reduced echelon form.
        eigen: ``(transposition images, eigenvalue)`` when the basis spans an
            eigenspace slice rather than the whole component.
    """

    order: QuasiOrder
    degree: int
    basis: tuple[Polynomial, ...]
    columns: tuple[ExponentVector, ...]
    vectors: tuple[tuple[Scalar, ...], ...]
    eigen: tuple[Permutation, int] | None = None

    @property
    def p(self) -> int:
        return self.order.characteristic

    @property
    def dimension(self) -> int:
        return len(self.basis)

    @property
    def key(self) -> ComponentKey:
        return component_key(self.order, self.degree, self.eigen)

    def __len__(self) -> int:
        return len(self.basis)


def component_key(
    order: QuasiOrder, degree: int, eigen: tuple[Permutation, int] | None = None
) -> ComponentKey:
    eigen_slice: EigenSlice = None if eigen is None else (eigen[0].images, eigen[1])
    return (order.characteristic, order.twice_m, degree, eigen_slice)
