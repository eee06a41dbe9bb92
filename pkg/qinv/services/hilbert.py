"""
Hilbert series of Q_m(3, k): closed forms and the oracle's empirical series.

Every closed form is a free module over the symmetric polynomials, so its
series is a numerator polynomial divided by (1 - t)(1 - t^2)(1 - t^3). The
division is three prefix-sum passes, one per factor 1 / (1 - t^k).
"""

import logging
from collections.abc import Iterable

from pydantic import BaseModel

from qinv.core.config import settings
from qinv.core.exceptions import BudgetExceededError
from qinv.core.models import QuasiOrder
from qinv.schemas.series import HilbertShape, TruncatedSeries
from qinv.services.quasi_core import QuasiOracle
from qinv.services.renxu import lowest_generator_degree

logger = logging.getLogger(__name__)


def series_of_free_module(
    generator_degrees: Iterable[int], terms: int
) -> TruncatedSeries:
    """
    Series of a free module over k[e1, e2, e3] with the given generator degrees.

    Args:
        generator_degrees: Degree multiset of the free generators.
        terms: Number of coefficients to return.

    Returns:
        TruncatedSeries: sum(t^deg) / ((1-t)(1-t^2)(1-t^3)) up to t^(terms-1).
    """
    coefficients = [0] * terms
    for degree in generator_degrees:
        if degree < terms:
            coefficients[degree] += 1
    for k in (1, 2, 3):
        for d in range(k, terms):
            coefficients[d] += coefficients[d - k]
    return TruncatedSeries(coefficients=coefficients)


def hilbert_shape(order: QuasiOrder) -> HilbertShape:
    return HilbertShape(
        p=order.characteristic,
        twice_m=order.twice_m,
        d_low=lowest_generator_degree(order),
    )


def series_closed_form(order: QuasiOrder, terms: int) -> TruncatedSeries:
    """
    (1 + 2t^d + 2t^(6m+3-d) + t^(6m+3)) / ((1-t)(1-t^2)(1-t^3)).

    d is the lowest nonsymmetric generator degree of the order.
    """
    return series_of_free_module(hilbert_shape(order).exponents, terms)


def series_char0(m: int, terms: int) -> TruncatedSeries:
    """Characteristic-zero series: the closed form with d = 3m + 1."""
    low, high = 3 * m + 1, 3 * m + 2
    return series_of_free_module((0, low, low, high, high, 6 * m + 3), terms)


def palindrome_check(shape: HilbertShape) -> bool:
    """True iff the numerator exponents are symmetric under e -> 6m + 3 - e."""
    exponents = sorted(shape.exponents)
    return exponents == sorted(shape.top_degree - e for e in exponents)


class HilbertComparison(BaseModel):
    """Closed form, characteristic-zero and optional empirical series side by side."""

    closed_form: TruncatedSeries
    char0: TruncatedSeries | None
    empirical: TruncatedSeries | None
    match: bool | None
    extended: bool


class HilbertService:
    """
    Empirical Hilbert series from the oracle, and their comparison with the
    closed forms.

    Dependencies:
        - QuasiOracle: component dimensions.
    """

    def __init__(self, oracle: QuasiOracle | None = None) -> None:
        self.oracle = oracle or QuasiOracle()

    @staticmethod
    def term_budget(order: QuasiOrder) -> int:
        """6m + oracle.empirical_margin."""
        return 3 * order.twice_m + settings.oracle.empirical_margin

    def series_empirical(
        self, order: QuasiOrder, terms: int | None = None
    ) -> TruncatedSeries:
        """
        Series whose coefficient d is dim_component(order, d).

        Args:
            order: Quasi-invariance order.
            terms: Number of coefficients; defaults to the budget 6m + margin.

        Returns:
            TruncatedSeries: The oracle's dimensions.

        Raises:
            BudgetExceededError: If ``terms`` exceeds the budget.
        """
        budget = self.term_budget(order)
        if terms is None:
            terms = budget
        if terms > budget:
            raise BudgetExceededError(
                f"{terms} terms requested for {order}; the budget is 6m + "
                f"{settings.oracle.empirical_margin} = {budget}"
            )
        degrees = list(range(terms))
        if settings.oracle.workers > 1:
            from qinv.tasks.sweep import sweep_dimensions

            dims = sweep_dimensions(
                order, degrees, settings.oracle.workers, repo=self.oracle.repo
            )
        else:
            dims = []
            for degree in degrees:
                dims.append(self.oracle.dim_component(order, degree))
                logger.info("%s degree %d: dim %d", order, degree, dims[-1])
        return TruncatedSeries(coefficients=dims)

    def compare(
        self, order: QuasiOrder, terms: int, empirical: bool = False
    ) -> HilbertComparison:
        """
        Closed form next to the characteristic-zero shape and, on request,
        the oracle.

        ``char0`` is None for half-integer m; ``match`` is None unless the
        empirical series was computed.
        """
        closed = series_closed_form(order, terms)
        char0 = None
        if not order.is_half_integer:
            char0 = series_char0(order.twice_m // 2, terms)
        measured = self.series_empirical(order, terms) if empirical else None
        match = None if measured is None else measured == closed
        if match is False:
            logger.warning(
                "empirical series differs from the closed form for %s", order
            )
        return HilbertComparison(
            closed_form=closed,
            char0=char0,
            empirical=measured,
            match=match,
            extended=order.is_half_integer,
        )
