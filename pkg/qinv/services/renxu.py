"""
Degree arithmetic of the lowest nonsymmetric generators.

Over F3 the lowest generator of Q_m(3, F3) sits in degree 3m + 1, as in
characteristic zero, unless m lies in the set X of integers whose base-3
expansion contains a digit 1. For m in X a Ren-Xu counterexample
P_k^(3^a) * Delta^(2b) exists below that degree; the minimal one is found by
a small search. Over F2 the degrees follow from the largest a with
2^a < 2m + 1.
"""

import logging
import math

from qinv.algebra.coeff_ring import QQ, ZZ, integer_content
from qinv.algebra.mpoly import (
    S12,
    Polynomial,
    frobenius_power,
    reduce_mod_p,
    vandermonde,
)
from qinv.core.config import settings
from qinv.core.exceptions import (
    BudgetExceededError,
    ContractViolationError,
    QuasiOrderError,
    UnsupportedOperationError,
)
from qinv.core.models import QuasiOrder
from qinv.schemas.renxu import (
    CounterexampleSpec,
    RemarkEstimate,
    StaircaseInfo,
    StaircaseRow,
)
from qinv.services.quasi_core import (
    QuasiOracle,
    is_m_quasi_invariant,
    symmetric_dimension,
)

logger = logging.getLogger(__name__)


def base3_digits(m: int) -> list[int]:
    """Base-3 digits of m, units first; [] for 0."""
    digits: list[int] = []
    while m:
        m, digit = divmod(m, 3)
        digits.append(digit)
    return digits


def _in_X_interval(m: int) -> bool:  # noqa: N802
    # 1/3 <= {m / 3^a} <= 2/3 - 1/3^a, written as a bound on m mod 3^a
    for a in range(1, len(base3_digits(m)) + 2):
        rest = m % 3**a
        if 3 ** (a - 1) <= rest <= 2 * 3 ** (a - 1) - 1:
            return True
    return False


def in_X(m: int) -> bool:  # noqa: N802
    """
    True iff some base-3 digit of m is 1.

    Raises:
        ContractViolationError: If the digit test and the interval test disagree.
    """
    if m < 0:
        raise QuasiOrderError(f"m must be non-negative, got {m}")
    by_digits = 1 in base3_digits(m)
    if by_digits != _in_X_interval(m):
        raise ContractViolationError(f"digit and interval membership disagree at m={m}")
    return by_digits


def conjecture_interval_check(m: int, n: int = 3, p: int = 3) -> bool:
    """
    Whether a, k >= 0 exist with (3m+3)/(3k+2) <= 3^a <= 3m/(3k+1).

    Only n = 3, p = 3 is supported.
    """
    if (n, p) != (3, 3):
        raise UnsupportedOperationError(
            f"interval check implemented for n=3, p=3 only, got n={n}, p={p}"
        )
    power = 1
    while power <= 3 * m:
        k = 0
        while power * (3 * k + 1) <= 3 * m:
            if 3 * m + 3 <= power * (3 * k + 2):
                return True
            k += 1
        power *= 3
    return False


def _ceil_log3(n: int) -> int:
    a, power = 0, 1
    while power < n:
        power *= 3
        a += 1
    return a


def _min_b(m: int, a: int, k: int) -> int:
    return max((2 * m + 1 - 3**a * (2 * k + 1)) // 2, 0)


def minimal_counterexample(m: int) -> CounterexampleSpec | None:
    """
    Lowest-degree Ren-Xu counterexample for Q_m(3, F3).

    Candidates are a in 1..ceil(log3(2m+1)), k in 0..m with k not in X, and
    the minimal b making 3^a(2k+1) + 2b >= 2m + 1. Ties on degree go to the
    smallest (a, k).

    Returns:
        CounterexampleSpec | None: None exactly when m is not in X.
    """
    best: CounterexampleSpec | None = None
    for a in range(1, _ceil_log3(2 * m + 1) + 1):
        for k in range(m + 1):
            if in_X(k):
                continue
            b = _min_b(m, a, k)
            degree = 3**a * (3 * k + 1) + 6 * b
            if degree >= 3 * m + 1:
                continue
            if best is None or degree < best.degree:
                best = CounterexampleSpec(a=a, k=k, b=b, degree=degree)
    if (best is None) == in_X(m):
        raise ContractViolationError(f"counterexample search disagrees with X at m={m}")
    return best


def lowest_generator_degree(order: QuasiOrder) -> int:
    """
    Degree d of the lowest nonsymmetric generator of Q_m(3, k).

    F3: degree of the minimal counterexample, else 3m + 1. F2: min(2^(a+1),
    6m + 3 - 2^(a+1)), 1 for m = 0. QQ: 3m + 1.
    """
    p = order.characteristic
    if p == 2:
        if order.twice_m == 0:
            return 1
        low, _ = char2_degrees(order)
        return min(low, order.top_degree - low)
    m = order.integer_m()
    if p == 0:
        return 3 * m + 1
    if p == 3:
        spec = minimal_counterexample(m)
        return 3 * m + 1 if spec is None else spec.degree
    raise UnsupportedOperationError(
        f"generator degrees are known for p in {{0, 2, 3}}, not {p}"
    )


def char2_degrees(order: QuasiOrder) -> tuple[int, int]:
    """
    Degrees of the two std generators of Q_m(3, F2).

    (x1 - x2)^(2^(a+1)) and (x1 - x2)^(2^a) * Delta^(2m+1-2^a), with a the
    largest integer such that 2^a < 2m + 1; (1, 2) for m = 0.
    """
    if order.characteristic != 2:
        raise UnsupportedOperationError(
            f"char2_degrees needs characteristic 2, got {order}"
        )
    if order.twice_m == 0:
        return (1, 2)
    a = char2_exponent(order)
    return (2 ** (a + 1), 2**a + 3 * (order.twice_m + 1 - 2**a))


def char2_exponent(order: QuasiOrder) -> int:
    """Largest a with 2^a < 2m + 1 (m > 0)."""
    if order.twice_m == 0:
        raise UnsupportedOperationError("no exponent a for m = 0")
    return order.twice_m.bit_length() - 1


def staircase_info(m: int) -> StaircaseInfo:
    """
    Locate m on its staircase.

    With t the largest non-member of X below m and R_(t+1) = P_k^(3^a)..., the
    degree stays flat for t+1 <= m <= t+d and climbs by 6 per step for
    t+d < m < t+2d, where d = (3^(a-1) + 1) / 2.

    Raises:
        ContractViolationError: If m is not in X, or the staircase identities
                                fail.
    """
    if not in_X(m):
        raise ContractViolationError(f"m={m} is not in X, no staircase")
    t = max(j for j in range(m) if not in_X(j))
    head = minimal_counterexample(t + 1)
    if head is None:
        raise ContractViolationError(f"t+1={t + 1} has no counterexample")
    d = (3 ** (head.a - 1) + 1) // 2
    if 2 * (t + d) != 3**head.a * (2 * head.k + 1) - 1:
        raise ContractViolationError(f"staircase width mismatch at m={m}")
    if in_X(t + 2 * d):
        raise ContractViolationError(
            f"staircase from t={t} does not close at {t + 2 * d}"
        )

    if m <= t + d:
        phase, degree = "flat", head.degree
    elif m < t + 2 * d:
        phase, degree = "climbing", 3 * t + 3 + 6 * (m - t - d)
    else:
        raise ContractViolationError(f"m={m} lies past the staircase from t={t}")

    spec = minimal_counterexample(m)
    if spec is None or spec.degree != degree:
        raise ContractViolationError(
            f"staircase degree {degree} disagrees with the search at m={m}"
        )
    return StaircaseInfo(t=t, a=head.a, k=head.k, d=d, phase=phase, degree=degree)


def remark_formula(m: int) -> RemarkEstimate | None:
    """
    Closed-form estimate of the minimal counterexample.

    a is the highest base-3 position (units digit = 1) holding a 1,
    k = ceil((ceil(m / 3^a) - 1) / 2) and degree = 3^a(2k + 1) + 6b. It is
    known to disagree with the search (m = 7), so callers only report it.
    """
    digits = base3_digits(m)
    if 1 not in digits:
        return None
    a = max(pos for pos, digit in enumerate(digits, start=1) if digit == 1)
    k = (-(-m // 3**a)) // 2
    b = _min_b(m, a, k)
    return RemarkEstimate(a=a, k=k, b=b, degree=3**a * (2 * k + 1) + 6 * b)


class RenXuService:
    """
    Polynomials behind the counterexample arithmetic.

    Builds the characteristic-zero generators P_k by an exact rational
    solve and assembles counterexamples P_k^(3^a) * Delta^(2b) over F3.

    Dependencies:
        - QuasiOracle: eigenspace solves over QQ and F3.
    """

    def __init__(self, oracle: QuasiOracle | None = None) -> None:
        self.oracle = oracle or QuasiOracle()

    def char0_generator(self, k: int) -> Polynomial:
        """
        The degree-(3k+1) generator of Q_k(3, QQ) in the (-1)-eigenspace of s12.

        Args:
            k: Generator index, at most ``oracle.char0_max_k``.

        Returns:
            Polynomial: Over ZZ, coprime coefficients, positive leading coefficient.

        Raises:
            BudgetExceededError: If k exceeds the configured budget.
            ContractViolationError: If the solution space is not one-dimensional.
        """
        if k > settings.oracle.char0_max_k:
            raise BudgetExceededError(
                f"k={k} exceeds oracle.char0_max_k={settings.oracle.char0_max_k}"
            )
        order = QuasiOrder.integer(k, 0)
        space = self.oracle.eigen_component(order, 3 * k + 1, S12, -1)
        if space.dimension != 1:
            raise ContractViolationError(
                f"P_{k} space has dimension {space.dimension}, expected 1"
            )
        generator = space.basis[0]
        scale = math.lcm(
            *(QQ.normalize(c).denominator for c in generator.terms.values())
        )
        ints = {e: int(QQ.normalize(c) * scale) for e, c in generator.terms.items()}
        content = integer_content(list(ints.values()))
        poly = Polynomial(ZZ, {e: c // content for e, c in ints.items()})
        if poly.leading_term()[1] < 0:
            poly = -poly
        return poly

    def pk_mod3(self, k: int) -> Polynomial:
        """Reduction of P_k modulo 3; nonzero by coprimality."""
        reduced = reduce_mod_p(self.char0_generator(k), 3)
        if reduced.is_zero:
            raise ContractViolationError(f"P_{k} vanishes modulo 3")
        return reduced

    def counterexample_polynomial(self, spec: CounterexampleSpec, m: int) -> Polynomial:
        """
        P_k^(3^a) * Delta^(2b) over F3, checked to be m-quasi-invariant.

        Raises:
            ContractViolationError: If the product is not m-quasi-invariant.
        """
        base = self.pk_mod3(spec.k)
        poly = frobenius_power(base, spec.a) * vandermonde(base.ring) ** (2 * spec.b)
        if not is_m_quasi_invariant(poly, QuasiOrder.integer(m, 3)):
            raise ContractViolationError(
                f"counterexample (a={spec.a}, k={spec.k}, b={spec.b}) fails for m={m}"
            )
        return poly

    def first_excess_degree(self, order: QuasiOrder, limit: int) -> int | None:
        """First degree d <= limit where Q_m(3, k) exceeds the symmetric polynomials."""
        for degree in range(limit + 1):
            if self.oracle.dim_component(order, degree) > symmetric_dimension(degree):
                return degree
        return None

    def staircase_table(self, max_m: int, verify: bool = False) -> list[StaircaseRow]:
        """
        Generator degrees of Q_m(3, F3) for m = 0..max_m.

        With ``verify`` the lower degree of every row is recomputed as the
        first degree where the oracle finds a nonsymmetric quasi-invariant.

        Raises:
            BudgetExceededError: If ``verify`` is set and max_m exceeds
                                 ``oracle.max_verify_m``.
        """
        if verify and max_m > settings.oracle.max_verify_m:
            raise BudgetExceededError(
                f"--verify up to m={max_m} exceeds "
                f"oracle.max_verify_m={settings.oracle.max_verify_m}"
            )
        rows: list[StaircaseRow] = []
        for m in range(max_m + 1):
            order = QuasiOrder.integer(m, 3)
            lower = lowest_generator_degree(order)
            member = in_X(m)
            verified = None
            if verify:
                verified = self.first_excess_degree(order, lower) == lower
                logger.info(
                    "m=%d: lower degree %d %s",
                    m,
                    lower,
                    "confirmed" if verified else "NOT confirmed",
                )
            rows.append(
                StaircaseRow(
                    m=m,
                    lower=lower,
                    upper=order.top_degree - lower,
                    in_X=member,
                    phase=staircase_info(m).phase if member else "closed",
                    verified=verified,
                )
            )
        return rows
