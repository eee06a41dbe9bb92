from dataclasses import dataclass

from qinv.algebra.coeff_ring import ring_for
from qinv.algebra.mpoly import INFINITY, format_poly
from qinv.algebra.poly_parser import parse_poly
from qinv.core.models import QuasiOrder
from qinv.schemas.modules import VerifyReport
from qinv.schemas.renxu import RemarkEstimate, StaircaseRow
from qinv.schemas.results import (
    CheckRead,
    ClassifyRead,
    CounterexampleRead,
    DimRead,
    GeneratorRead,
    HilbertRead,
    NoCounterexampleRead,
)
from qinv.services.generators import (
    GeneratorService,
    GeneratorSet,
    classify_module,
    module_fingerprint,
)
from qinv.services.hilbert import HilbertService
from qinv.services.quasi_core import QuasiOracle, quasi_order
from qinv.services.renxu import RenXuService, minimal_counterexample, remark_formula


@dataclass(frozen=True)
class CounterexampleResult:
    """
    Minimal counterexample together with the closed-form estimate.

    Attributes:
        read: The counterexample, or the ``none`` marker.
        remark: Closed-form estimate; None when m is not in X.
        agrees: Whether the estimate matches the search; None without one.
    """

    read: CounterexampleRead | NoCounterexampleRead
    remark: RemarkEstimate | None
    agrees: bool | None


class QuasiService:
    """
    Service layer behind the command-line and HTTP surfaces.

    Every method takes already-validated parameters and returns the read
    schema the surfaces render, so the CLI and the routes share one code
    path per command.

    Responsibilities:
        - Parse user polynomials over the requested field
        - Run the oracle, series, counterexample and generator services
        - Shape their results into read schemas

    Dependencies:
        - QuasiOracle: shared by every underlying service so cached
          components are reused across commands.
    """

    def __init__(self, oracle: QuasiOracle | None = None) -> None:
        """
        Initialize the service stack.

        Args:
            oracle: Oracle to share. Defaults to one backed by the
                    process-wide component repository.
        """
        self.oracle = oracle or QuasiOracle()
        self.hilbert = HilbertService(self.oracle)
        self.renxu = RenXuService(self.oracle)
        self.generators = GeneratorService(self.oracle)

    def dim(self, order: QuasiOrder, degree: int) -> DimRead:
        return DimRead(
            p=order.characteristic,
            m2=order.twice_m,
            degree=degree,
            dimension=self.oracle.dim_component(order, degree),
        )

    def hilbert_series(
        self, order: QuasiOrder, terms: int | None = None, empirical: bool = False
    ) -> HilbertRead:
        """
        Closed-form series, optionally compared with the oracle.

        Args:
            order: Quasi-invariance order.
            terms: Coefficients to report; defaults to the oracle budget 6m + margin.
            empirical: Also compute the oracle's series and compare.

        Raises:
            BudgetExceededError: If an empirical series beyond the budget is requested.
        """
        if terms is None:
            terms = self.hilbert.term_budget(order)
        comparison = self.hilbert.compare(order, terms, empirical=empirical)
        return HilbertRead(
            closed_form=comparison.closed_form.coefficients,
            empirical=(
                None
                if comparison.empirical is None
                else comparison.empirical.coefficients
            ),
            char0=None if comparison.char0 is None else comparison.char0.coefficients,
            match=comparison.match,
            extended=comparison.extended,
        )

    def check(self, order: QuasiOrder, text: str) -> CheckRead:
        poly = parse_poly(text, ring_for(order.characteristic))
        if poly.is_zero:
            return CheckRead(quasi_order=None, m2=order.twice_m, quasi_invariant=True)
        value = quasi_order(poly)
        return CheckRead(
            quasi_order="infinity" if value == INFINITY else int(value),
            m2=order.twice_m,
            quasi_invariant=value >= order.r,
        )

    def counterexample(self, m: int) -> CounterexampleResult:
        """
        Minimal Ren-Xu counterexample for Q_m(3, F3) with its polynomial.

        Raises:
            BudgetExceededError: If the P_k it needs is beyond ``oracle.char0_max_k``.
        """
        spec = minimal_counterexample(m)
        remark = remark_formula(m)
        if spec is None:
            return CounterexampleResult(NoCounterexampleRead(), remark, None)
        poly = self.renxu.counterexample_polynomial(spec, m)
        read = CounterexampleRead(
            a=spec.a, k=spec.k, b=spec.b, degree=spec.degree, poly=format_poly(poly)
        )
        agrees = None if remark is None else remark.degree == spec.degree
        return CounterexampleResult(read, remark, agrees)

    def generator_set(self, order: QuasiOrder) -> GeneratorSet:
        return self.generators.generator_set(order)

    def generator_reads(self, gens: GeneratorSet) -> list[GeneratorRead]:
        return [
            GeneratorRead(poly=format_poly(e.poly), degree=e.degree, rep=str(e.rep))
            for e in gens.entries
        ]

    def verify(self, order: QuasiOrder, max_degree: int | None = None) -> VerifyReport:
        gens = self.generator_set(order)
        return self.generators.verify_free_generation(gens, max_degree)

    def classify(self, p: int, text: str) -> ClassifyRead:
        poly = parse_poly(text, ring_for(p))
        fingerprint = module_fingerprint(poly, p)
        return ClassifyRead(
            dim=fingerprint.dim,
            fixed_dim=fingerprint.fixed_dim,
            sign_dim=fingerprint.sign_dim,
            label=str(classify_module(poly, p)),
        )

    def staircase(self, max_m: int, verify: bool = False) -> list[StaircaseRow]:
        return self.renxu.staircase_table(max_m, verify)
