from qinv.services.generators import (
    GeneratorEntry,
    GeneratorService,
    GeneratorSet,
    char2_generator_set,
    classify_module,
    module_fingerprint,
    orbit_generators,
    sign_pairing,
    special_polys,
    triv_triv_pairing,
)
from qinv.services.hilbert import (
    HilbertService,
    palindrome_check,
    series_char0,
    series_closed_form,
    series_of_free_module,
)
from qinv.services.quasi_core import QuasiOracle, is_m_quasi_invariant, quasi_order
from qinv.services.quasi_service import QuasiService
from qinv.services.renxu import (
    RenXuService,
    in_X,
    minimal_counterexample,
    remark_formula,
    staircase_info,
)

__all__ = (
    "GeneratorEntry",
    "GeneratorService",
    "GeneratorSet",
    "HilbertService",
    "QuasiOracle",
    "QuasiService",
    "RenXuService",
    "char2_generator_set",
    "classify_module",
    "in_X",
    "is_m_quasi_invariant",
    "minimal_counterexample",
    "module_fingerprint",
    "orbit_generators",
    "palindrome_check",
    "quasi_order",
    "remark_formula",
    "series_char0",
    "series_closed_form",
    "series_of_free_module",
    "sign_pairing",
    "special_polys",
    "staircase_info",
    "triv_triv_pairing",
)
