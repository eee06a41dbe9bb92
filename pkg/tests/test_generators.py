import pytest

from qinv.algebra import (
    CYCLE,
    GF,
    QQ,
    S3,
    S12,
    S13,
    S23,
    ZZ,
    Polynomial,
    PrimeField,
    elementary_symmetric,
    parse_poly,
    valuation_along,
)
from qinv.algebra.mpoly import divmod_poly, linear_form
from qinv.core.exceptions import (
    BudgetExceededError,
    ContractViolationError,
    DomainMismatchError,
    UnclassifiedModuleError,
    UnsupportedOperationError,
)
from qinv.core.models import QuasiOrder
from qinv.schemas.modules import RepLabel
from qinv.services import (
    GeneratorEntry,
    GeneratorService,
    GeneratorSet,
    QuasiOracle,
    char2_generator_set,
    classify_module,
    is_m_quasi_invariant,
    module_fingerprint,
    orbit_generators,
    quasi_order,
    sign_pairing,
    special_polys,
    triv_triv_pairing,
)
from qinv.services.generators import (
    SIGN_TRIV,
    SIGN_TRIV_SIGN,
    STD,
    TRIV,
    TRIV_SIGN,
    TRIV_SIGN_TRIV,
    TRIV_TRIV,
)


def symmetrize_s12(poly: Polynomial) -> Polynomial:
    return poly + poly.permute(S12)


def test_special_polys(f3: PrimeField) -> None:
    """
    Test the named polynomials over F3 and their relations.

    Args:
        f3: The field F3.
    """
    special = special_polys(3)
    assert special.delta == (
        linear_form(f3, 1, -1, 0)
        * linear_form(f3, 1, 0, -1)
        * linear_form(f3, 0, 1, -1)
    )
    assert special.delta.permute(S12) == -special.delta
    assert special.f == parse_poly("x1^2*x2 - x1*x2^2", f3)
    assert special.f + special.f.permute(S23) == -special.e
    assert special.e.permute(S23) == special.e
    assert special_polys(2).e_triv_triv == parse_poly(
        "x1^2*x2 + x2^2*x3 + x3^2*x1", GF(2)
    )


@pytest.mark.parametrize(
    ("twice_m", "degrees"),
    [
        (0, [0, 3, 1, 2]),
        (1, [0, 6, 2, 4]),
        (2, [0, 9, 4, 5]),
        (4, [0, 15, 8, 7]),
    ],
)
def test_char2_generator_set(twice_m: int, degrees: list[int]) -> None:
    """
    Test generator degrees and labels over F2.

    Args:
        twice_m: 2m.
        degrees: Degrees of 1, E_tt Delta^(2m), G1 and G2.
    """
    gens = char2_generator_set(QuasiOrder(twice_m, 2))
    assert [entry.degree for entry in gens.entries] == degrees
    assert [entry.rep for entry in gens.entries] == [TRIV, TRIV_TRIV, STD, STD]
    assert len(gens.module_generators) == 6
    assert all(is_m_quasi_invariant(g, gens.order) for g in gens.module_generators)


def test_char2_g1_is_a_frobenius_power() -> None:
    gens = char2_generator_set(QuasiOrder(2, 2))
    assert gens.entries[2].poly == parse_poly("x1^4 + x2^4", GF(2))


def test_char2_generator_set_needs_f2() -> None:
    with pytest.raises(UnsupportedOperationError):
        char2_generator_set(QuasiOrder(2, 3))


@pytest.mark.parametrize("twice_m", range(0, 5))
def test_triv_triv_pairing(twice_m: int) -> None:
    """
    Test that (1 + s12) of the std pairing is Delta^(2m+1) over F2.

    Args:
        twice_m: 2m.
    """
    gens = char2_generator_set(QuasiOrder(twice_m, 2))
    g1, g2 = gens.entries[2].poly, gens.entries[3].poly
    delta = special_polys(2).delta
    assert symmetrize_s12(triv_triv_pairing(g1, g2)) == delta ** (twice_m + 1)


def test_orbit_generators(f2: PrimeField) -> None:
    """
    Test that std entries contribute their s23-image.

    Args:
        f2: The field F2.
    """
    w = parse_poly("x1 + x2", f2)
    assert orbit_generators(GeneratorEntry(w, STD)) == [w, parse_poly("x1 + x3", f2)]
    assert orbit_generators(GeneratorEntry(w, TRIV)) == [w]


def test_char3_generators_at_m_zero(oracle: QuasiOracle, f3: PrimeField) -> None:
    """
    Test the explicit F3 generators for m = 0.

    Args:
        oracle: Oracle with a fresh cache.
        f3: The field F3.
    """
    gens = GeneratorService(oracle).char3_generator_set(QuasiOrder(0, 3))
    expected = [
        "1",
        "x1 - x2",
        "x1*x3 - x2*x3",
        "x1",
        "x1*x2 + x1*x3",
        "x1^2*x2 - x1*x2^2",
    ]
    assert [entry.poly for entry in gens.entries] == [
        parse_poly(text, f3) for text in expected
    ]
    assert [entry.rep for entry in gens.entries] == [
        TRIV,
        SIGN_TRIV,
        SIGN_TRIV,
        TRIV_SIGN_TRIV,
        TRIV_SIGN_TRIV,
        SIGN_TRIV_SIGN,
    ]
    assert [entry.degree for entry in gens.entries] == [0, 1, 2, 1, 2, 3]
    for entry in gens.entries:
        assert classify_module(entry.poly, 3) == entry.rep


def test_char3_generator_relations_at_m_zero(oracle: QuasiOracle) -> None:
    """
    Test the lifts and the sign pairing of the m = 0 generators.

    Args:
        oracle: Oracle with a fresh cache.
    """
    gens = GeneratorService(oracle).char3_generator_set(QuasiOrder(0, 3))
    _, k, l_poly, k1, l1, _ = (entry.poly for entry in gens.entries)
    special = special_polys(3)

    assert k1 - k1.permute(S12) == k
    assert l1 - l1.permute(S12) == l_poly
    assert k1.permute(S23) == k1
    assert l1.permute(S23) == l1
    assert sign_pairing(k, l_poly) == special.delta
    assert oracle.in_module_span(special.delta, [k, l_poly])
    assert oracle.in_module_span(special.e, [k1, l1])


def test_char3_generators_at_m_one(oracle: QuasiOracle, f3: PrimeField) -> None:
    """
    Test the F3 generators for m = 1, where the low degree drops to 3.

    Args:
        oracle: Oracle with a fresh cache.
        f3: The field F3.
    """
    gens = GeneratorService(oracle).char3_generator_set(QuasiOrder.integer(1, 3))
    assert gens.orbit_degrees == [0, 3, 3, 6, 6, 9]
    assert gens.entries[1].poly == parse_poly("x1 - x2", f3) ** 3
    k, l_poly = gens.entries[1].poly, gens.entries[2].poly
    pairing = sign_pairing(k, l_poly)
    assert not pairing.is_zero
    assert pairing.degree == 9


@pytest.mark.parametrize("m", range(0, 3))
def test_char3_sign_triv_generators(
    oracle: QuasiOracle, f3: PrimeField, m: int
) -> None:
    """
    Test the cyclic sums of K and L and the exact (x1 - x2)-valuation of K.

    Args:
        oracle: Oracle with a fresh cache.
        f3: The field F3.
        m: Integer order.
    """
    gens = GeneratorService(oracle).char3_generator_set(QuasiOrder.integer(m, 3))
    k, l_poly = gens.entries[1].poly, gens.entries[2].poly
    for poly in (k, l_poly):
        rotated = poly.permute(CYCLE)
        assert (poly + rotated + rotated.permute(CYCLE)).is_zero
        assert valuation_along(poly, 1, 2) >= 2 * m + 1

    assert valuation_along(k, 1, 2) == 2 * m + 1
    quotient, remainder = divmod_poly(k, parse_poly("x1 - x2", f3) ** (2 * m + 1))
    assert remainder.is_zero
    for i in (1, 2, 3):
        assert not divmod_poly(quotient, elementary_symmetric(i, f3))[1].is_zero


def test_generator_set_dispatch(oracle: QuasiOracle) -> None:
    """
    Test the characteristic dispatch and the budget guard.

    Args:
        oracle: Oracle with a fresh cache.
    """
    service = GeneratorService(oracle)
    assert service.generator_set(QuasiOrder(1, 2)).p == 2
    with pytest.raises(UnsupportedOperationError):
        service.generator_set(QuasiOrder.integer(1, 0))
    with pytest.raises(UnsupportedOperationError):
        service.char3_generator_set(QuasiOrder(2, 2))
    with pytest.raises(BudgetExceededError):
        service.char3_generator_set(QuasiOrder.integer(13, 3))


@pytest.mark.parametrize(
    ("p", "text", "label"),
    [
        (2, "x1^2*x2 + x2^2*x3 + x3^2*x1", TRIV_TRIV),
        (2, "x1 + x2", STD),
        (2, "x1", RepLabel.decomposable("std", "triv")),
        (2, "1", TRIV),
        (3, "x1 - x2", SIGN_TRIV),
        (3, "x1*x3 - x2*x3", SIGN_TRIV),
        (3, "x1", TRIV_SIGN_TRIV),
        (3, "x1*x2 + x1*x3", TRIV_SIGN_TRIV),
        (3, "-x1^2*x2 - x1^2*x3 + x1*x2^2 + x1*x3^2", TRIV_SIGN),
        (3, "x1^2*x2 - x1*x2^2", SIGN_TRIV_SIGN),
        (3, "x1*x2*x3", TRIV),
    ],
)
def test_classify_module(p: int, text: str, label: RepLabel) -> None:
    """
    Test classification of cyclic S3-modules, also for every permuted generator.

    Args:
        p: Characteristic.
        text: Generator of the module.
        label: Expected label.
    """
    poly = parse_poly(text, GF(p))
    assert classify_module(poly, p) == label
    for sigma in S3:
        assert classify_module(poly.permute(sigma)) == label


def test_classify_decomposable_over_f3(f3: PrimeField) -> None:
    poly = Polynomial.constant(f3, 1) + special_polys(3).delta
    assert classify_module(poly) == RepLabel.decomposable("triv", "sign")
    assert classify_module(poly).is_decomposable


def test_module_fingerprint(f3: PrimeField) -> None:
    """
    Test the raw fingerprint of the permutation module spanned by x1.

    Args:
        f3: The field F3.
    """
    fingerprint = module_fingerprint(parse_poly("x1", f3))
    assert (fingerprint.dim, fingerprint.fixed_dim, fingerprint.sign_dim) == (3, 1, 0)
    assert fingerprint.cycle_fixed_dim == 1


def test_classify_errors(f3: PrimeField) -> None:
    """
    Test the rejected inputs of the classifier.

    Args:
        f3: The field F3.
    """
    with pytest.raises(ContractViolationError):
        classify_module(Polynomial.zero(f3))
    with pytest.raises(UnsupportedOperationError):
        classify_module(parse_poly("x1", QQ))
    with pytest.raises(UnsupportedOperationError):
        classify_module(parse_poly("x1", ZZ))
    with pytest.raises(DomainMismatchError):
        classify_module(parse_poly("x1", f3), 2)
    with pytest.raises(UnclassifiedModuleError):
        classify_module(parse_poly("x1^2*x2", f3))


def test_verify_char3_m_zero(oracle: QuasiOracle) -> None:
    """
    Test free generation over F3 for m = 0 through degree 10.

    Args:
        oracle: Oracle with a fresh cache.
    """
    service = GeneratorService(oracle)
    gens = service.char3_generator_set(QuasiOrder(0, 3))
    report = service.verify_free_generation(gens, 10)
    assert report.success
    assert report.max_degree == 10
    assert [check.degree for check in report.degrees] == list(range(11))
    for check in report.degrees:
        assert check.rank == check.dimension == check.expected


@pytest.mark.parametrize("twice_m", range(0, 3))
def test_verify_char2_small(oracle: QuasiOracle, twice_m: int) -> None:
    """
    Test free generation over F2, half-integer m included.

    Args:
        oracle: Oracle with a fresh cache.
        twice_m: 2m.
    """
    order = QuasiOrder(twice_m, 2)
    report = GeneratorService(oracle).verify_free_generation(char2_generator_set(order))
    assert report.success
    assert report.max_degree == 3 * twice_m + 6


def test_verify_detects_missing_generators(oracle: QuasiOracle, f3: PrimeField) -> None:
    """
    Test that {1, x1 - x2} fails to span Q_0 in degree 1.

    Args:
        oracle: Oracle with a fresh cache.
        f3: The field F3.
    """
    gens = GeneratorSet(
        QuasiOrder(0, 3),
        (
            GeneratorEntry(Polynomial.constant(f3, 1), TRIV),
            GeneratorEntry(parse_poly("x1 - x2", f3), SIGN_TRIV),
        ),
    )
    report = GeneratorService(oracle).verify_free_generation(gens, 4)
    assert not report.success
    assert report.failure is not None
    assert report.failure.kind == "spanning"
    assert report.failure.degree == 1


def test_verify_detects_relations(oracle: QuasiOracle, f3: PrimeField) -> None:
    """
    Test that {1, x1, x2, x3} is caught as not free in degree 1.

    Args:
        oracle: Oracle with a fresh cache.
        f3: The field F3.
    """
    entries = tuple(
        GeneratorEntry(parse_poly(text, f3), TRIV) for text in ("1", "x1", "x2", "x3")
    )
    report = GeneratorService(oracle).verify_free_generation(
        GeneratorSet(QuasiOrder(0, 3), entries), 4
    )
    assert report.failure is not None
    assert report.failure.kind == "freeness"
    assert report.failure.degree == 1


def test_verify_checks_quasi_invariance_first(
    oracle: QuasiOracle, f3: PrimeField
) -> None:
    """
    Test that a non-quasi-invariant generator is reported before any rank work.

    Args:
        oracle: Oracle with a fresh cache.
        f3: The field F3.
    """
    gens = GeneratorSet(
        QuasiOrder.integer(1, 3),
        (
            GeneratorEntry(Polynomial.constant(f3, 1), TRIV),
            GeneratorEntry(parse_poly("x1", f3), TRIV_SIGN_TRIV),
        ),
    )
    report = GeneratorService(oracle).verify_free_generation(gens)
    assert report.failure is not None
    assert report.failure.kind == "quasi-invariance"
    assert report.degrees == []


def test_verify_budget(oracle: QuasiOracle, f2: PrimeField) -> None:
    one = GeneratorEntry(Polynomial.constant(f2, 1), TRIV)
    gens = GeneratorSet(QuasiOrder(25, 2), (one,))
    with pytest.raises(BudgetExceededError):
        GeneratorService(oracle).verify_free_generation(gens)


def test_verified_records_degree(oracle: QuasiOracle) -> None:
    """
    Test that a successful check stamps the certified degree on the set.

    Args:
        oracle: Oracle with a fresh cache.
    """
    service = GeneratorService(oracle)
    gens = char2_generator_set(QuasiOrder(1, 2))
    assert gens.verified_to is None
    certified, report = service.verified(gens, 8)
    assert report.success
    assert certified.verified_to == 8
    assert certified == gens


@pytest.mark.slow
@pytest.mark.parametrize("m", range(1, 6))
def test_verify_char3(shared_oracle: QuasiOracle, m: int) -> None:
    """
    Test free generation over F3 for m up to 5.

    Args:
        shared_oracle: Session-wide oracle.
        m: Integer order.
    """
    service = GeneratorService(shared_oracle)
    gens = service.char3_generator_set(QuasiOrder.integer(m, 3))
    assert service.verify_free_generation(gens).success


@pytest.mark.slow
@pytest.mark.parametrize("twice_m", range(0, 13))
def test_verify_char2(shared_oracle: QuasiOracle, twice_m: int) -> None:
    """
    Test free generation over F2 through degree 6m + 6.

    The order of G1 is certified by (1 - s13) G1 = (x1 - x3)^deg(G1).

    Args:
        shared_oracle: Session-wide oracle.
        twice_m: 2m.
    """
    order = QuasiOrder(twice_m, 2)
    gens = char2_generator_set(order)
    for poly in gens.module_generators:
        assert quasi_order(poly) >= twice_m + 1

    g1 = gens.entries[2].poly
    assert g1.degree & (g1.degree - 1) == 0
    rotated = linear_form(GF(2), 1, 0, -1) ** g1.degree
    assert g1 - g1.permute(S13) == rotated

    report = GeneratorService(shared_oracle).verify_free_generation(
        gens, 3 * twice_m + 6
    )
    assert report.success


@pytest.mark.slow
@pytest.mark.parametrize("m", range(0, 5))
def test_char3_generator_relations(shared_oracle: QuasiOracle, m: int) -> None:
    """
    Test that Delta^(2m+1) lies in span{K, L} and E Delta^(2m) in span{K1, L1}.

    Args:
        shared_oracle: Session-wide oracle.
        m: Integer order.
    """
    gens = GeneratorService(shared_oracle).char3_generator_set(QuasiOrder.integer(m, 3))
    _, k, l_poly, k1, l1, f_delta = (entry.poly for entry in gens.entries)
    special = special_polys(3)
    assert shared_oracle.in_module_span(special.delta ** (2 * m + 1), [k, l_poly])
    assert shared_oracle.in_module_span(special.e * special.delta ** (2 * m), [k1, l1])
    assert f_delta + f_delta.permute(S23) == -special.e * special.delta ** (2 * m)
    assert not sign_pairing(k, l_poly).is_zero
    assert k1.permute(S13) != k1
