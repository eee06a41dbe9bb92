from fastapi import APIRouter, HTTPException, Query

from qinv.core.dependencies import QuasiServiceDep
from qinv.core.exceptions import QinvError
from qinv.core.models import QuasiOrder
from qinv.schemas.renxu import StaircaseRow
from qinv.schemas.results import (
    CheckRead,
    ClassifyRead,
    CounterexampleRead,
    DimRead,
    GeneratorRead,
    HilbertRead,
    NoCounterexampleRead,
)

router = APIRouter()

ALLOWED_CHARACTERISTICS = (2, 3)


def _order(p: int, m2: int) -> QuasiOrder:
    if p not in ALLOWED_CHARACTERISTICS:
        raise HTTPException(status_code=400, detail="Invalid p. Allowed values: 2, 3")
    try:
        return QuasiOrder(m2, p)
    except QinvError as err:
        raise HTTPException(status_code=400, detail=str(err)) from err


@router.get("/dim", response_model=DimRead)
def get_dim(
    service: QuasiServiceDep,
    p: int = Query(3, description="Characteristic: 2 or 3"),
    m2: int = Query(..., ge=0, description="Twice the quasi-invariance order, 2m"),
    degree: int = Query(..., ge=0, description="Total degree of the component"),
) -> DimRead:
    """
    Get the dimension of one homogeneous component of Q_m(3, F_p).

    The dimension is computed by the linear-algebra oracle and cached for
    later requests.

    Args:
        service: Quasi-invariant service dependency
        p: Field characteristic, 2 or 3
        m2: 2m; odd values are only valid for p = 2
        degree: Total degree

    Returns:
        DimRead: The dimension with its parameters

    Raises:
        HTTPException: 400 - If p is not 2 or 3, or m2 is odd for p = 3

    Examples:
        ```bash
        # dim Q_1(3, F3) in degree 3
        curl -X GET "http://localhost:8000/api/v1/quasi/dim?p=3&m2=2&degree=3"
        ```
    """
    order = _order(p, m2)
    return service.dim(order, degree)


@router.get("/hilbert", response_model=HilbertRead)
def get_hilbert(
    service: QuasiServiceDep,
    p: int = Query(3, description="Characteristic: 2 or 3"),
    m2: int = Query(..., ge=0, description="Twice the quasi-invariance order, 2m"),
    terms: int | None = Query(None, gt=0, description="Number of coefficients"),
    compare: str = Query("none", description="none or empirical"),
) -> HilbertRead:
    """
    Get the closed-form Hilbert series, optionally compared with the oracle.

    Args:
        service: Quasi-invariant service dependency
        p: Field characteristic, 2 or 3
        m2: 2m
        terms: Number of coefficients; defaults to 6m + oracle.empirical_margin
        compare: ``empirical`` also runs the oracle; ``none`` leaves
                 ``empirical`` and ``match`` null

    Returns:
        HilbertRead: Closed-form, characteristic-zero and empirical rows

    Raises:
        HTTPException: 400 - If the parameters are invalid or the empirical
                       series would exceed the oracle budget
    """
    if compare not in ("none", "empirical"):
        raise HTTPException(
            status_code=400,
            detail="Invalid compare. Allowed values: none, empirical",
        )
    order = _order(p, m2)
    try:
        return service.hilbert_series(order, terms, empirical=compare == "empirical")
    except QinvError as err:
        raise HTTPException(status_code=400, detail=str(err)) from err


@router.get("/check", response_model=CheckRead)
def get_check(
    service: QuasiServiceDep,
    poly: str = Query(..., description="Polynomial text, e.g. x1^2 + x2^2"),
    p: int = Query(3, description="Characteristic: 2 or 3"),
    m2: int = Query(..., ge=0, description="Twice the quasi-invariance order, 2m"),
) -> CheckRead:
    """
    Check whether a polynomial is m-quasi-invariant.

    Raises:
        HTTPException: 400 - If the polynomial does not parse over F_p

    Examples:
        ```bash
        curl -G "http://localhost:8000/api/v1/quasi/check" \\
            --data-urlencode "poly=x1^2 + x2^2" -d p=2 -d m2=1
        ```
    """
    order = _order(p, m2)
    try:
        return service.check(order, poly)
    except QinvError as err:
        raise HTTPException(status_code=400, detail=str(err)) from err


@router.get(
    "/counterexample",
    response_model=CounterexampleRead | NoCounterexampleRead,
)
def get_counterexample(
    service: QuasiServiceDep,
    m: int = Query(..., ge=0, description="Integer quasi-invariance order"),
) -> CounterexampleRead | NoCounterexampleRead:
    """
    Get the minimal Ren-Xu counterexample for Q_m(3, F3).

    Returns ``{"none": true}`` when m has no base-3 digit 1.

    Raises:
        HTTPException: 400 - If the needed characteristic-zero generator is
                       beyond the oracle budget
    """
    try:
        return service.counterexample(m).read
    except QinvError as err:
        raise HTTPException(status_code=400, detail=str(err)) from err


@router.get("/staircase", response_model=list[StaircaseRow])
def get_staircase(
    service: QuasiServiceDep,
    max_m: int = Query(12, ge=0, description="Last m in the table"),
) -> list[StaircaseRow]:
    """
    Get the characteristic-3 generator degrees for m = 0..max_m.

    Only the formula table is served; oracle verification is a CLI task.
    """
    return service.staircase(max_m)


@router.get("/generators", response_model=list[GeneratorRead])
def get_generators(
    service: QuasiServiceDep,
    p: int = Query(3, description="Characteristic: 2 or 3"),
    m2: int = Query(..., ge=0, description="Twice the quasi-invariance order, 2m"),
) -> list[GeneratorRead]:
    """
    Get free generators of Q_m(3, F_p) over the symmetric polynomials.

    Raises:
        HTTPException: 400 - If m exceeds oracle.max_verify_m for p = 3
    """
    order = _order(p, m2)
    try:
        return service.generator_reads(service.generator_set(order))
    except QinvError as err:
        raise HTTPException(status_code=400, detail=str(err)) from err


@router.get("/classify", response_model=ClassifyRead)
def get_classify(
    service: QuasiServiceDep,
    poly: str = Query(..., description="Polynomial text"),
    p: int = Query(3, description="Characteristic: 2 or 3"),
) -> ClassifyRead:
    """
    Classify the cyclic S3-module generated by a polynomial.

    Raises:
        HTTPException: 400 - If the polynomial does not parse, is zero, or
                       its fingerprint is outside the classification table
    """
    if p not in ALLOWED_CHARACTERISTICS:
        raise HTTPException(status_code=400, detail="Invalid p. Allowed values: 2, 3")
    try:
        return service.classify(p, poly)
    except QinvError as err:
        raise HTTPException(status_code=400, detail=str(err)) from err
