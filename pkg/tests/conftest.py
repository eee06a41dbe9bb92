from collections.abc import Generator

import pytest
from fastapi.testclient import TestClient

from qinv.algebra import GF, QQ, PrimeField
from qinv.algebra.coeff_ring import RationalField
from qinv.core.config import settings
from qinv.core.dependencies import get_quasi_service
from qinv.main import app
from qinv.repositories import ComponentRepository
from qinv.services import QuasiOracle, QuasiService


@pytest.fixture
def repository() -> ComponentRepository:
    """
    Provides an empty, function-scoped component repository.

    Keeps cached kernels from leaking between tests that count cache hits.
    """
    return ComponentRepository(max_size=64)


@pytest.fixture
def oracle(repository: ComponentRepository) -> QuasiOracle:
    """
    Provides a QuasiOracle bound to the fresh test repository.
    """
    return QuasiOracle(repository)


@pytest.fixture(scope="session")
def shared_oracle() -> QuasiOracle:
    """
    Provides a session-scoped oracle for tests that reuse the same components.

    Generator searches and verifications solve overlapping components, so a
    shared cache keeps the suite fast.
    """
    return QuasiOracle(ComponentRepository(max_size=4096))


@pytest.fixture
def service(oracle: QuasiOracle) -> QuasiService:
    """
    Provides the service stack used by the CLI and the HTTP routes.
    """
    return QuasiService(oracle)


@pytest.fixture
def f2() -> PrimeField:
    return GF(2)


@pytest.fixture
def f3() -> PrimeField:
    return GF(3)


@pytest.fixture
def qq() -> RationalField:
    return QQ


@pytest.fixture
def client(service: QuasiService) -> Generator[TestClient, None, None]:
    """
    Configures and provides a FastAPI TestClient instance.

    The client is initialized with the quasi router prefix from settings,
    handles lifespan events automatically and injects the test service.
    """
    base_url_prefix: str = (
        settings.api.prefix + settings.api.v1.prefix + settings.api.v1.quasi
    )
    app.dependency_overrides[get_quasi_service] = lambda: service
    with TestClient(app, base_url=f"http://testserver{base_url_prefix}") as c:
        yield c
    app.dependency_overrides.clear()
