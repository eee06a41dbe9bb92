"""
FastAPI dependency injection for the quasi-invariant services.

This module provides the dependency that hands route handlers a service
stack sharing the process-wide component repository, so components solved
for one request are reused by the next.
"""

from typing import Annotated

from fastapi import Depends

from qinv.repositories import component_repository
from qinv.services.quasi_core import QuasiOracle
from qinv.services.quasi_service import QuasiService


def get_quasi_service() -> QuasiService:
    return QuasiService(QuasiOracle(component_repository))


QuasiServiceDep = Annotated[QuasiService, Depends(get_quasi_service)]
"""
Type alias for QuasiService dependency injection.

Each request receives a fresh service object; the oracle underneath shares
the process-wide component cache, which is guarded by a lock so requests
served from the threadpool can use it concurrently.

Usage:
    ```python
    @router.get("/dim")
    def get_dim(service: QuasiServiceDep, p: int, m2: int, degree: int):
        return service.dim(QuasiOrder(m2, p), degree)
    ```
"""
