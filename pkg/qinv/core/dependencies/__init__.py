from qinv.core.dependencies.deps import QuasiServiceDep, get_quasi_service

__all__ = (
    "QuasiServiceDep",
    "get_quasi_service",
)
