from qinv.repositories.component_repository import (
    ComponentRepository,
    component_repository,
)

__all__ = (
    "ComponentRepository",
    "component_repository",
)
