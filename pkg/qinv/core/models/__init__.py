from qinv.core.models.component import ComponentKey, GradedComponentBasis, component_key
from qinv.core.models.quasi_order import QuasiOrder

__all__ = (
    "ComponentKey",
    "GradedComponentBasis",
    "QuasiOrder",
    "component_key",
)
