from qinv.core.config import settings

__all__ = ("settings",)
