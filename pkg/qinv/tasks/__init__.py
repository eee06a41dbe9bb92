from qinv.tasks.sweep import sweep_dimensions

__all__ = ("sweep_dimensions",)
