from qinv.api.api_v1.quasi.quasi_routes import router

__all__ = ("router",)
