from fastapi import APIRouter

from qinv.api.api_v1.quasi.quasi_routes import router as quasi_router
from qinv.core.config import settings

router = APIRouter(
    prefix=settings.api.v1.prefix,
)
router.include_router(
    quasi_router,
    prefix=settings.api.v1.quasi,
    tags=["Quasi-invariants"],
)
