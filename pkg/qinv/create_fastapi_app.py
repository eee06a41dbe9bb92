"""
FastAPI application factory.

Builds the read-only JSON API over the quasi-invariant services, with ORJSON
response serialization and a lifespan that owns logging and the shared
component cache.
"""

import logging
from collections.abc import AsyncGenerator
from contextlib import asynccontextmanager

from fastapi import FastAPI
from fastapi.responses import ORJSONResponse

from qinv import __version__
from qinv.api import api_router
from qinv.core.config import settings
from qinv.core.log_config import setup_logging
from qinv.repositories import component_repository

logger = logging.getLogger(__name__)


@asynccontextmanager
async def lifespan(app: FastAPI) -> AsyncGenerator[None, None]:
    """
    Install logging on startup and drop the cached components on shutdown.

    Args:
        app: The FastAPI application instance.

    Yields:
        None: Control passes to the application runtime.
    """
    setup_logging(settings.logging)
    yield
    logger.info("dropping %d cached components", len(component_repository))
    component_repository.clear()


def create_app(title: str = "qinv") -> FastAPI:
    """
    Create the configured FastAPI application.

    Args:
        title: Title shown on the generated documentation pages.

    Returns:
        FastAPI: Application with the quasi-invariant routes mounted.
    """
    app = FastAPI(
        title=title,
        version=__version__,
        default_response_class=ORJSONResponse,
        lifespan=lifespan,
    )
    app.include_router(api_router)
    return app
