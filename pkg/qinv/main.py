import uvicorn

from qinv.core.config import settings
from qinv.create_fastapi_app import create_app

app = create_app()


def serve() -> None:
    uvicorn.run(
        "qinv.main:app",
        host=settings.run.host,
        port=settings.run.port,
    )


if __name__ == "__main__":
    serve()
