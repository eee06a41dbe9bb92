from pathlib import Path
from typing import Literal

from pydantic import BaseModel, PositiveInt, field_validator
from pydantic_settings import BaseSettings, SettingsConfigDict

from qinv.algebra.primes import MAX_PRIME, is_prime

PROJECT_ROOT = Path(__file__).resolve().parent.parent.parent
ENV_PATH = PROJECT_ROOT / ".env"
ENV_TEMPLATE_PATH = PROJECT_ROOT / ".env.template"


class OracleConfig(BaseModel):
    """
    Budgets and tuning for the brute-force linear-algebra oracle.

    Every request that would run the oracle beyond these limits is refused
    with an explicit error instead of being truncated.
    """

    max_verify_m: PositiveInt = 12
    empirical_margin: PositiveInt = 10
    relation_margin: PositiveInt = 6
    char0_max_k: PositiveInt = 4
    char0_proxy_prime: PositiveInt = 32003
    workers: PositiveInt = 1
    cache_size: PositiveInt = 512

    @field_validator("char0_proxy_prime")
    @classmethod
    def _check_prime(cls, value: int) -> int:
        if value < 5 or value >= MAX_PRIME:
            raise ValueError("char0_proxy_prime must lie in [5, 2^31)")
        if not is_prime(value):
            raise ValueError(f"char0_proxy_prime={value} is not prime")
        return value


class LoggingConfig(BaseModel):
    """
    Diagnostic stream configuration.

    Logs always go to stderr so that stdout stays machine-parseable.
    """

    level: Literal["DEBUG", "INFO", "WARNING", "ERROR"] = "WARNING"
    format: str = "%(asctime)s %(levelname)-7s %(name)s: %(message)s"


class OutputConfig(BaseModel):
    default_format: Literal["plain", "json", "csv"] = "plain"


class RunConfig(BaseModel):
    """
    HTTP server configuration.

    Defines parameters for the ASGI server (Uvicorn) that serves the JSON API.
    """

    host: str = "127.0.0.1"
    port: int = 8000


class ApiV1Prefix(BaseModel):
    """
    API version 1 URL path prefixes.
    """

    prefix: str = "/v1"
    quasi: str = "/quasi"


class ApiPrefix(BaseModel):
    """
    Root API URL path configuration.
    """

    prefix: str = "/api"
    v1: ApiV1Prefix = ApiV1Prefix()


class Settings(BaseSettings):
    """
    Main application configuration settings.

    Loads and validates all settings from environment variables using
    Pydantic Settings. Nested sections are addressed with a double
    underscore, e.g. ``QINV_CONFIG__ORACLE__WORKERS=4``.
    """

    model_config = SettingsConfigDict(
        env_file=(ENV_TEMPLATE_PATH, ENV_PATH),
        case_sensitive=False,
        env_nested_delimiter="__",
        env_prefix="QINV_CONFIG__",
        extra="ignore",
    )
    run: RunConfig = RunConfig()
    api: ApiPrefix = ApiPrefix()
    oracle: OracleConfig = OracleConfig()
    logging: LoggingConfig = LoggingConfig()
    output: OutputConfig = OutputConfig()


settings = Settings()
