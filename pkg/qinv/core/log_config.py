import logging
import sys

from qinv.core.config import LoggingConfig


def setup_logging(config: LoggingConfig, verbose: bool = False) -> None:
    """
    Install one stderr handler on the ``qinv`` logger.

    Args:
        config: Logging section of the settings.
        verbose: Lower the level to INFO regardless of the configured level.
    """
    root = logging.getLogger("qinv")
    root.setLevel(logging.INFO if verbose else getattr(logging, config.level))

    for handler in list(root.handlers):
        if getattr(handler, "_qinv_handler", False):
            root.removeHandler(handler)

    handler = logging.StreamHandler(sys.stderr)
    handler.setFormatter(logging.Formatter(config.format))
    handler._qinv_handler = True  # type: ignore[attr-defined]
    root.addHandler(handler)
