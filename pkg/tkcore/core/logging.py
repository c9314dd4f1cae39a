import logging
import sys
from tkcore.core.config import settings


def get_logger(name: str) -> logging.Logger:
    """Return a logger writing to stderr with the configured level."""
    logger = logging.getLogger(name)
    if not logger.handlers:
        handler = logging.StreamHandler(sys.stderr)
        handler.setFormatter(logging.Formatter(settings.LOG_FORMAT))
        logger.addHandler(handler)
        logger.setLevel(settings.LOG_LEVEL.upper())
    return logger
