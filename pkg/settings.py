"""
Environment configuration for verification runs.
"""

import logging
import os
from typing import Mapping, Optional

from pydantic import BaseModel, Field, field_validator

logger = logging.getLogger(__name__)

LOG_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL")


def _positive_int(environ: Mapping[str, str], name: str, default: int) -> int:
    raw = environ.get(name)
    if raw is None or raw.strip() == "":
        return default
    try:
        value = int(raw)
    except ValueError:
        value = 0
    if value < 1:
        raise ValueError(
            f"❌ {name} must be a positive integer, got {raw!r}\n"
            f"Please set it like: export {name}={default}\n"
            "Or add it to your .env file"
        )
    return value


class RuntimeSettings(BaseModel):
    """Worker count, log level and chunk size read from the environment."""

    threads: int = Field(default=1, ge=1)
    log_level: str = "INFO"
    chunk_size: int = Field(default=512, ge=1)

    @field_validator("log_level")
    @classmethod
    def check_level(cls, v: str) -> str:
        level = v.strip().upper()
        if level not in LOG_LEVELS:
            raise ValueError(f"❌ SOMBOR_LOG_LEVEL must be one of {', '.join(LOG_LEVELS)}, got {v!r}")
        return level

    @classmethod
    def from_env(cls, environ: Optional[Mapping[str, str]] = None) -> "RuntimeSettings":
        environ = os.environ if environ is None else environ
        settings = cls(
            threads=_positive_int(environ, "SOMBOR_THREADS", 1),
            log_level=environ.get("SOMBOR_LOG_LEVEL") or "INFO",
            chunk_size=_positive_int(environ, "SOMBOR_CHUNK_SIZE", 512),
        )
        logger.debug(f"Runtime settings: {settings}")
        return settings
