"""Logging configuration for the project.

This module defines a helper function to configure Python's built-in logging
module.  The command-line front end calls `setup_logging()` once at start; the
library modules only ever create module loggers.
"""

from __future__ import annotations

import logging
import logging.config
from pathlib import Path

from .config import LOG_DIR, LOG_LEVEL
from .utils.io import ensure_dir


def setup_logging(
    log_dir: Path | None = None,
    log_filename: str = "curve_h1.log",
    level: str | None = None,
) -> None:
    """Configure logging for the entire project.

    Args:
        log_dir: Directory where the log file will be stored.  If None,
            `config.LOG_DIR` is used.
        log_filename: Name of the log file.
        level: Log level for both handlers.  Defaults to `config.LOG_LEVEL`.
    """
    if log_dir is None:
        log_dir = LOG_DIR
    level = (level or LOG_LEVEL).upper()
    ensure_dir(log_dir)
    log_file = log_dir / log_filename

    logging_config: dict[str, object] = {
        "version": 1,
        "disable_existing_loggers": False,
        "formatters": {
            "default": {
                "format": "%(asctime)s [%(levelname)s] %(name)s: %(message)s",
            },
        },
        "handlers": {
            # stderr keeps stdout free for JSON reports
            "console": {
                "class": "logging.StreamHandler",
                "formatter": "default",
                "stream": "ext://sys.stderr",
                "level": level,
            },
            "file": {
                "class": "logging.handlers.RotatingFileHandler",
                "formatter": "default",
                "filename": str(log_file),
                "maxBytes": 5 * 1024 * 1024,  # 5 MB
                "backupCount": 3,
                "level": level,
            },
        },
        "root": {
            "handlers": ["console", "file"],
            "level": level,
        },
    }

    logging.config.dictConfig(logging_config)
