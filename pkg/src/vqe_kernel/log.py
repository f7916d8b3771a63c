# vqe_kernel/log.py
"""
Kernel logging
──────────────────────────────────────────────
Library modules log through `get_logger("<module>")`; nothing prints.
The CLI calls configure_logging() once to route everything to stderr.
Messages keep the kernel tag style:  "✅ [spectrum] accepted -2.6667"
──────────────────────────────────────────────
"""
from __future__ import annotations

import logging
import sys

ROOT = "vqe_kernel"

_LEVELS = {0: logging.WARNING, 1: logging.INFO}


def get_logger(tag: str) -> logging.Logger:
    return logging.getLogger(f"{ROOT}.{tag}")


def configure_logging(verbosity: int = 0) -> logging.Logger:
    """Attach a single stderr handler to the kernel logger (idempotent)."""
    logger = logging.getLogger(ROOT)
    logger.setLevel(_LEVELS.get(verbosity, logging.DEBUG))
    if not any(getattr(h, "_vqe_kernel", False) for h in logger.handlers):
        handler = logging.StreamHandler(sys.stderr)
        handler.setFormatter(logging.Formatter("%(message)s"))
        handler._vqe_kernel = True  # type: ignore[attr-defined]
        logger.addHandler(handler)
    logger.propagate = False
    return logger
