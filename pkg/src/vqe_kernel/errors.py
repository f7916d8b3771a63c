# vqe_kernel/errors.py
"""
Kernel error types and the error envelope
──────────────────────────────────────────────
Every failure the library raises on purpose is a KernelError subclass.
Each one carries:
    • code       → stable machine code used in the JSON envelope
    • exit_code  → process exit status used by the CLI
    • details    → free-form context (row/col, shapes, best iterate …)
──────────────────────────────────────────────
"""
from __future__ import annotations

from typing import Any, Dict, Optional

from pydantic import ValidationError

EXIT_OK = 0
EXIT_INCOMPLETE = 2
EXIT_USAGE = 64
EXIT_DATA = 65
EXIT_SOFTWARE = 70
EXIT_IO = 74


class KernelError(Exception):
    """Base class for all vqe_kernel failures."""

    code: str = "KERNEL_ERROR"
    exit_code: int = EXIT_SOFTWARE

    def __init__(self, message: str, **details: Any):
        super().__init__(message)
        self.message = message
        self.details: Dict[str, Any] = details


class ShapeError(KernelError):
    """Operand dimensions do not agree."""

    code = "SHAPE"
    exit_code = EXIT_DATA


class DomainError(KernelError):
    """Operand is outside the operation's domain (non-Hermitian, d ≤ 0 …)."""

    code = "DOMAIN"
    exit_code = EXIT_DATA


class ConvergenceError(KernelError):
    """An iterative routine ran out of budget; best_iterate holds where it stopped."""

    code = "NO_CONVERGENCE"
    exit_code = EXIT_SOFTWARE

    def __init__(self, message: str, best_iterate: Any = None, **details: Any):
        super().__init__(message, **details)
        self.best_iterate = best_iterate


class InputError(KernelError):
    """A matrix file could not be parsed."""

    code = "BAD_INPUT"
    exit_code = EXIT_DATA

    def __init__(self, message: str, row: Optional[int] = None, col: Optional[int] = None, **details: Any):
        if row is not None:
            details["row"] = row
        if col is not None:
            details["col"] = col
        super().__init__(message, **details)
        self.row = row
        self.col = col


class UsageError(KernelError):
    """Bad command line: unknown flag, missing branch, oversize matrix."""

    code = "USAGE"
    exit_code = EXIT_USAGE


class OutputError(KernelError):
    """Destination could not be written."""

    code = "IO"
    exit_code = EXIT_IO


def error_envelope(code: str, message: str, details=None) -> Dict[str, Any]:
    return {"error": {"code": code, "message": message, "details": details or {}}}


def envelope_for(exc: BaseException) -> Dict[str, Any]:
    """Render any exception the CLI catches as an error envelope."""
    if isinstance(exc, KernelError):
        return error_envelope(exc.code, exc.message, _jsonable(exc.details))
    if isinstance(exc, ValidationError):
        errors = [
            {"field": ".".join(str(p) for p in e["loc"]), "message": e["msg"]}
            for e in exc.errors()
        ]
        return error_envelope("USAGE", "Invalid configuration", {"errors": errors})
    if isinstance(exc, OSError):
        return error_envelope("IO", str(exc))
    return error_envelope("SERVER_ERROR", "Unexpected error")


def exit_code_for(exc: BaseException) -> int:
    if isinstance(exc, KernelError):
        return exc.exit_code
    if isinstance(exc, ValidationError):
        return EXIT_USAGE
    if isinstance(exc, OSError):
        return EXIT_IO
    return EXIT_SOFTWARE


def _jsonable(details: Dict[str, Any]) -> Dict[str, Any]:
    out: Dict[str, Any] = {}
    for key, value in details.items():
        if isinstance(value, complex):
            out[key] = [value.real, value.imag]
        elif isinstance(value, (str, int, float, bool)) or value is None:
            out[key] = value
        elif isinstance(value, (list, tuple)):
            out[key] = [v if isinstance(v, (str, int, float, bool)) else str(v) for v in value]
        else:
            out[key] = str(value)
    return out
