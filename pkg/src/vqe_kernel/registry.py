from __future__ import annotations
from typing import Any, Callable, Dict, Tuple

from vqe_kernel.errors import UsageError

"""
──────────────────────────────────────────────────────────────────────────────
Named Provider Registry
──────────────────────────────────────────────────────────────────────────────
Purpose:
    Maintain a mapping of (kind, name) → provider callables so that the CLI
    and the scanners can pick an implementation by the name a user typed.

APIs:
    - register(kind, name, provider)
    - resolve(kind, name) → provider
    - registered(kind)    → sorted names

Used by:
    - heatmap.scan       → kind "engine"  ("exact", "vqe")
    - ansatz.circuits    → kind "ansatz"  ("universal2q", "layered")

Usage:
    register("engine", "exact", exact_engine)
    engine = resolve("engine", "exact")
"""

_PROVIDERS: Dict[Tuple[str, str], Callable[..., Any]] = {}


def register(kind: str, name: str, provider: Callable[..., Any]) -> None:
    _PROVIDERS[(kind, name)] = provider


def resolve(kind: str, name: str) -> Callable[..., Any]:
    try:
        return _PROVIDERS[(kind, name)]
    except KeyError:
        known = ", ".join(registered(kind)) or "<none>"
        raise UsageError(f"No {kind} registered under '{name}' (known: {known})", kind=kind, name=name)


def registered(kind: str) -> list[str]:
    return sorted(name for k, name in _PROVIDERS if k == kind)
