"""Vertex caps for the exponential searches.

Defaults can be overridden through the environment (``PARIKH_MAX_VERTICES``
raises every graph cap at once, ``PARIKH_JOBS`` sets worker count for
``verify``) or by passing an explicit ``cap=`` to the individual functions.
"""

from __future__ import annotations

import os
from dataclasses import dataclass


def _env_int(name: str) -> int | None:
    raw = os.environ.get(name)
    if raw is None or raw.strip() == "":
        return None
    try:
        value = int(raw)
    except ValueError:
        raise ValueError(f"environment variable {name} must be an integer, got {raw!r}")
    if value < 0:
        raise ValueError(f"environment variable {name} must be non-negative, got {value}")
    return value


@dataclass(frozen=True)
class Limits:
    isomorphism: int = 16
    cycles: int = 14
    strong_ordering: int = 14
    ternary: int = 20
    hamiltonian: int = 16
    slender: int = 8
    enumeration: int = 10
    jobs: int = 1

    @classmethod
    def from_env(cls) -> "Limits":
        limits = cls()
        override = _env_int("PARIKH_MAX_VERTICES")
        jobs = _env_int("PARIKH_JOBS")
        kwargs = {}
        if override is not None:
            kwargs.update(
                isomorphism=override,
                cycles=override,
                strong_ordering=override,
                ternary=override,
                hamiltonian=override,
                enumeration=override,
            )
        if jobs is not None:
            kwargs["jobs"] = max(1, jobs)
        return cls(**kwargs) if kwargs else limits


def limits() -> Limits:
    """Current limits, re-read from the environment on every call."""
    return Limits.from_env()
