"""Size bounds, read from the environment at call time."""

from __future__ import annotations

import os

DEFAULT_ORACLE_BOUND = 2000
DEFAULT_QUOTIENT_DEGREE_CAP = 20000
DEFAULT_ENUM_BOUND = 100000


def _env_int(name: str, default: int) -> int:
    raw = os.environ.get(name)
    if raw is None or raw.strip() == "":
        return default
    return int(raw)


def oracle_bound() -> int:
    """Largest |G| for which subgroup-lattice oracles are run."""
    return _env_int("PCLOSE_ORACLE_BOUND", DEFAULT_ORACLE_BOUND)


def quotient_degree_cap() -> int:
    return _env_int("PCLOSE_QUOTIENT_DEGREE_CAP", DEFAULT_QUOTIENT_DEGREE_CAP)


def enum_bound() -> int:
    """Largest |G| whose elements may be listed explicitly (conjugacy classes, atoms)."""
    return _env_int("PCLOSE_ENUM_BOUND", DEFAULT_ENUM_BOUND)
