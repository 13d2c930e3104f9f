"""Enumeration guards shared by the lattice builder and the brute-force oracles."""

import os

ENV_VAR = "SETCHROMA_CAPACITY"

# Bell(12): the largest set-partition enumeration allowed by default.
LATTICE_CAPACITY = 4_213_597
ORACLE_CAPACITY = 2**24


class CapacityError(RuntimeError):
    """Raised instead of starting an enumeration that would be too large."""


def capacity(default: int) -> int:
    value = os.environ.get(ENV_VAR)
    if value is None or value.strip() == "":
        return default
    try:
        cap = int(value)
    except ValueError:
        raise ValueError(f"{ENV_VAR} must be an integer, got {value!r}") from None
    if cap < 0:
        raise ValueError(f"{ENV_VAR} must be nonnegative, got {cap}")
    return cap


def check_capacity(states: int, default: int, what: str) -> None:
    cap = capacity(default)
    if states > cap:
        raise CapacityError(
            f"{what} needs {states} states, over the limit of {cap} "
            f"(set {ENV_VAR} to raise it)"
        )
