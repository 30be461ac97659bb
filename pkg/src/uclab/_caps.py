"""Size caps for exhaustive operations.

``UCLAB_MAX_ATOMS`` raises every default cap, but never past the hard ceiling
of the operation in question.
"""

import os

from .errors import CapError

# name: (default, hard ceiling)
CAPS = {
    "explicit": (4, 4),  # membership tables of size 2**(2**n)
    "relations": (6, 8),  # binary relations on the 2**n elements
    "stacks": (4, 5),
    "complexes": (5, 5),
    "ucs": (5, 5),
    "witnesses": (5, 5),
    "meet_oracle": (3, 4),
    "atoms": (20, 20),
    "space_points": (6, 6),
}


def limit(name):
    default, ceiling = CAPS[name]
    raw = os.environ.get("UCLAB_MAX_ATOMS")
    if raw:
        try:
            return min(max(default, int(raw)), ceiling)
        except ValueError:
            raise CapError(f"UCLAB_MAX_ATOMS must be an integer, got {raw!r}") from None
    return default


def require(name, n, what):
    cap = limit(name)
    if n > cap:
        raise CapError(f"{what} is capped at {cap} atoms (got {n})")
