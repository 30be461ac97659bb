"""Bit-level kernels with a compiled core and a pure-Python fallback.

The compiled module is used when it was built and ``UCLAB_PURE_PYTHON`` is not
set.  It stores families in 64-bit words, so calls on algebras with more than
six atoms always go to the Python versions.
"""

import os

from . import _pykernels as python

compiled = None
if not os.environ.get("UCLAB_PURE_PYTHON"):
    try:
        from . import _ckernels as compiled
    except ImportError:  # extension not built
        compiled = None

BACKEND = "cython" if compiled is not None else "python"
WORD_ATOMS = 6

_impl = compiled if compiled is not None else python


def upclose(bits, n):
    if n <= WORD_ATOMS:
        return _impl.upclose(bits, n)
    return python.upclose(bits, n)


def downclose(bits, n):
    if n <= WORD_ATOMS:
        return _impl.downclose(bits, n)
    return python.downclose(bits, n)


def minkowski(f, g, n):
    if n <= WORD_ATOMS:
        return _impl.minkowski(f, g)
    return python.minkowski(f, g)


def supports(f, g, n):
    if n <= WORD_ATOMS:
        return _impl.supports(f, g, n)
    return python.supports(f, g, n)


def uc_violation(table, n, stacks):
    return _impl.uc_violation(table, n, stacks)


def k4_bruteforce(table, n):
    return _impl.k4_bruteforce(table, n)


def hypercontact_violation(table, n):
    return _impl.hypercontact_violation(table, n)


def ss_bruteforce(stacks, n, fixed_in=0, fixed_out=0):
    return _impl.ss_bruteforce(stacks, n, fixed_in, fixed_out)


def find_cover(stacks, target, n):
    if n <= WORD_ATOMS and len(stacks) <= 26:
        return _impl.find_cover(stacks, target)
    return python.find_cover(stacks, target)
