"""Families (subsets of a finite Boolean algebra) and the support relation.

A family is stored as an int ``bits``: bit ``x`` is set iff the element with
atom mask ``x`` is a member.  Stacks are families closed upwards; they carry
their antichain of minimal members as a derived view.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, Sequence

from . import _caps, _kernels
from .boolalg import Element, FiniteBooleanAlgebra
from .errors import AlgebraError, NotAGrillError, UclabError

__all__ = [
    "Family",
    "Stack",
    "Classification",
    "family",
    "up_closure",
    "principal_stack",
    "supports",
    "similar",
    "minkowski_sum",
    "classify",
    "generate_ideal",
    "enumerate_stacks",
    "count_grills",
    "enumerate_grills",
    "grill_of_atoms",
    "grill_atoms",
    "grill_partial_meet",
    "class_rep",
    "class_join",
    "class_meet",
    "iter_bits",
]


def iter_bits(x: int) -> Iterator[int]:
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


def _all_bits(n: int) -> int:
    return (1 << (1 << n)) - 1


class Family:
    """A finite set of elements of one algebra."""

    __slots__ = ("algebra", "bits")

    def __init__(self, algebra: FiniteBooleanAlgebra, bits: int = 0):
        if bits < 0 or bits >> algebra.size:
            raise AlgebraError("family bits out of range for this algebra")
        self.algebra = algebra
        self.bits = bits

    @classmethod
    def of(cls, algebra: FiniteBooleanAlgebra, members: Iterable) -> Family:
        """Build from Elements, masks, or strings accepted by ``algebra.parse``."""
        bits = 0
        for m in members:
            if isinstance(m, Element):
                if m.algebra != algebra:
                    raise AlgebraError("member from a different algebra")
                mask = m.mask
            elif isinstance(m, str):
                mask = algebra.parse(m).mask
            else:
                mask = algebra.element(m).mask
            bits |= 1 << mask
        return cls(algebra, bits)

    def _bits_of(self, other: Family) -> int:
        if not isinstance(other, Family):
            raise TypeError(f"expected a Family, got {type(other).__name__}")
        if other.algebra != self.algebra:
            raise AlgebraError("families belong to different algebras")
        return other.bits

    @property
    def masks(self) -> list[int]:
        return list(iter_bits(self.bits))

    @property
    def members(self) -> list[Element]:
        return [Element(self.algebra, m) for m in iter_bits(self.bits)]

    def __iter__(self) -> Iterator[Element]:
        return iter(self.members)

    def __len__(self) -> int:
        return bin(self.bits).count("1")

    def __contains__(self, x) -> bool:
        if isinstance(x, Element):
            return x.algebra == self.algebra and bool(self.bits >> x.mask & 1)
        if isinstance(x, int):
            return 0 <= x < self.algebra.size and bool(self.bits >> x & 1)
        return False

    @property
    def is_empty(self) -> bool:
        return self.bits == 0

    def __eq__(self, other):
        if not isinstance(other, Family):
            return NotImplemented
        return self.bits == other.bits and self.algebra == other.algebra

    def __hash__(self):
        return hash((self.bits, self.algebra.atom_names))

    def __or__(self, other):
        return Family(self.algebra, self.bits | self._bits_of(other))

    def __and__(self, other):
        return Family(self.algebra, self.bits & self._bits_of(other))

    def __sub__(self, other):
        return Family(self.algebra, self.bits & ~self._bits_of(other))

    # comparisons work on bits directly: delegating to the reflected operator
    # would recurse when the other operand is a subclass such as Stack
    def __le__(self, other):
        return self.bits & ~self._bits_of(other) == 0

    def __lt__(self, other):
        return self.bits & ~self._bits_of(other) == 0 and self.bits != other.bits

    def __ge__(self, other):
        return self._bits_of(other) & ~self.bits == 0

    def __gt__(self, other):
        return self._bits_of(other) & ~self.bits == 0 and self.bits != other.bits

    def complement(self) -> Family:
        """``B \\ F`` as a family."""
        return Family(self.algebra, _all_bits(self.algebra.n) ^ self.bits)

    def __str__(self):
        if not self.bits:
            return "{}"
        return "{" + ", ".join(self.algebra.label(m) for m in iter_bits(self.bits)) + "}"

    def __repr__(self):
        return f"{type(self).__name__}({self})"

    def to_json(self) -> list[list[str]]:
        return [self.algebra.names(m) for m in iter_bits(self.bits)]


class Stack(Family):
    """An upward-closed family."""

    __slots__ = ()

    def __init__(self, algebra: FiniteBooleanAlgebra, bits: int = 0):
        super().__init__(algebra, bits)
        if _kernels.upclose(bits, algebra.n) != bits:
            raise UclabError(f"{Family(algebra, bits)} is not upward closed")

    @classmethod
    def from_antichain(cls, algebra: FiniteBooleanAlgebra, generators: Iterable) -> Stack:
        return up_closure(Family.of(algebra, generators))

    @property
    def antichain(self) -> Family:
        """The minimal members."""
        n = self.algebra.n
        bits = self.bits
        minimal = 0
        for x in iter_bits(bits):
            # x is minimal iff no proper subset of x is a member
            if not any(bits >> (x ^ (1 << i)) & 1 for i in iter_bits(x)):
                minimal |= 1 << x
        # a stack is determined by its minimal members
        assert _kernels.upclose(minimal, n) == bits
        return Family(self.algebra, minimal)

    def to_json(self) -> list[list[str]]:
        return self.antichain.to_json()


def family(algebra: FiniteBooleanAlgebra, *members) -> Family:
    """Shorthand: ``family(B, "a", "b+c")``."""
    return Family.of(algebra, members)


def up_closure(f: Family) -> Stack:
    return Stack(f.algebra, _kernels.upclose(f.bits, f.algebra.n))


def principal_stack(x: Element) -> Stack:
    return Stack(x.algebra, _kernels.upclose(1 << x.mask, x.algebra.n))


def supports(f: Family, g: Family) -> bool:
    """``f`` supports ``g``: every member of ``g`` lies above some member of ``f``.

    Vacuously true for empty ``g``; ``supports(empty, g)`` holds only for empty ``g``.
    """
    gb = f._bits_of(g)
    return _kernels.supports(f.bits, gb, f.algebra.n)


def similar(f: Family, g: Family) -> bool:
    gb = f._bits_of(g)
    n = f.algebra.n
    return _kernels.upclose(f.bits, n) == _kernels.upclose(gb, n)


def minkowski_sum(families: Sequence[Family]) -> Family:
    """All joins picking one member from each family."""
    if not families:
        raise ValueError("minkowski_sum needs at least one family")
    first = families[0]
    n = first.algebra.n
    bits = first.bits
    for f in families[1:]:
        bits = _kernels.minkowski(bits, first._bits_of(f), n)
    return Family(first.algebra, bits)


@dataclass(frozen=True)
class Classification:
    is_stack: bool
    is_filter: bool
    is_proper_filter: bool
    is_ultrafilter: bool
    is_ideal: bool
    is_proper_ideal: bool
    is_grill: bool


def _closed_under(bits: int, op) -> bool:
    members = list(iter_bits(bits))
    return all(bits >> op(x, y) & 1 for i, x in enumerate(members) for y in members[i:])


def classify(f: Family) -> Classification:
    """Check the filter, ideal and grill axioms directly on ``f``."""
    alg = f.algebra
    n, one, bits = alg.n, alg.full_mask, f.bits
    has_zero = bool(bits & 1)
    has_one = bool(bits >> one & 1)

    is_stack = _kernels.upclose(bits, n) == bits
    is_down = _kernels.downclose(bits, n) == bits

    is_filter = has_one and is_stack and _closed_under(bits, lambda x, y: x & y)
    is_proper_filter = is_filter and not has_zero
    is_ultrafilter = is_proper_filter and all(
        # nothing can be added without producing 0
        any(not (x & y) for y in iter_bits(bits))
        for x in range(1 << n)
        if not bits >> x & 1
    )

    is_ideal = has_zero and is_down and _closed_under(bits, lambda x, y: x | y)
    is_proper_ideal = is_ideal and not has_one

    is_grill = bool(bits) and not has_zero and is_stack and all(
        bits >> x & 1 or bits >> y & 1
        for x in range(1 << n)
        for y in range(x, 1 << n)
        if bits >> (x | y) & 1
    )
    return Classification(
        is_stack=is_stack,
        is_filter=is_filter,
        is_proper_filter=is_proper_filter,
        is_ultrafilter=is_ultrafilter,
        is_ideal=is_ideal,
        is_proper_ideal=is_proper_ideal,
        is_grill=is_grill,
    )


def generate_ideal(m: Family) -> Family:
    """The smallest ideal containing ``m``: everything below a finite join of members."""
    joins = {0}
    for x in iter_bits(m.bits):
        joins |= {j | x for j in joins}
    bits = 0
    for j in joins:
        bits |= 1 << j
    return Family(m.algebra, _kernels.downclose(bits, m.algebra.n))


@lru_cache(maxsize=None)
def _upsets(n: int) -> tuple[int, ...]:
    # an up-set of B_n splits by the top atom into lo <= hi, both up-sets of B_{n-1}
    if n == 0:
        return (0, 1)
    prev = _upsets(n - 1)
    half = 1 << (n - 1)
    out = [lo | hi << half for hi in prev for lo in prev if lo & ~hi == 0]
    return tuple(sorted(out))


def stack_bits(n: int, cap: str = "stacks") -> tuple[int, ...]:
    """Bits of every stack of the ``n``-atom algebra, ascending."""
    _caps.require(cap, n, "stack enumeration")
    return _upsets(n)


def enumerate_stacks(algebra: FiniteBooleanAlgebra) -> list[Stack]:
    return [Stack(algebra, b) for b in stack_bits(algebra.n)]


def count_grills(algebra: FiniteBooleanAlgebra) -> int:
    return (1 << algebra.n) - 1


def grill_of_atoms(algebra: FiniteBooleanAlgebra, atom_mask: int) -> Family:
    """The union of the principal ultrafilters at the atoms in ``atom_mask``."""
    n = algebra.n
    outside = _kernels.downclose(1 << (algebra.full_mask & ~atom_mask), n)
    return Family(algebra, _all_bits(n) & ~outside)


def grill_atoms(g: Family) -> int:
    """Mask of the atoms belonging to ``g``."""
    return sum(1 << i for i in range(g.algebra.n) if g.bits >> (1 << i) & 1)


def enumerate_grills(algebra: FiniteBooleanAlgebra) -> list[Family]:
    """Every grill, ordered by its atom set."""
    _caps.require("stacks", algebra.n, "grill listing")
    return [grill_of_atoms(algebra, a) for a in range(1, 1 << algebra.n)]


def grill_partial_meet(grills: Sequence[Family]) -> Family | None:
    """Greatest grill below every input, or None when no ultrafilter fits under all."""
    if not grills:
        raise ValueError("grill_partial_meet needs at least one grill")
    alg = grills[0].algebra
    common = _all_bits(alg.n)
    for g in grills:
        common &= grills[0]._bits_of(g)
        if not classify(g).is_grill:
            raise NotAGrillError(f"{g} is not a grill")
    atoms_inside = 0
    for i in range(alg.n):
        up = _kernels.upclose(1 << (1 << i), alg.n)
        if up & ~common == 0:
            atoms_inside |= 1 << i
    if not atoms_inside:
        return None
    return grill_of_atoms(alg, atoms_inside)


def class_rep(f: Family) -> Stack:
    """Canonical representative of the similarity class of ``f``."""
    return up_closure(f)


def class_join(f: Family, g: Family) -> Stack:
    return up_closure(minkowski_sum([f, g]))


def class_meet(f: Family, g: Family) -> Stack:
    return up_closure(f | g)
