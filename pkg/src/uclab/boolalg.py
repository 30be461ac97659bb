"""Finite Boolean algebras as powersets of a named atom set.

An element is identified with the set of atoms below it, stored as an int
bit-vector (``mask``): atom ``i`` is bit ``i``.  Elements of an algebra are
ordered canonically by mask value.
"""

from __future__ import annotations

from typing import Iterable, Iterator, Sequence

from . import _caps
from .errors import AlgebraError

__all__ = [
    "FiniteBooleanAlgebra",
    "Element",
    "make_algebra",
    "join",
    "meet",
    "complement",
    "leq",
    "atoms",
    "atoms_below",
    "ultrafilters",
]


class FiniteBooleanAlgebra:
    """The powerset algebra over ``atom_names``.

    Two algebras are equal when their atom lists are equal, so values built
    from separately loaded descriptors interoperate.
    """

    __slots__ = ("atom_names", "n", "_index")

    def __init__(self, atom_names: Sequence[str]):
        names = tuple(atom_names)
        if not names:
            raise AlgebraError("trivial algebra: at least one atom is required")
        if any(not isinstance(a, str) or not a for a in names):
            raise AlgebraError("atom names must be nonempty strings")
        if len(set(names)) != len(names):
            raise AlgebraError(f"duplicate atom names in {list(names)}")
        cap = _caps.limit("atoms")
        if len(names) > cap:
            raise AlgebraError(f"at most {cap} atoms are supported (got {len(names)})")
        self.atom_names = names
        self.n = len(names)
        self._index = {a: i for i, a in enumerate(names)}

    def __eq__(self, other):
        if not isinstance(other, FiniteBooleanAlgebra):
            return NotImplemented
        return self.atom_names == other.atom_names

    def __hash__(self):
        return hash(("FiniteBooleanAlgebra", self.atom_names))

    def __repr__(self):
        return f"FiniteBooleanAlgebra({list(self.atom_names)!r})"

    def __len__(self):
        return 1 << self.n

    def __iter__(self) -> Iterator[Element]:
        return (Element(self, m) for m in range(1 << self.n))

    @property
    def size(self) -> int:
        return 1 << self.n

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    @property
    def zero(self) -> Element:
        return Element(self, 0)

    @property
    def one(self) -> Element:
        return Element(self, self.full_mask)

    def element(self, mask: int) -> Element:
        if not 0 <= mask <= self.full_mask:
            raise AlgebraError(f"mask {mask} out of range for {self.n} atoms")
        return Element(self, mask)

    def atom_mask(self, names: Iterable[str]) -> int:
        mask = 0
        for name in names:
            try:
                mask |= 1 << self._index[name]
            except KeyError:
                raise AlgebraError(f"unknown atom {name!r}") from None
        return mask

    def of(self, *names: str) -> Element:
        """The join of the named atoms; ``of()`` is zero."""
        return Element(self, self.atom_mask(names))

    def parse(self, text: str) -> Element:
        """Parse ``"0"``, ``"1"``, an atom name, or a ``+``-joined sum of atom names."""
        text = text.strip()
        if text in self._index:
            return Element(self, 1 << self._index[text])
        if text == "0":
            return self.zero
        if text == "1":
            return self.one
        return Element(self, self.atom_mask(t.strip() for t in text.split("+")))

    def names(self, mask: int) -> list[str]:
        return [a for i, a in enumerate(self.atom_names) if mask >> i & 1]

    def label(self, mask: int) -> str:
        return "+".join(self.names(mask)) if mask else "0"

    def to_json(self) -> dict:
        return {"atoms": list(self.atom_names)}


class Element:
    """A member of a finite Boolean algebra.

    ``+``/``|`` is join, ``*``/``&`` is meet, unary ``-``/``~`` is complement and
    ``<=`` is the Boolean order.  Mixing algebras raises :class:`AlgebraError`.
    """

    __slots__ = ("algebra", "mask")

    def __init__(self, algebra: FiniteBooleanAlgebra, mask: int):
        self.algebra = algebra
        self.mask = mask

    def _other(self, other) -> int:
        if not isinstance(other, Element):
            raise TypeError(f"expected an Element, got {type(other).__name__}")
        if other.algebra != self.algebra:
            raise AlgebraError("elements belong to different algebras")
        return other.mask

    def __add__(self, other):
        return Element(self.algebra, self.mask | self._other(other))

    __or__ = __add__

    def __mul__(self, other):
        return Element(self.algebra, self.mask & self._other(other))

    __and__ = __mul__

    def __neg__(self):
        return Element(self.algebra, self.algebra.full_mask ^ self.mask)

    __invert__ = __neg__

    def __le__(self, other):
        return self.mask & ~self._other(other) == 0

    def __lt__(self, other):
        return self <= other and self.mask != other.mask

    def __ge__(self, other):
        return other <= self

    def __gt__(self, other):
        return other < self

    def __eq__(self, other):
        if not isinstance(other, Element):
            return NotImplemented
        return self.mask == other.mask and self.algebra == other.algebra

    def __hash__(self):
        return hash((self.mask, self.algebra.atom_names))

    def __repr__(self):
        return f"Element({self})"

    def __str__(self):
        return self.algebra.label(self.mask)

    @property
    def is_zero(self) -> bool:
        return self.mask == 0

    @property
    def is_atom(self) -> bool:
        return self.mask != 0 and self.mask & (self.mask - 1) == 0

    def to_json(self) -> list[str]:
        return self.algebra.names(self.mask)


def make_algebra(atom_names: Sequence[str]) -> FiniteBooleanAlgebra:
    return FiniteBooleanAlgebra(atom_names)


def join(x: Element, y: Element) -> Element:
    return x + y


def meet(x: Element, y: Element) -> Element:
    return x * y


def complement(x: Element) -> Element:
    return -x


def leq(x: Element, y: Element) -> bool:
    return x <= y


def atoms(algebra: FiniteBooleanAlgebra) -> list[Element]:
    return [Element(algebra, 1 << i) for i in range(algebra.n)]


def atoms_below(x: Element) -> list[Element]:
    return [Element(x.algebra, 1 << i) for i in range(x.algebra.n) if x.mask >> i & 1]


def ultrafilters(algebra: FiniteBooleanAlgebra):
    """The principal filters at the atoms, in atom order.

    In a finite algebra these are all the ultrafilters.
    """
    from .families import principal_stack

    return [principal_stack(a) for a in atoms(algebra)]
