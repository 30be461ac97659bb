"""Finite topological spaces, regular closed algebras and the intersection ultracontact."""

from __future__ import annotations

from itertools import combinations
from typing import Iterable, Sequence

from . import _caps
from .boolalg import Element, FiniteBooleanAlgebra
from .errors import UclabError
from .families import Family, iter_bits
from .uca import FamilySystem, Ultracontact, uc_from_explicit

__all__ = [
    "FiniteTopSpace",
    "RegularClosedAlgebra",
    "make_space",
    "rc_algebra",
    "intersection_system",
    "intersection_uc",
    "enumerate_topologies",
    "in_family",
]


class FiniteTopSpace:
    """A topology on at most six named points; sets are point bitmasks."""

    __slots__ = ("points", "opens", "_index")

    def __init__(self, points: Sequence[str], opens: Iterable):
        points = tuple(points)
        cap = _caps.limit("space_points")
        if not points:
            raise UclabError("a space needs at least one point")
        if len(points) > cap:
            raise UclabError(f"at most {cap} points are supported (got {len(points)})")
        if len(set(points)) != len(points) or any(not isinstance(p, str) or not p for p in points):
            raise UclabError("point names must be distinct nonempty strings")
        self.points = points
        self._index = {p: i for i, p in enumerate(points)}
        masks = {self.mask(o) for o in opens}
        full = (1 << len(points)) - 1
        if 0 not in masks:
            raise UclabError("the empty set must be open")
        if full not in masks:
            raise UclabError("the whole space must be open")
        for u, v in combinations(sorted(masks), 2):
            if u | v not in masks:
                raise UclabError(f"opens not closed under union: {self.names(u)} and {self.names(v)}")
            if u & v not in masks:
                raise UclabError(f"opens not closed under intersection: {self.names(u)} and {self.names(v)}")
        self.opens = tuple(sorted(masks))

    def mask(self, subset) -> int:
        if isinstance(subset, int):
            if not 0 <= subset < 1 << len(self.points):
                raise UclabError(f"point mask {subset} out of range")
            return subset
        try:
            return sum(1 << self._index[p] for p in set(subset))
        except KeyError as e:
            raise UclabError(f"unknown point {e.args[0]!r}") from None

    def names(self, mask: int) -> list[str]:
        return [p for i, p in enumerate(self.points) if mask >> i & 1]

    @property
    def full(self) -> int:
        return (1 << len(self.points)) - 1

    def interior(self, subset) -> int:
        a = self.mask(subset)
        out = 0
        for u in self.opens:
            if u & ~a == 0:
                out |= u
        return out

    def closure(self, subset) -> int:
        return self.full & ~self.interior(self.full & ~self.mask(subset))

    def is_regular_closed(self, subset) -> bool:
        a = self.mask(subset)
        return self.closure(self.interior(a)) == a

    def __eq__(self, other):
        if not isinstance(other, FiniteTopSpace):
            return NotImplemented
        return self.points == other.points and self.opens == other.opens

    def __hash__(self):
        return hash((self.points, self.opens))

    def __repr__(self):
        return f"FiniteTopSpace({list(self.points)}, {len(self.opens)} opens)"

    def to_json(self) -> dict:
        return {"kind": "space", "points": list(self.points), "opens": [self.names(u) for u in self.opens]}


def make_space(points: Sequence[str], opens: Iterable) -> FiniteTopSpace:
    return FiniteTopSpace(points, opens)


class RegularClosedAlgebra:
    """The Boolean algebra of regular closed subsets of a finite space.

    Atoms are the minimal nonempty regular closed sets.  An element's point
    extent is the union of the extents of its atoms.  Construction checks that
    this matches the regular closed operations: join is union, meet is
    ``Cl Int`` of the intersection, complement is ``Cl`` of the set complement.
    """

    __slots__ = ("space", "algebra", "atom_extents", "_by_extent")

    def __init__(self, space: FiniteTopSpace):
        self.space = space
        rc = [a for a in range(space.full + 1) if space.is_regular_closed(a)]
        nonempty = [a for a in rc if a]
        atoms = [a for a in nonempty if not any(b != a and b & ~a == 0 for b in nonempty)]
        self.atom_extents = tuple(sorted(atoms))
        self.algebra = FiniteBooleanAlgebra(self._atom_names(space, self.atom_extents))
        self._by_extent = {self.extent(m): m for m in range(self.algebra.size)}
        if sorted(self._by_extent) != rc:
            raise UclabError("regular closed sets are not the unions of the atoms")
        full = self.algebra.full_mask
        for x in range(self.algebra.size):
            ex = self.extent(x)
            if space.closure(space.full & ~ex) != self.extent(full & ~x):
                raise UclabError("complement is not the closure of the set complement")
            for y in range(x, self.algebra.size):
                met = space.closure(space.interior(ex & self.extent(y)))
                if met != self.extent(x & y):
                    raise UclabError("meet is not Cl Int of the intersection")

    @staticmethod
    def _atom_names(space: FiniteTopSpace, extents: Sequence[int]) -> list[str]:
        single = all(len(p) == 1 for p in space.points)
        if single:
            return ["".join(space.names(e)) for e in extents]
        return ["{" + ",".join(space.names(e)) + "}" for e in extents]

    def extent(self, x) -> int:
        """Point mask of an element (or element mask)."""
        mask = x.mask if isinstance(x, Element) else x
        out = 0
        for i in iter_bits(mask):
            out |= self.atom_extents[i]
        return out

    def element_of(self, subset) -> Element:
        """The element whose extent is the given regular closed set."""
        a = self.space.mask(subset)
        if a not in self._by_extent:
            raise UclabError(f"{self.space.names(a)} is not regular closed")
        return Element(self.algebra, self._by_extent[a])

    def regular_closed_sets(self) -> list[int]:
        return sorted(self._by_extent)

    def __len__(self):
        return self.algebra.size

    def __repr__(self):
        return f"RegularClosedAlgebra({len(self)} elements, atoms {list(self.algebra.atom_names)})"


def rc_algebra(space: FiniteTopSpace) -> RegularClosedAlgebra:
    return RegularClosedAlgebra(space)


def intersection_system(rc: RegularClosedAlgebra) -> FamilySystem:
    """Nonempty families whose point extents share a point (intersection in the space)."""
    alg = rc.algebra
    _caps.require("explicit", alg.n, "intersection ultracontact")
    system = FamilySystem(alg)
    table = system.table
    space_full = rc.space.full
    extents = [rc.extent(x) for x in range(alg.size)]
    for f in range(1, len(table)):
        common = space_full
        for x in iter_bits(f):
            common &= extents[x]
        if common:
            table[f] = 1
    return system


def intersection_uc(space: FiniteTopSpace) -> Ultracontact:
    """The ultracontact of families of regular closed sets with a common point.

    Validated against (K0)-(K4) through :func:`uc_from_explicit`; the result
    lives on ``rc_algebra(space).algebra``.
    """
    return uc_from_explicit(intersection_system(rc_algebra(space)))


def enumerate_topologies(points: Sequence[str]) -> list[FiniteTopSpace]:
    """Every topology on the labelled points, by filtering families of subsets."""
    n = len(points)
    if n > 3:
        raise UclabError("topology enumeration is capped at 3 points")
    full = (1 << n) - 1
    middle = list(range(1, full))
    out = []
    for pick in range(1 << len(middle)):
        opens = {0, full} | {middle[i] for i in iter_bits(pick)}
        if all(u | v in opens and u & v in opens for u in opens for v in opens):
            out.append(FiniteTopSpace(points, opens))
    return out


def in_family(rc: RegularClosedAlgebra, sets: Iterable) -> Family:
    """Family of the elements with the given regular closed extents."""
    return Family.of(rc.algebra, [rc.element_of(s) for s in sets])
