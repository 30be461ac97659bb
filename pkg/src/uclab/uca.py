"""Ultracontacts on finite Boolean algebras.

On a finite algebra an ultracontact is fixed by the atom sets it contains,
which form a simplicial complex.  :class:`Ultracontact` stores the facets
(maximal faces) of that complex as atom masks; a family ``F`` is a member
exactly when it is nonempty and some face ``H`` supports it, i.e. every member
of ``F`` meets ``H``.  The stack witnesses (the up-closures of members) and the
explicit member table are derived views.

:class:`FamilySystem` is the explicit form: a membership table over all
families, used for axiom checking and for candidate systems that may fail to
be ultracontacts.
"""

from __future__ import annotations

from functools import cached_property, reduce
from itertools import combinations
from typing import Iterable, Iterator, Sequence

from . import _caps, _kernels
from .boolalg import FiniteBooleanAlgebra
from .errors import (
    AlgebraError,
    AxiomViolation,
    NonAtomError,
    NotAGrillError,
    PreconditionError,
    UclabError,
)
from .families import (
    Family,
    Stack,
    classify,
    grill_atoms,
    grill_of_atoms,
    iter_bits,
    stack_bits,
)

__all__ = [
    "Ultracontact",
    "FamilySystem",
    "maximal_faces",
    "uc_from_explicit",
    "uc_membership",
    "kmin",
    "kmax",
    "uc_join",
    "uc_meet",
    "meet_oracle",
    "meet_oracle_cover",
    "extend_by_grills",
    "extend_by_set",
    "extend_by_atoms",
    "upset_extension",
    "witness_meet_failure",
    "chain_meet",
]


def maximal_faces(faces: Iterable[int]) -> tuple[int, ...]:
    """Drop zero and non-maximal atom masks; ascending order."""
    uniq = sorted({f for f in faces if f})
    keep = [f for f in uniq if not any(f != g and f & ~g == 0 for g in uniq)]
    return tuple(keep)


def _submasks(x: int) -> Iterator[int]:
    """Nonzero submasks of ``x``."""
    sub = x
    while sub:
        yield sub
        sub = (sub - 1) & x


def _grill_bits(n: int, atom_mask: int) -> int:
    full = (1 << n) - 1
    return ((1 << (1 << n)) - 1) & ~_kernels.downclose(1 << (full & ~atom_mask), n)


def _atom_family_bits(atom_mask: int) -> int:
    return sum(1 << (1 << i) for i in iter_bits(atom_mask))


class Ultracontact:
    """An ultracontact, stored by the facets of its complex of atom sets.

    Build one with :func:`kmin`, :func:`kmax`, :func:`uc_from_explicit`, the
    lattice operations, or directly from any list of atom sets; the faces are
    closed downwards and every singleton is added.
    """

    def __init__(self, algebra: FiniteBooleanAlgebra, faces: Iterable[int] = ()):
        faces = list(faces)
        for f in faces:
            if not 0 < f <= algebra.full_mask:
                raise AlgebraError(f"face mask {f} out of range")
        singles = [1 << i for i in range(algebra.n)]
        self.algebra = algebra
        self.facets = maximal_faces(faces + singles)

    def __eq__(self, other):
        if not isinstance(other, Ultracontact):
            return NotImplemented
        return self.algebra == other.algebra and self.facets == other.facets

    def __hash__(self):
        return hash((self.algebra.atom_names, self.facets))

    def __le__(self, other: Ultracontact) -> bool:
        self._same(other)
        return all(any(f & ~g == 0 for g in other.facets) for f in self.facets)

    def __lt__(self, other):
        return self <= other and self != other

    def __ge__(self, other):
        return other <= self

    def __gt__(self, other):
        return other < self

    def _same(self, other):
        if other.algebra != self.algebra:
            raise AlgebraError("ultracontacts on different algebras")

    def __repr__(self):
        faces = ", ".join("{" + ",".join(self.algebra.names(f)) + "}" for f in self.facets)
        return f"Ultracontact(facets=[{faces}])"

    @cached_property
    def _grills(self) -> tuple[int, ...]:
        return tuple(_grill_bits(self.algebra.n, h) for h in self.facets)

    def contains_bits(self, bits: int) -> bool:
        return bits != 0 and any(bits & ~g == 0 for g in self._grills)

    def __contains__(self, f) -> bool:
        if not isinstance(f, Family):
            return False
        if f.algebra != self.algebra:
            raise AlgebraError("family and ultracontact on different algebras")
        return self.contains_bits(f.bits)

    def faces(self) -> list[int]:
        """Every face (atom set that is a member) as an atom mask, ascending."""
        out = set()
        for h in self.facets:
            out.update(_submasks(h))
        return sorted(out)

    def has_face(self, atom_mask: int) -> bool:
        return atom_mask != 0 and any(atom_mask & ~h == 0 for h in self.facets)

    def is_witness(self, stack_bits_: int) -> bool:
        return self.contains_bits(stack_bits_)

    def witness_bits(self) -> list[int]:
        _caps.require("witnesses", self.algebra.n, "stack witness listing")
        return [s for s in stack_bits(self.algebra.n, "witnesses") if self.contains_bits(s)]

    def witnesses(self) -> list[Stack]:
        """The stack system: up-closures of all members."""
        return [Stack(self.algebra, s) for s in self.witness_bits()]

    def table(self) -> bytearray:
        """Membership table indexed by family bits."""
        n = self.algebra.n
        _caps.require("explicit", n, "explicit membership table")
        table = bytearray(1 << (1 << n))
        for g in self._grills:
            if table[g]:
                continue
            for sub in _submasks(g):
                table[sub] = 1
        return table

    def explicit(self) -> FamilySystem:
        return FamilySystem(self.algebra, self.table())

    def members(self) -> Iterator[Family]:
        return self.explicit().members()

    def stack_system(self):
        from .stacksys import StackSystem

        return StackSystem(self.algebra, self.witness_bits())

    def to_json(self, explicit: bool = False) -> dict:
        out = {
            "kind": "uc",
            "algebra": self.algebra.to_json(),
            "witnesses": [Stack(self.algebra, s).to_json() for s in self.witness_bits()],
        }
        if explicit:
            out["explicit"] = [f.to_json() for f in self.members()]
        return out


class FamilySystem:
    """An explicit set of families, stored as a membership table."""

    __slots__ = ("algebra", "table")

    def __init__(self, algebra: FiniteBooleanAlgebra, table: bytearray | None = None):
        _caps.require("explicit", algebra.n, "explicit family system")
        size = 1 << (1 << algebra.n)
        if table is None:
            table = bytearray(size)
        elif len(table) != size:
            raise ValueError(f"table must have {size} entries")
        self.algebra = algebra
        self.table = bytearray(1 if t else 0 for t in table)

    @classmethod
    def of(cls, algebra: FiniteBooleanAlgebra, members: Iterable[Family]) -> FamilySystem:
        system = cls(algebra)
        for f in members:
            if f.algebra != algebra:
                raise AlgebraError("member from a different algebra")
            system.table[f.bits] = 1
        return system

    def __contains__(self, f) -> bool:
        if isinstance(f, Family):
            return f.algebra == self.algebra and bool(self.table[f.bits])
        return False

    def __len__(self):
        return sum(self.table)

    def __eq__(self, other):
        if not isinstance(other, FamilySystem):
            return NotImplemented
        return self.algebra == other.algebra and self.table == other.table

    __hash__ = None

    def __le__(self, other: FamilySystem) -> bool:
        return all(b or not a for a, b in zip(self.table, other.table))

    def __or__(self, other: FamilySystem) -> FamilySystem:
        return FamilySystem(self.algebra, bytearray(a | b for a, b in zip(self.table, other.table)))

    def __and__(self, other: FamilySystem) -> FamilySystem:
        return FamilySystem(self.algebra, bytearray(a & b for a, b in zip(self.table, other.table)))

    def member_bits(self) -> list[int]:
        return [i for i, t in enumerate(self.table) if t]

    def members(self) -> Iterator[Family]:
        return (Family(self.algebra, b) for b in self.member_bits())

    def __repr__(self):
        return f"FamilySystem({len(self)} families over {list(self.algebra.atom_names)})"

    def violation(self) -> AxiomViolation | None:
        """The first failed axiom among (K0)-(K4) with concrete witnesses."""
        alg = self.algebra
        n = alg.n
        hit = _kernels.uc_violation(bytes(self.table), n, stack_bits(n))
        if hit is None:
            return None
        axiom, a, b = hit
        fam = lambda bits: Family(alg, bits)  # noqa: E731
        if axiom == "K0":
            return AxiomViolation("K0", "the empty family is a member")
        if axiom == "K1":
            return AxiomViolation("K1", f"{fam(a)} contains 0", F=fam(a))
        if axiom == "K2":
            return AxiomViolation("K2", f"singleton {fam(a)} is missing", F=fam(a))
        if axiom == "K3":
            g = self._least_unsupported(a)
            return AxiomViolation(
                "K3", f"{fam(a)} is a member and supports {fam(g)}, which is not", F=fam(a), G=fam(g)
            )
        total = a & b
        return AxiomViolation(
            "K4",
            f"{fam(total)} = {fam(a)} + {fam(b)} is a member but neither summand is",
            F=fam(a),
            G=fam(b),
            sum=fam(total),
        )

    def _least_unsupported(self, f: int) -> int:
        # smallest non-member inside the up-closure of f, by size then lex order
        up = list(iter_bits(_kernels.upclose(f, self.algebra.n)))
        for k in range(1, len(up) + 1):
            for combo in combinations(up, k):
                bits = sum(1 << x for x in combo)
                if not self.table[bits]:
                    return bits
        raise AssertionError("K3 reported without a witness")

    @property
    def is_uc(self) -> bool:
        return self.violation() is None

    def to_ultracontact(self) -> Ultracontact:
        return uc_from_explicit(self)


def uc_from_explicit(members, algebra: FiniteBooleanAlgebra | None = None) -> Ultracontact:
    """Validate an explicit family system and return it as an :class:`Ultracontact`.

    ``members`` is a :class:`FamilySystem` or an iterable of families (then
    ``algebra`` is required when the iterable may be empty).  Raises
    :class:`AxiomViolation` naming the first failed axiom.
    """
    if isinstance(members, FamilySystem):
        system = members
    else:
        members = list(members)
        if algebra is None:
            if not members:
                raise ValueError("algebra is required for an empty member list")
            algebra = members[0].algebra
        system = FamilySystem.of(algebra, members)
    bad = system.violation()
    if bad is not None:
        raise bad
    alg = system.algebra
    faces = [a for a in range(1, 1 << alg.n) if system.table[_atom_family_bits(a)]]
    uc = Ultracontact(alg, faces)
    if uc.table() != system.table:
        raise UclabError("explicit system disagrees with its atom complex")
    return uc


def uc_membership(k: Ultracontact, f: Family) -> bool:
    return f in k


def kmin(algebra: FiniteBooleanAlgebra) -> Ultracontact:
    """The smallest ultracontact: families with a nonzero lower bound."""
    return Ultracontact(algebra)


def kmax(algebra: FiniteBooleanAlgebra) -> Ultracontact:
    """The largest ultracontact: nonempty families without 0."""
    return Ultracontact(algebra, [algebra.full_mask])


def _check_list(ks: Sequence[Ultracontact]) -> FiniteBooleanAlgebra:
    if not ks:
        raise ValueError("need at least one ultracontact")
    alg = ks[0].algebra
    for k in ks[1:]:
        if k.algebra != alg:
            raise AlgebraError("ultracontacts on different algebras")
    return alg


def uc_join(ks: Sequence[Ultracontact]) -> Ultracontact:
    """Least upper bound; on members it is the union."""
    alg = _check_list(ks)
    return Ultracontact(alg, [f for k in ks for f in k.facets])


def uc_meet(ks: Sequence[Ultracontact]) -> Ultracontact:
    """Greatest lower bound, computed as the intersection of the atom complexes."""
    alg = _check_list(ks)

    def meet2(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
        return maximal_faces(x & y for x in a for y in b)

    return Ultracontact(alg, reduce(meet2, (k.facets for k in ks)))


def meet_oracle(ks: Sequence[Ultracontact]) -> Ultracontact:
    """The meet from its defining formula, for cross-checking :func:`uc_meet`.

    ``F`` belongs to the meet iff ``F`` is nonempty and whenever ``F`` supports
    ``G1 + ... + Gm`` with every ``Gi`` nonempty, some ``Gi`` lies in every input.
    Replacing each ``Gi`` by its up-closure changes neither side, and a sum of
    stacks is their intersection, so the quantifier runs over sets of nonempty
    stacks that lie outside some input; ``F`` fails iff their intersection can
    be pushed inside the up-closure of ``F``.
    """
    alg = _check_list(ks)
    n = alg.n
    _caps.require("meet_oracle", n, "meet oracle")
    everything = stack_bits(n, "witnesses")
    bad = [s for s in everything if s and not all(k.contains_bits(s) for k in ks)]
    good_stacks = {s for s in everything if s and _kernels.find_cover(bad, s, n) < 0}
    table = bytearray(1 << (1 << n))
    for f in range(1, len(table)):
        if _kernels.upclose(f, n) in good_stacks:
            table[f] = 1
    return uc_from_explicit(FamilySystem(alg, table))


def meet_oracle_cover(ks: Sequence[Ultracontact], f: Family) -> list[Stack] | None:
    """Stacks ``G1..Gm`` outside the intersection of ``ks`` whose sum ``f`` supports.

    Such a list certifies that ``f`` is not in the meet; None means ``f`` is in
    it (or is empty).  Works at any size the witness listing allows, since only
    one target is examined.
    """
    alg = _check_list(ks)
    n = alg.n
    up = _kernels.upclose(f.bits, n)
    bad = [s for s in stack_bits(n) if s and not all(k.contains_bits(s) for k in ks)]
    # the stacks worth using are those that already fit, or help by intersection
    whole = -1
    for s in bad:
        whole &= s
    if not f.bits or whole & ~up:
        return None
    if len(bad) <= 20:
        m = _kernels.find_cover(bad, up, n)
        return [Stack(alg, bad[i]) for i in iter_bits(m)]
    for i, u in enumerate(bad):
        if u & ~up == 0:
            return [Stack(alg, u)]
    for i, u in enumerate(bad):
        for v in bad[i + 1 :]:
            if u & v & ~up == 0:
                return [Stack(alg, u), Stack(alg, v)]
    # drop members while the rest still fits
    keep = list(bad)
    for s in list(keep):
        rest = [t for t in keep if t != s]
        inter = reduce(int.__and__, rest, -1)
        if rest and inter & ~up == 0:
            keep = rest
    return [Stack(alg, s) for s in keep]


def extend_by_grills(k: Ultracontact, grills: Sequence[Family]) -> Ultracontact:
    """Smallest ultracontact containing ``k`` and every grill in ``grills``."""
    faces = list(k.facets)
    for g in grills:
        if g.algebra != k.algebra:
            raise AlgebraError("grill from a different algebra")
        if not classify(g).is_grill:
            raise NotAGrillError(f"{g} is not a grill")
        faces.append(grill_atoms(g))
    return Ultracontact(k.algebra, faces)


def extend_by_set(k: Ultracontact, m: Family) -> tuple[FamilySystem, bool]:
    """``k`` together with every nonempty subfamily of ``m``, and whether that is a UC."""
    if m.algebra != k.algebra:
        raise AlgebraError("family from a different algebra")
    system = k.explicit()
    for sub in _submasks(m.bits):
        system.table[sub] = 1
    return system, system.violation() is None


def upset_extension(k: Ultracontact, f: Family) -> FamilySystem:
    """``k`` together with every nonempty family inside the up-closure of ``f``.

    For a family of atoms this is :func:`extend_by_atoms`; for other families
    the result need not be an ultracontact.
    """
    up = Family(f.algebra, _kernels.upclose(f.bits, f.algebra.n))
    return extend_by_set(k, up)[0]


def extend_by_atoms(k: Ultracontact, atoms: Family) -> Ultracontact:
    """Smallest ultracontact containing ``k`` and the atom family ``atoms``."""
    if atoms.algebra != k.algebra:
        raise AlgebraError("family from a different algebra")
    for x in iter_bits(atoms.bits):
        if x == 0 or x & (x - 1):
            raise NonAtomError(
                f"{atoms.algebra.label(x)} is not an atom; closing the up-set of a "
                "family with non-atoms under subfamilies can break (K4)"
            )
    if not atoms.bits:
        return k
    return extend_by_grills(k, [grill_of_atoms(k.algebra, reduce(int.__or__, iter_bits(atoms.bits)))])


def witness_meet_failure(m: Family) -> tuple[Ultracontact, Ultracontact]:
    """Two ultracontacts that both contain ``m`` while their meet does not.

    ``m`` must be a stack with meet 0 that is not a grill and omits 0.  Uses the least pair
    ``(x, y)`` (by element mask) with ``x + y`` in ``m`` and ``x, y`` outside it;
    the ultracontacts are ``Kmin`` extended by the grills ``B - down(x)`` and
    ``B - down(y)``.
    """
    alg = m.algebra
    n = alg.n
    if not m.bits:
        raise PreconditionError("M is empty")
    if _kernels.upclose(m.bits, n) != m.bits:
        raise PreconditionError(f"M = {m} is not a stack")
    if m.bits & 1:
        raise PreconditionError("M contains 0, so no ultracontact contains it")
    bound = alg.full_mask
    for x in iter_bits(m.bits):
        bound &= x
    if bound:
        raise PreconditionError(f"M has nonzero lower bound {alg.label(bound)}")
    if classify(m).is_grill:
        raise PreconditionError("M is a grill")
    split = next(
        (
            (x, y)
            for x in range(1 << n)
            if not m.bits >> x & 1
            for y in range(1 << n)
            if not m.bits >> y & 1 and m.bits >> (x | y) & 1
        ),
        None,
    )
    if split is None:
        raise PreconditionError("M has no split x + y with x, y outside M")
    x, y = split
    base = kmin(alg)
    k1 = Ultracontact(alg, base.facets + (alg.full_mask & ~x,))
    k2 = Ultracontact(alg, base.facets + (alg.full_mask & ~y,))
    if m not in k1 or m not in k2 or m in uc_meet([k1, k2]):
        raise UclabError("meet-failure construction did not separate M")
    return k1, k2


class NotAChainError(PreconditionError):
    pass


def chain_meet(ks: Sequence[Ultracontact]) -> Ultracontact:
    """Meet of a chain, computed as the intersection of the stack witnesses."""
    alg = _check_list(ks)
    for i, a in enumerate(ks):
        for b in ks[i + 1 :]:
            if not (a <= b or b <= a):
                raise NotAChainError(f"{a} and {b} are incomparable")
    if alg.n > _caps.limit("witnesses"):
        return min(ks, key=lambda k: len(k.faces()))
    from .stacksys import check_ss

    common = set(ks[0].witness_bits())
    for k in ks[1:]:
        common &= set(k.witness_bits())
    return check_ss(alg, sorted(common)).to_ultracontact()
