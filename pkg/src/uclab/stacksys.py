"""Stack systems: the up-set axiomatization of ultracontacts.

A stack system is a set of stacks satisfying (SS0)-(SS4).  The maps ``sk_of``
(up-closures of members) and ``ks_of`` (families whose up-closure is a member)
are mutually inverse between ultracontacts and stack systems.
"""

from __future__ import annotations

from typing import Iterable

from . import _caps, _kernels
from .boolalg import FiniteBooleanAlgebra
from .errors import AlgebraError, AxiomViolation, CapError, UclabError
from .families import Stack, iter_bits, stack_bits
from .uca import FamilySystem, Ultracontact, _atom_family_bits, _grill_bits

__all__ = [
    "StackSystem",
    "check_ss",
    "sk_of",
    "ks_of",
    "smin",
    "smax",
    "bruteforce_stack_systems",
]


class StackSystem:
    """A set of stacks of one algebra (not necessarily satisfying the axioms)."""

    __slots__ = ("algebra", "members", "_set")

    def __init__(self, algebra: FiniteBooleanAlgebra, stacks: Iterable = ()):
        _caps.require("witnesses", algebra.n, "stack system")
        n = algebra.n
        bits = set()
        for s in stacks:
            if isinstance(s, Stack):
                if s.algebra != algebra:
                    raise AlgebraError("stack from a different algebra")
                s = s.bits
            if _kernels.upclose(s, n) != s:
                raise UclabError(f"family bits {s} are not a stack")
            bits.add(s)
        self.algebra = algebra
        self.members = tuple(sorted(bits))
        self._set = frozenset(bits)

    def __contains__(self, s) -> bool:
        if isinstance(s, Stack):
            return s.algebra == self.algebra and s.bits in self._set
        return s in self._set

    def __len__(self):
        return len(self.members)

    def __iter__(self):
        return iter(self.stacks())

    def stacks(self) -> list[Stack]:
        return [Stack(self.algebra, s) for s in self.members]

    def __eq__(self, other):
        if not isinstance(other, StackSystem):
            return NotImplemented
        return self.algebra == other.algebra and self.members == other.members

    def __hash__(self):
        return hash((self.algebra.atom_names, self.members))

    def __le__(self, other: StackSystem) -> bool:
        return set(self.members) <= set(other.members)

    def __repr__(self):
        return f"StackSystem({len(self)} stacks over {list(self.algebra.atom_names)})"

    def violation(self) -> AxiomViolation | None:
        """The first failed axiom among (SS0)-(SS4), quantified over all stacks."""
        alg = self.algebra
        n = alg.n
        mine = self._set
        st = lambda b: Stack(alg, b)  # noqa: E731
        if 0 in mine:
            return AxiomViolation("SS0", "the empty stack is a member")
        full = (1 << (1 << n)) - 1
        if full in mine:
            return AxiomViolation("SS1", "B itself is a member", U=st(full))
        for x in range(1, 1 << n):
            up = _kernels.upclose(1 << x, n)
            if up not in mine:
                return AxiomViolation("SS2", f"principal stack up({alg.label(x)}) is missing", U=st(up))
        everything = stack_bits(n, "witnesses")
        for v in self.members:
            for u in everything:
                if u and u & ~v == 0 and u not in mine:
                    return AxiomViolation("SS3", f"{st(u)} lies inside member {st(v)} but is missing", U=st(u), V=st(v))
        for i, u in enumerate(everything):
            if u in mine:
                continue
            for v in everything[i:]:
                if v not in mine and (u & v) in mine:
                    return AxiomViolation(
                        "SS4", f"{st(u & v)} is a member but neither {st(u)} nor {st(v)} is", U=st(u), V=st(v)
                    )
        return None

    @property
    def is_valid(self) -> bool:
        return self.violation() is None

    def to_ultracontact(self) -> Ultracontact:
        """The ultracontact with this witness set; raises if the axioms fail."""
        bad = self.violation()
        if bad is not None:
            raise bad
        n = self.algebra.n
        mine = self._set
        faces = [a for a in range(1, 1 << n) if _grill_bits(n, a) in mine]
        uc = Ultracontact(self.algebra, faces)
        if tuple(uc.witness_bits()) != self.members:
            raise UclabError("stack system disagrees with its atom complex")
        return uc

    def to_family_system(self) -> FamilySystem:
        return ks_of(self)

    def to_json(self) -> dict:
        return {
            "kind": "stack-system",
            "algebra": self.algebra.to_json(),
            "witnesses": [s.to_json() for s in self.stacks()],
        }


def check_ss(algebra: FiniteBooleanAlgebra, stacks: Iterable) -> StackSystem:
    """Validate (SS0)-(SS4); raises :class:`AxiomViolation` on failure."""
    system = stacks if isinstance(stacks, StackSystem) else StackSystem(algebra, stacks)
    bad = system.violation()
    if bad is not None:
        raise bad
    return system


def sk_of(k) -> StackSystem:
    """Up-closures of the members of an ultracontact or explicit family system."""
    if isinstance(k, Ultracontact):
        return StackSystem(k.algebra, k.witness_bits())
    if isinstance(k, FamilySystem):
        n = k.algebra.n
        return StackSystem(k.algebra, {_kernels.upclose(f, n) for f in k.member_bits()})
    raise TypeError(f"expected an Ultracontact or FamilySystem, got {type(k).__name__}")


def ks_of(s: StackSystem) -> FamilySystem:
    """Every family whose up-closure belongs to ``s``."""
    n = s.algebra.n
    mine = s._set
    system = FamilySystem(s.algebra)
    table = system.table
    for f in range(1, len(table)):
        if _kernels.upclose(f, n) in mine:
            table[f] = 1
    return system


def smin(algebra: FiniteBooleanAlgebra) -> StackSystem:
    """Nonempty stacks inside some principal stack, i.e. with nonzero meet."""
    n = algebra.n
    full = algebra.full_mask
    out = []
    for s in stack_bits(n, "witnesses"):
        meet = full
        for x in iter_bits(s):
            meet &= x
        if s and meet:
            out.append(s)
    return StackSystem(algebra, out)


def smax(algebra: FiniteBooleanAlgebra) -> StackSystem:
    """Every stack except the empty one and B."""
    full = (1 << algebra.size) - 1
    return StackSystem(algebra, [s for s in stack_bits(algebra.n, "witnesses") if s and s != full])


def bruteforce_stack_systems(algebra: FiniteBooleanAlgebra, restrict: bool = True) -> list[StackSystem]:
    """Every stack system, by filtering subsets of Stack(B) through the axioms.

    With ``restrict`` the atom stacks are fixed in and the empty stack and B
    fixed out, which every solution satisfies anyway.  Only feasible for at most
    three atoms.
    """
    n = algebra.n
    if n > 3:
        raise CapError("the stack-system brute force is capped at 3 atoms")
    stacks = list(stack_bits(n))
    index = {s: i for i, s in enumerate(stacks)}
    fixed_in = fixed_out = 0
    if restrict:
        for i in range(n):
            fixed_in |= 1 << index[_kernels.upclose(_atom_family_bits(1 << i), n)]
        fixed_out = 1 << index[0] | 1 << index[(1 << (1 << n)) - 1]
    found = _kernels.ss_bruteforce(stacks, n, fixed_in, fixed_out)
    return [StackSystem(algebra, [stacks[i] for i in iter_bits(m)]) for m in found]
