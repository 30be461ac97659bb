"""Binary contact relations, hypercontacts, and their link to ultracontacts."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable

from . import _caps, _kernels
from .boolalg import Element, FiniteBooleanAlgebra
from .errors import AlgebraError, AxiomViolation
from .families import Family, iter_bits
from .uca import FamilySystem, Ultracontact

__all__ = [
    "ContactRelation",
    "Hypercontact",
    "CliqueFailure",
    "check_contact",
    "overlap",
    "full_contact",
    "derive_contact",
    "smallest_uc_for",
    "largest_uc_for",
    "derive_hypercontact",
    "check_hypercontact",
    "is_clique",
    "clique_failure",
    "k4_violation_witness",
]


def _mask(algebra: FiniteBooleanAlgebra, x) -> int:
    if isinstance(x, Element):
        if x.algebra != algebra:
            raise AlgebraError("element from a different algebra")
        return x.mask
    if isinstance(x, str):
        return algebra.parse(x).mask
    return algebra.element(x).mask


class ContactRelation:
    """A binary relation on the elements of a small algebra.

    ``rows[x]`` has bit ``y`` set iff ``x C y``.  Nothing is assumed about the
    axioms until :func:`check_contact` is called.
    """

    __slots__ = ("algebra", "rows")

    def __init__(self, algebra: FiniteBooleanAlgebra, rows: Iterable[int]):
        _caps.require("relations", algebra.n, "contact relation")
        rows = tuple(rows)
        if len(rows) != algebra.size:
            raise ValueError(f"expected {algebra.size} rows")
        self.algebra = algebra
        self.rows = rows

    @classmethod
    def from_pairs(cls, algebra: FiniteBooleanAlgebra, pairs, symmetric: bool = True) -> ContactRelation:
        rows = [0] * algebra.size
        for x, y in pairs:
            x, y = _mask(algebra, x), _mask(algebra, y)
            rows[x] |= 1 << y
            if symmetric:
                rows[y] |= 1 << x
        return cls(algebra, rows)

    def related(self, x, y) -> bool:
        return bool(self.rows[_mask(self.algebra, x)] >> _mask(self.algebra, y) & 1)

    __call__ = related

    def pairs(self) -> list[tuple[int, int]]:
        """Related pairs ``(x, y)`` with ``x <= y`` by mask value."""
        return [(x, y) for x, row in enumerate(self.rows) for y in iter_bits(row) if x <= y]

    def __eq__(self, other):
        if not isinstance(other, ContactRelation):
            return NotImplemented
        return self.algebra == other.algebra and self.rows == other.rows

    def __hash__(self):
        return hash((self.algebra.atom_names, self.rows))

    def __le__(self, other: ContactRelation) -> bool:
        return all(a & ~b == 0 for a, b in zip(self.rows, other.rows))

    def __repr__(self):
        return f"ContactRelation({len(self.pairs())} unordered pairs)"

    def violation(self) -> AxiomViolation | None:
        alg = self.algebra
        size = alg.size
        rows = self.rows
        lab = alg.label
        if rows[0]:
            y = next(iter_bits(rows[0]))
            return AxiomViolation("C0", f"0 is in contact with {lab(y)}", x=0, y=y)
        for x in range(size):
            if rows[x] & 1:
                return AxiomViolation("C0", f"{lab(x)} is in contact with 0", x=x, y=0)
        for x in range(1, size):
            if not rows[x] >> x & 1:
                return AxiomViolation("C1", f"{lab(x)} is not in contact with itself", x=x)
        for x in range(size):
            for y in iter_bits(rows[x]):
                if not rows[y] >> x & 1:
                    return AxiomViolation("C2", f"{lab(x)} C {lab(y)} but not conversely", x=x, y=y)
        for x in range(size):
            for y in iter_bits(rows[x]):
                for z in range(size):
                    if y & ~z == 0 and not rows[x] >> z & 1:
                        return AxiomViolation(
                            "C3", f"{lab(x)} C {lab(y)} and {lab(y)} <= {lab(z)} but not {lab(x)} C {lab(z)}",
                            x=x, y=y, z=z,
                        )
        for x in range(size):
            for yz in iter_bits(rows[x]):
                for y in range(size):
                    for z in range(size):
                        if y | z == yz and not (rows[x] >> y & 1 or rows[x] >> z & 1):
                            return AxiomViolation(
                                "C4", f"{lab(x)} C {lab(y)}+{lab(z)} but with neither summand",
                                x=x, y=y, z=z,
                            )
        return None

    @property
    def is_valid(self) -> bool:
        return self.violation() is None

    def to_json(self) -> dict:
        names = self.algebra.names
        return {
            "kind": "contact",
            "algebra": self.algebra.to_json(),
            "pairs": [[names(x), names(y)] for x, y in self.pairs()],
        }


def check_contact(c: ContactRelation) -> ContactRelation:
    """Validate (C0)-(C4); raises :class:`AxiomViolation` on failure."""
    bad = c.violation()
    if bad is not None:
        raise bad
    return c


def overlap(algebra: FiniteBooleanAlgebra) -> ContactRelation:
    """``x C y`` iff ``x * y != 0``: the smallest contact."""
    size = algebra.size
    return ContactRelation(algebra, [sum(1 << y for y in range(size) if x & y) for x in range(size)])


def full_contact(algebra: FiniteBooleanAlgebra) -> ContactRelation:
    """Every pair of nonzero elements: the largest contact."""
    nonzero = ((1 << algebra.size) - 1) & ~1
    return ContactRelation(algebra, [0] + [nonzero] * (algebra.size - 1))


def derive_contact(k: Ultracontact) -> ContactRelation:
    """``x C y`` iff ``{x, y}`` is a member of ``k``."""
    size = k.algebra.size
    rows = [sum(1 << y for y in range(size) if k.contains_bits(1 << x | 1 << y)) for x in range(size)]
    return ContactRelation(k.algebra, rows)


def smallest_uc_for(c: ContactRelation) -> Ultracontact:
    """The least ultracontact inducing ``c``: atom pairs in contact span its complex."""
    check_contact(c)
    n = c.algebra.n
    edges = [1 << i | 1 << j for i, j in combinations(range(n), 2) if c.rows[1 << i] >> (1 << j) & 1]
    return Ultracontact(c.algebra, edges)


def largest_uc_for(c: ContactRelation) -> Ultracontact:
    """The greatest ultracontact inducing ``c``: its faces are the atom cliques."""
    check_contact(c)
    n = c.algebra.n
    adj = [sum(1 << j for j in range(n) if c.rows[1 << i] >> (1 << j) & 1) for i in range(n)]
    cliques = [s for s in range(1, 1 << n) if all(s & ~adj[i] == 0 for i in iter_bits(s))]
    return Ultracontact(c.algebra, cliques)


class Hypercontact:
    """A set of finite families (all families are finite here), with the empty one allowed."""

    __slots__ = ("algebra", "table")

    def __init__(self, algebra: FiniteBooleanAlgebra, table: bytearray):
        _caps.require("explicit", algebra.n, "hypercontact")
        if len(table) != 1 << algebra.size:
            raise ValueError(f"expected a membership table of length {1 << algebra.size}")
        self.algebra = algebra
        self.table = bytearray(1 if t else 0 for t in table)

    @classmethod
    def of(cls, algebra: FiniteBooleanAlgebra, members: Iterable[Family]) -> Hypercontact:
        return cls(algebra, FamilySystem.of(algebra, members).table)

    def __contains__(self, f) -> bool:
        return isinstance(f, Family) and f.algebra == self.algebra and bool(self.table[f.bits])

    def __len__(self):
        return sum(self.table)

    def __eq__(self, other):
        if not isinstance(other, Hypercontact):
            return NotImplemented
        return self.algebra == other.algebra and self.table == other.table

    __hash__ = None

    def members(self) -> list[Family]:
        return [Family(self.algebra, i) for i, t in enumerate(self.table) if t]

    def violation(self) -> AxiomViolation | None:
        hit = _kernels.hypercontact_violation(bytes(self.table), self.algebra.n)
        if hit is None:
            return None
        axiom, a, b, c = hit
        alg = self.algebra
        fam = lambda bits: Family(alg, bits)  # noqa: E731
        if axiom == "H0":
            return AxiomViolation("H0", "the empty family is missing")
        if axiom == "H1":
            return AxiomViolation("H1", f"{fam(a)} contains 0", F=fam(a))
        if axiom == "H2":
            return AxiomViolation("H2", f"singleton {fam(a)} is missing", F=fam(a))
        if axiom == "H3":
            return AxiomViolation("H3", f"{fam(a)} is a member but its subset {fam(b)} is not", F=fam(a), G=fam(b))
        if axiom == "H4":
            return AxiomViolation(
                "H4", f"{fam(a)} is a member but adding {alg.label(b)} above it is not",
                F=fam(a), y=alg.element(b),
            )
        return AxiomViolation(
            "H5",
            f"{fam(a)} with {alg.label(b | c)} is a member but neither {alg.label(b)} nor {alg.label(c)} can replace it",
            F=fam(a), x=alg.element(b), y=alg.element(c),
        )

    @property
    def is_valid(self) -> bool:
        return self.violation() is None

    def to_json(self) -> dict:
        return {
            "kind": "hypercontact",
            "algebra": self.algebra.to_json(),
            "members": [f.to_json() for f in self.members()],
        }


def derive_hypercontact(k: Ultracontact) -> Hypercontact:
    """The finite members of ``k`` together with the empty family."""
    table = k.table()
    table[0] = 1
    return Hypercontact(k.algebra, table)


def check_hypercontact(delta: Hypercontact) -> Hypercontact:
    """Validate (H1)-(H5) plus membership of the empty family ("H0")."""
    bad = delta.violation()
    if bad is not None:
        raise bad
    return delta


def is_clique(c: ContactRelation, f: Family) -> bool:
    """Nonempty and pairwise in contact (each member with itself too)."""
    members = list(iter_bits(f.bits))
    return bool(members) and all(c.rows[x] >> y & 1 for x in members for y in members)


@dataclass(frozen=True)
class CliqueFailure:
    """Four elements showing that cliques of ``C`` violate (K4)."""

    p: Element
    q: Element
    r: Element
    s: Element
    left: Family
    right: Family
    total: Family
    total_is_clique: bool
    left_is_clique: bool
    right_is_clique: bool

    @property
    def holds(self) -> bool:
        return self.total_is_clique and not self.left_is_clique and not self.right_is_clique


def clique_failure(c: ContactRelation, p, q, r, s) -> CliqueFailure:
    """Evaluate ``{p,q} + {r,s}`` against the clique reading of (K4)."""
    alg = c.algebra
    p, q, r, s = (_mask(alg, x) for x in (p, q, r, s))
    left = Family(alg, 1 << p | 1 << q)
    right = Family(alg, 1 << r | 1 << s)
    total = Family(alg, _kernels.minkowski(left.bits, right.bits, alg.n))
    return CliqueFailure(
        *(alg.element(x) for x in (p, q, r, s)),
        left=left,
        right=right,
        total=total,
        total_is_clique=is_clique(c, total),
        left_is_clique=is_clique(c, left),
        right_is_clique=is_clique(c, right),
    )


def k4_violation_witness(c: ContactRelation) -> CliqueFailure | None:
    """First ``(p, q, r, s)`` in lexicographic mask order showing cliques break (K4).

    Candidates are pairwise distinct with ``p C r``, ``p C s``, not ``p C q`` and
    not ``r C s``; the first one whose sum is verified to be a clique is
    returned.  ``q = 0`` fits the pattern but never verifies, since then
    ``q + r = r`` and ``q + s = s`` are not in contact.
    """
    check_contact(c)
    rows = c.rows
    size = c.algebra.size
    for p in range(size):
        for q in range(size):
            if q == p or rows[p] >> q & 1:
                continue
            for r in iter_bits(rows[p]):
                if r in (p, q):
                    continue
                for s in iter_bits(rows[p]):
                    if s in (p, q, r) or rows[r] >> s & 1:
                        continue
                    hit = clique_failure(c, p, q, r, s)
                    if hit.holds:
                        return hit
    return None
