"""Abstract simplicial complexes on the atoms, and the map sigma between them and ultracontacts."""

from __future__ import annotations

from typing import Iterable, Sequence

from . import _caps
from .boolalg import FiniteBooleanAlgebra, make_algebra
from .errors import AxiomViolation, UclabError
from .families import iter_bits
from .uca import Ultracontact, maximal_faces

__all__ = [
    "SimplicialComplex",
    "check_complex",
    "sigma",
    "sigma_inverse",
    "enumerate_complexes",
    "enumerate_ucs",
]


def _popcount(x: int) -> int:
    return bin(x).count("1")


class SimplicialComplex:
    """Faces over a named vertex list, each face stored as a vertex bitmask.

    The constructor does not check (SC1)/(SC2); use :func:`check_complex`.
    """

    __slots__ = ("vertices", "faces", "_set")

    def __init__(self, vertices: Sequence[str], faces: Iterable = ()):
        self.vertices = tuple(vertices)
        index = {v: i for i, v in enumerate(self.vertices)}
        if len(index) != len(self.vertices):
            raise UclabError("duplicate vertex names")
        masks = set()
        for face in faces:
            if isinstance(face, int):
                mask = face
            else:
                try:
                    mask = sum(1 << index[v] for v in set(face))
                except KeyError as e:
                    raise UclabError(f"unknown vertex {e.args[0]!r}") from None
            if not 0 < mask < 1 << len(self.vertices):
                raise UclabError(f"face {face!r} is empty or out of range")
            masks.add(mask)
        self.faces = tuple(sorted(masks))
        self._set = frozenset(masks)

    def __contains__(self, face) -> bool:
        if isinstance(face, int):
            return face in self._set
        index = {v: i for i, v in enumerate(self.vertices)}
        return sum(1 << index[v] for v in face) in self._set

    def __len__(self):
        return len(self.faces)

    def __eq__(self, other):
        if not isinstance(other, SimplicialComplex):
            return NotImplemented
        return self.vertices == other.vertices and self.faces == other.faces

    def __hash__(self):
        return hash((self.vertices, self.faces))

    def __le__(self, other: SimplicialComplex) -> bool:
        return self._set <= other._set

    def __lt__(self, other):
        return self._set < other._set

    def __and__(self, other: SimplicialComplex) -> SimplicialComplex:
        return SimplicialComplex(self.vertices, self._set & other._set)

    def __or__(self, other: SimplicialComplex) -> SimplicialComplex:
        return SimplicialComplex(self.vertices, self._set | other._set)

    @property
    def facets(self) -> tuple[int, ...]:
        return maximal_faces(self.faces)

    def names(self, face: int) -> list[str]:
        return [v for i, v in enumerate(self.vertices) if face >> i & 1]

    def __repr__(self):
        body = ", ".join("{" + ",".join(self.names(f)) + "}" for f in self.faces)
        return f"SimplicialComplex([{body}])"

    def violation(self) -> AxiomViolation | None:
        for i, v in enumerate(self.vertices):
            if 1 << i not in self._set:
                return AxiomViolation("SC1", f"singleton {{{v}}} is missing", face=[v])
        for face in self.faces:
            for i in iter_bits(face):
                sub = face & ~(1 << i)
                if sub and sub not in self._set:
                    return AxiomViolation(
                        "SC2",
                        f"{self.names(sub)} is missing below face {self.names(face)}",
                        face=self.names(face),
                        missing=self.names(sub),
                    )
        return None

    @property
    def is_valid(self) -> bool:
        return self.violation() is None

    def to_json(self) -> dict:
        order = sorted(self.faces, key=lambda f: (_popcount(f), f))
        return {
            "kind": "complex",
            "vertices": list(self.vertices),
            "faces": [self.names(f) for f in order],
        }


def check_complex(cx: SimplicialComplex) -> SimplicialComplex:
    """Validate (SC1)/(SC2); raises :class:`AxiomViolation` on failure."""
    bad = cx.violation()
    if bad is not None:
        raise bad
    return cx


def sigma(k: Ultracontact) -> SimplicialComplex:
    """The atom sets belonging to ``k``."""
    return SimplicialComplex(k.algebra.atom_names, k.faces())


def sigma_inverse(cx: SimplicialComplex, algebra: FiniteBooleanAlgebra | None = None) -> Ultracontact:
    """The ultracontact of families supported by some face of ``cx``."""
    check_complex(cx)
    if algebra is None:
        algebra = make_algebra(cx.vertices)
    elif algebra.atom_names != cx.vertices:
        raise UclabError("complex vertices must be the atoms of the algebra")
    return Ultracontact(algebra, cx.faces)


def _complex_masks(n: int) -> list[tuple[int, ...]]:
    # decide candidate faces by increasing size; a face may enter only when all
    # its codimension-one faces of size >= 2 are already in
    candidates = sorted((s for s in range(1 << n) if _popcount(s) >= 2), key=lambda s: (_popcount(s), s))
    slot = {s: i for i, s in enumerate(candidates)}
    needs = []
    for s in candidates:
        req = 0
        for i in iter_bits(s):
            sub = s & ~(1 << i)
            if _popcount(sub) >= 2:
                req |= 1 << slot[sub]
        needs.append(req)
    states = [0]
    for i in range(len(candidates)):
        bit, req = 1 << i, needs[i]
        states += [st | bit for st in states if st & req == req]
    singles = tuple(1 << i for i in range(n))
    out = [tuple(sorted(singles + tuple(candidates[j] for j in iter_bits(st)))) for st in states]
    out.sort(key=lambda faces: (len(faces), faces))
    return out


def enumerate_complexes(n: int, vertices: Sequence[str] | None = None) -> list[SimplicialComplex]:
    """Every simplicial complex on ``n`` labelled vertices (all singletons present)."""
    if n < 1:
        raise UclabError("need at least one vertex")
    _caps.require("complexes", n, "complex enumeration")
    if vertices is None:
        vertices = [chr(ord("a") + i) for i in range(n)]
    return [SimplicialComplex(vertices, faces) for faces in _complex_masks(n)]


def enumerate_ucs(algebra: FiniteBooleanAlgebra) -> list[Ultracontact]:
    """Every ultracontact on ``algebra``, in the order of their complexes."""
    _caps.require("ucs", algebra.n, "ultracontact enumeration")
    return [Ultracontact(algebra, faces) for faces in _complex_masks(algebra.n)]
