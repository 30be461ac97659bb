"""JSON encoding of every structure kind.

Output is canonical: elements are atom-name lists in atom order, and every
list of elements, families or stacks is sorted by bitmask.  Loading then
dumping any canonical document reproduces it exactly.
"""

from __future__ import annotations

import json
from pathlib import Path

from .boolalg import FiniteBooleanAlgebra
from .contact import ContactRelation, Hypercontact
from .errors import UclabError
from .families import Family, Stack, up_closure
from .simplicial import SimplicialComplex
from .stacksys import StackSystem
from .topology import FiniteTopSpace
from .uca import FamilySystem, Ultracontact

__all__ = ["FormatError", "kind_of", "load", "dump", "dumps", "load_file", "save_file"]


class FormatError(UclabError, ValueError):
    """Malformed or unrecognised JSON document."""


_KEYS = [
    ("vertices", "complex"),
    ("points", "space"),
    ("pairs", "contact"),
    ("witnesses", "uc"),
    ("explicit", "uc"),
    ("antichain", "stack"),
    ("members", "family"),
    ("atoms", "algebra"),
]


def kind_of(doc: dict) -> str:
    if not isinstance(doc, dict):
        raise FormatError("expected a JSON object")
    if "kind" in doc:
        return doc["kind"]
    for key, kind in _KEYS:
        if key in doc:
            return kind
    raise FormatError("cannot tell what kind of structure this is")


def _algebra(doc) -> FiniteBooleanAlgebra:
    if not isinstance(doc, dict) or not isinstance(doc.get("atoms"), list):
        raise FormatError('algebra must look like {"atoms": [...]}')
    return FiniteBooleanAlgebra(doc["atoms"])


def _mask(alg: FiniteBooleanAlgebra, names) -> int:
    if not isinstance(names, list):
        raise FormatError(f"element must be a list of atom names, got {names!r}")
    return alg.atom_mask(names)


def _family_bits(alg: FiniteBooleanAlgebra, members) -> int:
    if not isinstance(members, list):
        raise FormatError("family must be a list of elements")
    bits = 0
    for m in members:
        bits |= 1 << _mask(alg, m)
    return bits


def _stack_bits(alg: FiniteBooleanAlgebra, antichain) -> int:
    return up_closure(Family(alg, _family_bits(alg, antichain))).bits


def load(doc: dict, validate: bool = True):
    """Decode a document.

    With ``validate`` an ultracontact document yields an :class:`Ultracontact`
    (raising :class:`~uclab.errors.AxiomViolation` if the axioms fail); without
    it the raw :class:`StackSystem` or :class:`FamilySystem` is returned.
    """
    kind = kind_of(doc)
    try:
        if kind == "algebra":
            return _algebra(doc)
        if kind == "space":
            return FiniteTopSpace(doc["points"], doc["opens"])
        if kind == "complex":
            return SimplicialComplex(doc["vertices"], doc["faces"])
        alg = _algebra(doc.get("algebra"))
        if kind == "family":
            return Family(alg, _family_bits(alg, doc["members"]))
        if kind == "stack":
            return Stack(alg, _stack_bits(alg, doc["antichain"]))
        if kind == "contact":
            pairs = [(_mask(alg, x), _mask(alg, y)) for x, y in doc["pairs"]]
            return ContactRelation.from_pairs(alg, pairs)
        if kind == "hypercontact":
            table = FamilySystem(alg).table
            for m in doc["members"]:
                table[_family_bits(alg, m)] = 1
            return Hypercontact(alg, table)
        if kind in ("uc", "stack-system"):
            raw = None
            if "witnesses" in doc:
                raw = StackSystem(alg, [_stack_bits(alg, w) for w in doc["witnesses"]])
            explicit = None
            if "explicit" in doc:
                explicit = FamilySystem(alg)
                for m in doc["explicit"]:
                    explicit.table[_family_bits(alg, m)] = 1
            if raw is None and explicit is None:
                raise FormatError("ultracontact needs witnesses or explicit members")
            if kind == "stack-system":
                return raw if not validate else _checked(raw)
            if not validate:
                return raw if raw is not None else explicit
            uc = raw.to_ultracontact() if raw is not None else explicit.to_ultracontact()
            if explicit is not None and uc.table() != explicit.table:
                raise FormatError("explicit members disagree with the witnesses")
            return uc
    except (KeyError, TypeError) as e:
        raise FormatError(f"malformed {kind} document: {e}") from None
    raise FormatError(f"unknown kind {kind!r}")


def _checked(system: StackSystem) -> StackSystem:
    bad = system.violation()
    if bad is not None:
        raise bad
    return system


def dump(obj, explicit: bool = False) -> dict:
    if isinstance(obj, FiniteBooleanAlgebra):
        return {"kind": "algebra", **obj.to_json()}
    if isinstance(obj, Stack):
        return {"kind": "stack", "algebra": obj.algebra.to_json(), "antichain": obj.to_json()}
    if isinstance(obj, Family):
        return {"kind": "family", "algebra": obj.algebra.to_json(), "members": obj.to_json()}
    if isinstance(obj, Ultracontact):
        return obj.to_json(explicit=explicit)
    if isinstance(obj, FamilySystem):
        return {"kind": "uc", "algebra": obj.algebra.to_json(), "explicit": [f.to_json() for f in obj.members()]}
    if isinstance(obj, (StackSystem, ContactRelation, Hypercontact, SimplicialComplex, FiniteTopSpace)):
        return obj.to_json()
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def dumps(obj, explicit: bool = False) -> str:
    return json.dumps(dump(obj, explicit=explicit), indent=1, sort_keys=True)


def load_file(path, validate: bool = True):
    try:
        doc = json.loads(Path(path).read_text())
    except json.JSONDecodeError as e:
        raise FormatError(f"{path}: invalid JSON ({e})") from None
    return load(doc, validate=validate)


def save_file(obj, path, explicit: bool = False) -> None:
    Path(path).write_text(dumps(obj, explicit=explicit) + "\n")
