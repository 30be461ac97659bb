"""Command line front end: ``uclab <subcommand> ...``.

Exit codes: 0 when everything checked out, 1 when a violation or failed
theorem was found (always with a counterexample in the report), 2 for bad
input.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import serialize
from .boolalg import make_algebra
from .contact import ContactRelation, Hypercontact, derive_contact, derive_hypercontact
from .errors import AxiomViolation, UclabError
from .families import Family, enumerate_grills, enumerate_stacks
from .simplicial import SimplicialComplex, enumerate_complexes, enumerate_ucs, sigma
from .stacksys import StackSystem, sk_of
from .suites import SUITES, run_suite
from .topology import FiniteTopSpace, intersection_uc, rc_algebra
from .uca import FamilySystem, Ultracontact, extend_by_atoms, extend_by_grills, extend_by_set, uc_join, uc_meet

__all__ = ["main", "build_parser"]

OK, VIOLATION, INPUT_ERROR = 0, 1, 2


class InputError(Exception):
    pass


def _witness_json(v) -> object:
    if hasattr(v, "to_json"):
        return v.to_json()
    return v


def _violation_report(bad: AxiomViolation) -> dict:
    return {
        "axiom": bad.axiom,
        "message": bad.message,
        "witnesses": {k: _witness_json(v) for k, v in bad.witnesses.items()},
    }


def _load(path: str, validate: bool = True):
    if not Path(path).exists():
        raise InputError(f"no such file: {path}")
    return serialize.load_file(path, validate=validate)


def _load_uc(path: str) -> Ultracontact:
    obj = _load(path)
    if isinstance(obj, StackSystem):
        obj = obj.to_ultracontact()
    if not isinstance(obj, Ultracontact):
        raise InputError(f"{path} does not describe an ultracontact")
    return obj


def _family_arg(text: str, uc: Ultracontact) -> Family:
    """A family from a JSON file, or inline as comma-separated elements (``a,b+c``)."""
    if Path(text).exists():
        fam = _load(text)
        if not isinstance(fam, Family):
            raise InputError(f"{text} does not describe a family")
        return fam
    parts = [p for p in text.split(",") if p.strip()]
    return Family.of(uc.algebra, parts)


def cmd_check(args) -> tuple[int, dict]:
    obj = _load(args.inp, validate=False)
    labels = {
        StackSystem: "stack system",
        FamilySystem: "ultracontact",
        ContactRelation: "contact relation",
        Hypercontact: "hypercontact",
        SimplicialComplex: "simplicial complex",
    }
    if isinstance(obj, FiniteTopSpace):
        return OK, {"status": "ok", "message": "valid topological space"}
    label = labels.get(type(obj))
    if label is None:
        raise InputError(f"nothing to check for a {type(obj).__name__}")
    if isinstance(obj, StackSystem) and serialize.kind_of(json.loads(Path(args.inp).read_text())) == "uc":
        label = "ultracontact"
    bad = obj.violation()
    if bad is None:
        return OK, {"status": "ok", "message": f"valid {label}"}
    return VIOLATION, {"status": "violation", "message": f"not a valid {label}: {bad}", "counterexample": _violation_report(bad)}


def cmd_enumerate(args) -> tuple[int, dict]:
    n = args.atoms
    if n < 1:
        raise InputError("--atoms must be at least 1")
    alg = make_algebra([chr(ord("a") + i) for i in range(n)]) if n <= 26 else None
    if args.stacks:
        items = [s.to_json() for s in enumerate_stacks(alg)]
        what = "stacks"
    elif args.grills:
        items = [g.to_json() for g in enumerate_grills(alg)]
        what = "grills"
    elif args.ucs:
        items = [{"facets": [alg.names(f) for f in k.facets]} for k in enumerate_ucs(alg)]
        what = "ultracontacts"
    else:
        items = [c.to_json()["faces"] for c in enumerate_complexes(n)]
        what = "complexes"
    return OK, {"status": "ok", "message": f"{len(items)} {what}", "count": len(items), "items": items}


def cmd_convert(args) -> tuple[int, dict]:
    uc = _load_uc(args.inp)
    if args.to == "stack-system":
        out = sk_of(uc).to_json()
    elif args.to == "uc":
        out = uc.to_json(explicit=args.explicit)
    else:
        out = sigma(uc).to_json()
    return OK, {"status": "ok", "message": f"converted to {args.to}", "result": out}


def cmd_derive(args) -> tuple[int, dict]:
    uc = _load_uc(args.inp)
    if args.hypercontact:
        delta = derive_hypercontact(uc)
        return OK, {"status": "ok", "message": f"hypercontact with {len(delta)} families", "result": delta.to_json()}
    c = derive_contact(uc)
    return OK, {"status": "ok", "message": f"contact with {len(c.pairs())} related pairs", "result": c.to_json()}


def cmd_lattice(args) -> tuple[int, dict]:
    ucs = [_load_uc(p) for p in args.files]
    result = uc_join(ucs) if args.join else uc_meet(ucs)
    op = "join" if args.join else "meet"
    return OK, {"status": "ok", "message": f"{op} of {len(ucs)} ultracontacts", "result": result.to_json()}


def cmd_extend(args) -> tuple[int, dict]:
    uc = _load_uc(args.inp)
    if args.grill is not None:
        result = extend_by_grills(uc, [_family_arg(g, uc) for g in args.grill])
        return OK, {"status": "ok", "message": "extended by grills", "result": result.to_json()}
    if args.atoms is not None:
        result = extend_by_atoms(uc, _family_arg(args.atoms, uc))
        return OK, {"status": "ok", "message": "extended by atoms", "result": result.to_json()}
    m = _family_arg(args.set, uc)
    system, is_uc = extend_by_set(uc, m)
    if is_uc:
        return OK, {"status": "ok", "message": "extension is an ultracontact", "result": system.to_ultracontact().to_json()}
    bad = system.violation()
    return VIOLATION, {
        "status": "violation",
        "message": f"extension by {m} is not an ultracontact: {bad}",
        "counterexample": _violation_report(bad),
    }


def cmd_topology_uc(args) -> tuple[int, dict]:
    space = _load(args.inp)
    if not isinstance(space, FiniteTopSpace):
        raise InputError(f"{args.inp} does not describe a space")
    rc = rc_algebra(space)
    uc = intersection_uc(space)
    extents = {name: space.names(e) for name, e in zip(rc.algebra.atom_names, rc.atom_extents)}
    return OK, {
        "status": "ok",
        "message": f"intersection ultracontact on a {len(rc)}-element regular closed algebra",
        "atoms": extents,
        "result": uc.to_json(),
    }


def cmd_verify(args) -> tuple[int, dict]:
    ids = list(SUITES) if args.all else [args.theorem]
    for t in ids:
        if t not in SUITES:
            raise InputError(f"unknown theorem id {t!r}; choose from {', '.join(SUITES)}")
    results = [run_suite(t) for t in ids]
    failed = [r for r in results if not r.ok]
    lines = [f"{'PASS' if r.ok else 'FAIL'} {r.theorem} ({r.checks} checks)" for r in results]
    report = {
        "status": "violation" if failed else "ok",
        "message": "\n".join(lines),
        "suites": [r.to_json() for r in results],
    }
    if failed:
        report["counterexample"] = failed[0].counterexample
    return (VIOLATION if failed else OK), report


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="uclab", description="Ultracontact algebras on finite Boolean algebras.")
    p.add_argument("--json", metavar="OUT", help="also write a machine-readable report")
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, func, help_):
        sp = sub.add_parser(name, help=help_)
        sp.add_argument("--json", metavar="OUT", default=argparse.SUPPRESS, help="write a JSON report")
        sp.set_defaults(func=func)
        return sp

    sp = add("check", cmd_check, "validate the axioms of a structure file")
    sp.add_argument("--in", dest="inp", required=True)

    sp = add("enumerate", cmd_enumerate, "list all stacks, grills, ultracontacts or complexes")
    g = sp.add_mutually_exclusive_group(required=True)
    for flag in ("--stacks", "--grills", "--ucs", "--complexes"):
        g.add_argument(flag, action="store_true")
    sp.add_argument("--atoms", type=int, required=True)

    sp = add("convert", cmd_convert, "convert an ultracontact file")
    sp.add_argument("--in", dest="inp", required=True)
    sp.add_argument("--to", choices=["stack-system", "uc", "complex"], required=True)
    sp.add_argument("--explicit", action="store_true", help="include explicit members (uc output)")

    sp = add("derive", cmd_derive, "derive the contact or hypercontact of an ultracontact")
    sp.add_argument("--in", dest="inp", required=True)
    g = sp.add_mutually_exclusive_group(required=True)
    g.add_argument("--contact", action="store_true")
    g.add_argument("--hypercontact", action="store_true")

    sp = add("lattice", cmd_lattice, "join or meet of ultracontact files")
    g = sp.add_mutually_exclusive_group(required=True)
    g.add_argument("--join", action="store_true")
    g.add_argument("--meet", action="store_true")
    sp.add_argument("files", nargs="+")

    sp = add("extend", cmd_extend, "extend an ultracontact by grills, atoms or a set")
    sp.add_argument("--in", dest="inp", required=True)
    g = sp.add_mutually_exclusive_group(required=True)
    g.add_argument("--grill", action="append", help="family file or inline list like 'a,b+c' (repeatable)")
    g.add_argument("--atoms")
    g.add_argument("--set")

    sp = add("topology-uc", cmd_topology_uc, "intersection ultracontact of a finite space")
    sp.add_argument("--in", dest="inp", required=True)

    sp = add("verify", cmd_verify, "run theorem verification suites")
    g = sp.add_mutually_exclusive_group(required=True)
    g.add_argument("--theorem", choices=list(SUITES))
    g.add_argument("--all", action="store_true")
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        code, report = args.func(args)
    except AxiomViolation as bad:
        code = VIOLATION
        report = {"status": "violation", "message": str(bad), "counterexample": _violation_report(bad)}
    except (InputError, UclabError, ValueError, KeyError, OSError) as e:
        code = INPUT_ERROR
        report = {"status": "error", "message": f"error: {e}"}
    report["command"] = args.command
    report["exit_code"] = code
    stream = sys.stderr if code == INPUT_ERROR else sys.stdout
    print(report["message"], file=stream)
    if "result" in report:
        print(json.dumps(report["result"], indent=1, sort_keys=True))
    elif "items" in report:
        for item in report["items"]:
            print(json.dumps(item))
    if "counterexample" in report and report["counterexample"] is not None:
        print(json.dumps(report["counterexample"], indent=1, sort_keys=True))
    out = getattr(args, "json", None)
    if out:
        Path(out).write_text(json.dumps(report, indent=1, sort_keys=True) + "\n")
    return code


if __name__ == "__main__":
    sys.exit(main())
