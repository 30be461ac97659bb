"""Named verification suites, each an exhaustive check at small scale.

Every suite returns a :class:`SuiteResult`; a failing suite carries a
counterexample that can be serialized.  The registry maps the ids accepted by
``uclab verify --theorem`` to the suite functions.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import reduce
from itertools import combinations
from typing import Callable

from . import _kernels
from .boolalg import FiniteBooleanAlgebra, make_algebra
from .contact import (
    check_hypercontact,
    clique_failure,
    derive_contact,
    derive_hypercontact,
    full_contact,
    k4_violation_witness,
    largest_uc_for,
    overlap,
    smallest_uc_for,
)
from .families import Family, classify, enumerate_grills, family, iter_bits, minkowski_sum, stack_bits, up_closure
from .simplicial import enumerate_complexes, enumerate_ucs, sigma, sigma_inverse
from .stacksys import StackSystem, check_ss, ks_of, sk_of, smax, smin
from .topology import enumerate_topologies, in_family, intersection_uc, make_space, rc_algebra
from .uca import (
    Ultracontact,
    chain_meet,
    extend_by_atoms,
    extend_by_grills,
    extend_by_set,
    kmax,
    kmin,
    meet_oracle,
    meet_oracle_cover,
    uc_join,
    uc_meet,
    witness_meet_failure,
)

__all__ = ["SuiteResult", "SUITES", "run_suite", "run_all", "paper_b3_ucs"]


@dataclass
class SuiteResult:
    theorem: str
    ok: bool = True
    checks: int = 0
    notes: list[str] = field(default_factory=list)
    counterexample: dict | None = None

    def check(self, cond: bool, **context) -> bool:
        self.checks += 1
        if not cond and self.ok:
            self.ok = False
            self.counterexample = {k: _plain(v) for k, v in context.items()}
        return cond

    def to_json(self) -> dict:
        return {
            "theorem": self.theorem,
            "ok": self.ok,
            "checks": self.checks,
            "notes": self.notes,
            "counterexample": self.counterexample,
        }


def _plain(v):
    if hasattr(v, "to_json"):
        return v.to_json()
    if isinstance(v, (list, tuple)):
        return [_plain(x) for x in v]
    return v if isinstance(v, (int, str, bool, float, type(None))) else repr(v)


def _b(n: int) -> FiniteBooleanAlgebra:
    return make_algebra([chr(ord("a") + i) for i in range(n)])


def paper_b3_ucs() -> dict[str, Ultracontact]:
    """The named ultracontacts on the three-atom algebra."""
    b = _b(3)
    ab, ac, bc, abc = 0b011, 0b101, 0b110, 0b111
    return {
        "Kmin": kmin(b),
        "K_ab": Ultracontact(b, [ab]),
        "K_ac": Ultracontact(b, [ac]),
        "K_bc": Ultracontact(b, [bc]),
        "K": Ultracontact(b, [ab, ac, bc]),
        "K_abc": Ultracontact(b, [abc]),
        "Kmax": kmax(b),
    }


def _lower_bound_bits(n: int) -> bytearray:
    # families with a nonzero common lower bound, straight from the definition
    size = 1 << (1 << n)
    table = bytearray(size)
    for f in range(1, size):
        meet = (1 << n) - 1
        for x in iter_bits(f):
            meet &= x
        table[f] = 1 if meet else 0
    return table


def suite_smallest_uc(r: SuiteResult) -> None:
    for n in (1, 2, 3):
        b = _b(n)
        low = kmin(b)
        r.check(low.table() == _lower_bound_bits(n), n=n, what="Kmin members")
        r.check(low.explicit().is_uc, n=n)
        for k in enumerate_ucs(b):
            r.check(low <= k and low.explicit() <= k.explicit(), K=k)


def suite_largest_uc(r: SuiteResult) -> None:
    for n in (1, 2, 3):
        b = _b(n)
        top = kmax(b)
        expect = bytearray(1 if f and not f & 1 else 0 for f in range(1 << b.size))
        r.check(top.table() == expect, n=n, what="Kmax members")
        for k in enumerate_ucs(b):
            r.check(k <= top and k.explicit() <= top.explicit(), K=k)


def suite_meet_formula(r: SuiteResult) -> None:
    ucs = enumerate_ucs(_b(3))
    for k in ucs:
        r.check(meet_oracle([k]) == k, K=k)
    for k1, k2 in combinations(ucs, 2):
        r.check(meet_oracle([k1, k2]) == uc_meet([k1, k2]), K1=k1, K2=k2)


def suite_chain_meet(r: SuiteResult) -> None:
    ucs = enumerate_ucs(_b(3))
    chains = [[k] for k in ucs]
    for size in (2, 3, 4):
        for combo in combinations(ucs, size):
            if all(a <= b or b <= a for a, b in combinations(combo, 2)):
                chains.append(list(combo))
    for chain in chains:
        got = chain_meet(chain)
        common = reduce(lambda s, k: s & k.explicit(), chain[1:], chain[0].explicit())
        r.check(got == uc_meet(chain) and got.explicit() == common, chain=chain)
    r.notes.append(f"{len(chains)} chains")


def suite_co_heyting(r: SuiteResult) -> None:
    ucs = enumerate_ucs(_b(3))
    subsets = [[ucs[i] for i in iter_bits(m)] for m in range(1, 1 << len(ucs))]
    meets = [uc_meet(s) for s in subsets]
    for k in ucs:
        for s, m in zip(subsets, meets):
            lhs = uc_join([k, m])
            rhs = uc_meet([uc_join([k, ki]) for ki in s])
            r.check(lhs == rhs, K=k, Ks=s)


def suite_grill_extension(r: SuiteResult) -> None:
    b = _b(3)
    grills = enumerate_grills(b)
    ucs = enumerate_ucs(b)
    base = kmin(b)
    for m in range(1, 1 << len(grills)):
        gs = [grills[i] for i in iter_bits(m)]
        ext = extend_by_grills(base, gs)
        expect = base.explicit()
        for g in gs:
            expect = extend_by_set(Ultracontact(b), g)[0] | expect
        r.check(ext.explicit() == expect and expect.is_uc, grills=gs)
        for k in ucs:
            if all(g in k for g in gs):
                r.check(ext <= k, grills=gs, K=k)
    for a in range(b.n):
        g = up_closure(family(b, b.atom_names[a]))
        for k in ucs:
            r.check(extend_by_grills(k, [g]) == k, K=k, grill=g)


def suite_km_iff_grill(r: SuiteResult) -> None:
    b = _b(3)
    base = kmin(b)
    for bits in range(1 << b.size):
        m = Family(b, bits)
        if m in base:
            continue
        system, is_uc = extend_by_set(base, m)
        if not bits:
            r.notes.append("M = {} skipped: the extension by the empty family adds nothing, and {} is not a grill")
            continue
        r.check(is_uc == classify(m).is_grill, M=m, is_uc=is_uc)
        if is_uc:
            r.check(_kernels.upclose(bits, b.n) == bits, M=m, what="extension by a non-stack")


def suite_meet_failure_witness(r: SuiteResult) -> None:
    for n in (3, 4):
        b = _b(n)
        for bits in stack_bits(n):
            m = Family(b, bits)
            meet = b.full_mask
            for x in iter_bits(bits):
                meet &= x
            if not bits or bits & 1 or meet or classify(m).is_grill:
                continue
            k1, k2 = witness_meet_failure(m)
            r.check(m in k1 and m in k2 and m not in uc_meet([k1, k2]), M=m)
    b4 = _b(4)
    m = up_closure(family(b4, "a+b", "c+d"))
    k1, k2 = witness_meet_failure(m)
    r.check(m in k1 and m in k2 and m not in uc_meet([k1, k2]), M=m)


def suite_meet_not_intersection(r: SuiteResult) -> None:
    b = _b(4)
    k_ab = extend_by_atoms(kmin(b), family(b, "a", "b"))
    k_cd = extend_by_atoms(kmin(b), family(b, "c", "d"))
    left, right = family(b, "a", "b"), family(b, "c", "d")
    total = minkowski_sum([left, right])
    r.check(total == family(b, "a+c", "a+d", "b+c", "b+d"), total=total)
    r.check(total in k_ab and total in k_cd, total=total)
    r.check(left not in k_cd and right not in k_ab, left=left, right=right)
    meet = uc_meet([k_ab, k_cd])
    r.check(meet == kmin(b) and total not in meet, meet=meet)
    cover = meet_oracle_cover([k_ab, k_cd], total)
    r.check(cover is not None, what="oracle cover for the sum")


def suite_contact_axioms(r: SuiteResult) -> None:
    for n in (1, 2, 3, 4):
        b = _b(n)
        r.check(derive_contact(kmin(b)) == overlap(b), n=n)
        r.check(derive_contact(kmax(b)) == full_contact(b), n=n)
        ucs = enumerate_ucs(b) if n <= 3 else enumerate_ucs(b)[::7]
        for k in ucs:
            r.check(derive_contact(k).is_valid, K=k)


def suite_same_contact(r: SuiteResult) -> None:
    named = paper_b3_ucs()
    k, k_abc = named["K"], named["K_abc"]
    b = k.algebra
    full = full_contact(b)
    abc = family(b, "a", "b", "c")
    r.check(k != k_abc, what="distinct")
    r.check(derive_contact(k) == full and derive_contact(k_abc) == full, what="full contact")
    r.check(abc in k_abc and abc not in k, what="{a,b,c}")
    r.check(smallest_uc_for(full) == k and largest_uc_for(full) == k_abc, what="sandwich ends")


def suite_clique_k4(r: SuiteResult) -> None:
    b = _b(4)
    c = overlap(b)
    hit = k4_violation_witness(c)
    r.check(hit is not None and hit.holds, what="witness on B4")
    named = clique_failure(c, "a+b", "c+d", "a+c", "b+d")
    r.check(named.holds and named.total == family(b, "a+b+c", "a+b+d", "a+c+d", "b+c+d"), quad="ab,cd,ac,bd")
    r.check(k4_violation_witness(full_contact(b)) is None, what="full contact")


def suite_hypercontact(r: SuiteResult) -> None:
    for n in (1, 2, 3):
        for k in enumerate_ucs(_b(n)):
            delta = derive_hypercontact(k)
            r.check(delta.is_valid and delta.table[0] == 1, K=k)
    check_hypercontact(derive_hypercontact(kmax(_b(4))))
    r.checks += 1


def suite_sigma_iso(r: SuiteResult) -> None:
    for n in (1, 2, 3, 4):
        b = _b(n)
        ucs = enumerate_ucs(b)
        cxs = enumerate_complexes(n)
        r.check(len(set(ucs)) == len(cxs), n=n)
        images = [sigma(k) for k in ucs]
        r.check(sorted(images, key=lambda c: (len(c), c.faces)) == cxs, n=n)
        for k, cx in zip(ucs, images):
            r.check(sigma_inverse(cx, b) == k, K=k)
        if n <= 3:
            for k1, c1 in zip(ucs, images):
                for k2, c2 in zip(ucs, images):
                    r.check((k1.explicit() <= k2.explicit()) == (c1 <= c2), K1=k1, K2=k2)
        else:
            for k1, c1 in zip(ucs, images):
                for k2, c2 in zip(ucs, images):
                    r.check((k1 <= k2) == (c1 <= c2), K1=k1, K2=k2)


def suite_contact_sandwich(r: SuiteResult) -> None:
    for k in enumerate_ucs(_b(3)):
        c = derive_contact(k)
        lo, hi = smallest_uc_for(c), largest_uc_for(c)
        r.check(lo <= k <= hi, K=k)
        r.check(derive_contact(lo) == c and derive_contact(hi) == c, K=k)


def suite_stack_roundtrip(r: SuiteResult) -> None:
    ucs = enumerate_ucs(_b(3))
    for k in ucs:
        explicit = k.explicit()
        s = sk_of(explicit)
        check_ss(k.algebra, s)
        r.check(ks_of(s) == explicit, K=k)
        r.check(sk_of(ks_of(s)) == s, K=k)
        r.check(s.to_ultracontact() == k, K=k)
    for k1 in ucs:
        for k2 in ucs:
            r.check((k1.explicit() <= k2.explicit()) == (sk_of(k1) <= sk_of(k2)), K1=k1, K2=k2)


def suite_smin_smax(r: SuiteResult) -> None:
    for n in (1, 2, 3):
        b = _b(n)
        lo, hi = smin(b), smax(b)
        r.check(lo == sk_of(kmin(b).explicit()) and hi == sk_of(kmax(b).explicit()), n=n)
        r.check(lo.is_valid and hi.is_valid, n=n)
        for k in enumerate_ucs(b):
            s = sk_of(k)
            r.check(lo <= s <= hi, K=k)
    b3 = _b(3)
    r.check(len(smin(b3)) == 10 and len(smax(b3)) == 18, smin=len(smin(b3)), smax=len(smax(b3)))


def suite_topological_uc(r: SuiteResult) -> None:
    for space in enumerate_topologies(["x", "y", "z"]):
        rc = rc_algebra(space)
        k = intersection_uc(space)
        r.check(kmin(rc.algebra) <= k <= kmax(rc.algebra), space=space)
    x = make_space(["l", "m", "r"], [[], ["l"], ["r"], ["l", "r"], ["l", "m", "r"]])
    rc = rc_algebra(x)
    r.check(sorted(rc.regular_closed_sets()) == [0, 0b011, 0b110, 0b111], what="RC sets")
    k = intersection_uc(x)
    pair = in_family(rc, [["l", "m"], ["m", "r"]])
    r.check(pair in k and k == kmax(rc.algebra) and k != kmin(rc.algebra), what="K^S on lmr")


# the families the worked example lists as the only non-members of Kmin(B3)
KMIN_LISTED = [("a", "b"), ("a", "c"), ("b", "c"), ("a", "b", "c"), ("a", "b+c"), ("b", "a+c"), ("c", "a+b")]


def suite_kmin_example(r: SuiteResult) -> None:
    b = _b(3)
    low = kmin(b)
    listed = [family(b, *m) for m in KMIN_LISTED]
    for f in listed:
        r.check(f not in low, F=f)
    extra = family(b, "a+b", "a+c", "b+c")
    r.check(extra not in low, F=extra)
    listed_stacks = {up_closure(f).bits for f in listed}
    r.check(up_closure(extra).bits not in listed_stacks, what="{a+b, a+c, b+c} is similar to a listed family")
    outside = {s for s in stack_bits(3) if s and s != (1 << 8) - 1 and not low.contains_bits(s)}
    r.check(outside == listed_stacks | {up_closure(extra).bits}, what="non-member stacks")
    r.notes.append(f"{len(outside)} nonempty 0-free stacks lie outside Kmin; the example lists 7 classes")


def suite_smax_discrepancy(r: SuiteResult) -> None:
    b = _b(3)
    full = (1 << b.size) - 1
    r.check(full not in set(sk_of(kmax(b)).members), what="B in S_Kmax")
    naive = StackSystem(b, [s for s in stack_bits(3) if s])
    bad = naive.violation()
    r.check(bad is not None and bad.axiom == "SS1", what="Stack(B) minus empty")
    r.check(smax(b) == sk_of(kmax(b)), what="smax")


SUITES: dict[str, Callable[[SuiteResult], None]] = {
    "smallest-uc": suite_smallest_uc,
    "largest-uc": suite_largest_uc,
    "meet-formula": suite_meet_formula,
    "chain-meet": suite_chain_meet,
    "co-heyting": suite_co_heyting,
    "grill-extension": suite_grill_extension,
    "kM-iff-grill": suite_km_iff_grill,
    "meet-failure-witness": suite_meet_failure_witness,
    "meet-not-intersection": suite_meet_not_intersection,
    "contact-axioms": suite_contact_axioms,
    "same-contact-different-uc": suite_same_contact,
    "clique-k4-failure": suite_clique_k4,
    "hypercontact": suite_hypercontact,
    "sigma-iso": suite_sigma_iso,
    "contact-sandwich": suite_contact_sandwich,
    "stack-roundtrip": suite_stack_roundtrip,
    "smin-smax": suite_smin_smax,
    "topological-uc": suite_topological_uc,
    "kmin-example-discrepancy": suite_kmin_example,
    "smax-discrepancy": suite_smax_discrepancy,
}


def run_suite(theorem: str) -> SuiteResult:
    if theorem not in SUITES:
        raise KeyError(theorem)
    result = SuiteResult(theorem)
    SUITES[theorem](result)
    return result


def run_all() -> list[SuiteResult]:
    return [run_suite(t) for t in SUITES]
