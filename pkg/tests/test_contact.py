from itertools import product

import pytest

import oracle
from uclab import AxiomViolation, Family, family, kmax, kmin, make_algebra
from uclab.contact import (
    ContactRelation,
    Hypercontact,
    check_contact,
    check_hypercontact,
    clique_failure,
    derive_contact,
    derive_hypercontact,
    full_contact,
    is_clique,
    k4_violation_witness,
    largest_uc_for,
    overlap,
    smallest_uc_for,
)
from uclab.simplicial import enumerate_ucs


def pair_set(c):
    return {(x, y) for x, row in enumerate(c.rows) for y in range(c.algebra.size) if row >> y & 1}


def test_kmin_gives_overlap(b3):
    c = derive_contact(kmin(b3))
    assert c == overlap(b3)
    assert c(b3.of("a"), b3.parse("a+b")) and not c(b3.of("a"), b3.of("b"))


def test_k_ab_adds_three_pairs(b3, named):
    extra = set(derive_contact(named["K_ab"]).pairs()) - set(overlap(b3).pairs())
    a, b, ac, bc = 0b001, 0b010, 0b101, 0b110
    assert extra == {(a, b), (a, bc), (b, ac)}


def test_kmax_gives_full(b3):
    assert derive_contact(kmax(b3)) == full_contact(b3)


def test_derived_contacts_satisfy_axioms(b3):
    for k in enumerate_ucs(b3):
        c = derive_contact(k)
        assert c.is_valid
        assert oracle.contact_failure(pair_set(c), 3) is None


@pytest.mark.parametrize(
    "pairs, symmetric, axiom",
    [
        ([("0", "a")], True, "C0"),
        ([("a", "b")], False, "C2"),
    ],
)
def test_contact_violations(b3, pairs, symmetric, axiom):
    base = list(overlap(b3).pairs())
    c = ContactRelation.from_pairs(b3, base + [(b3.parse(x).mask, b3.parse(y).mask) for x, y in pairs], symmetric)
    assert c.violation().axiom == axiom
    with pytest.raises(AxiomViolation):
        check_contact(c)


def test_contact_axioms_against_oracle_on_b2(b2):
    # every symmetric relation on the nonzero elements of B2
    nonzero = [1, 2, 3]
    pairs = [(x, y) for x in nonzero for y in nonzero if x <= y]
    for pick in range(1 << len(pairs)):
        chosen = [p for i, p in enumerate(pairs) if pick >> i & 1]
        c = ContactRelation.from_pairs(b2, chosen)
        assert c.is_valid == (oracle.contact_failure(pair_set(c), 2) is None)


def test_smallest_and_largest_for_full_contact(b3, named):
    c = full_contact(b3)
    assert smallest_uc_for(c) == named["K"]
    assert largest_uc_for(c) == named["K_abc"]
    assert smallest_uc_for(overlap(b3)) == largest_uc_for(overlap(b3)) == kmin(b3)


def test_contact_sandwich_exhaustive(b3):
    ucs = enumerate_ucs(b3)
    for k in ucs:
        c = derive_contact(k)
        lo, hi = smallest_uc_for(c), largest_uc_for(c)
        assert lo <= k <= hi
        assert derive_contact(lo) == c == derive_contact(hi)
        same = [u for u in ucs if derive_contact(u) == c]
        assert min(same, key=lambda u: len(u.faces())) == lo
        assert all(lo <= u <= hi for u in same)


def test_hypercontact_examples(b3, named):
    delta = derive_hypercontact(kmin(b3))
    assert family(b3, "a", "a+b", "1") in delta
    assert Family(b3) in delta
    for k in enumerate_ucs(b3):
        assert Family(b3) in derive_hypercontact(k)
    everything = derive_hypercontact(kmax(b3))
    expect = {f for f in range(1 << 8) if not f & 1}
    assert {f.bits for f in everything.members()} == expect


def test_hypercontacts_against_definition(b3):
    for k in enumerate_ucs(b3):
        delta = derive_hypercontact(k)
        assert delta.is_valid
        members = {frozenset(f.masks) for f in delta.members()}
        assert oracle.hypercontact_failure(members, 3) is None


def test_hypercontact_violation(b3):
    delta = derive_hypercontact(kmin(b3))
    broken = Hypercontact(b3, bytearray(delta.table))
    broken.table[family(b3, "a").bits] = 0
    assert broken.violation().axiom == "H2"
    with pytest.raises(AxiomViolation):
        check_hypercontact(broken)


def test_clique_failure_b4(b4):
    c = overlap(b4)
    hit = clique_failure(c, "a+b", "c+d", "a+c", "b+d")
    assert hit.holds
    assert hit.total == family(b4, "a+b+c", "a+b+d", "a+c+d", "b+c+d")
    found = k4_violation_witness(c)
    assert found is not None and found.holds


def test_clique_witness_on_b3(b3):
    # on three atoms a witness already exists: {a+b, c} + {a, b} = {a+b, a+c, b+c}
    hit = k4_violation_witness(overlap(b3))
    assert hit is not None and hit.holds
    assert (hit.p, hit.q, hit.r, hit.s) == (b3.parse("a+b"), b3.of("c"), b3.of("a"), b3.of("b"))
    assert hit.total == family(b3, "a+b", "a+c", "b+c")


def test_clique_witness_exhaustive_b3(b3):
    # independent scan over pairwise distinct quadruples
    c = overlap(b3)
    hits = []
    for p, q, r, s in product(range(8), repeat=4):
        if len({p, q, r, s}) < 4:
            continue
        fail = clique_failure(c, p, q, r, s)
        total = {x | y for x in (p, q) for y in (r, s)}
        clique = all(x & y for x in total for y in total)
        assert fail.total_is_clique == clique
        if clique and (p & q == 0) and (r & s == 0):
            hits.append((p, q, r, s))
    assert (3, 4, 1, 2) in hits


def test_no_clique_failure_for_full_contact(b3):
    assert k4_violation_witness(full_contact(b3)) is None


def test_is_clique(b3):
    c = overlap(b3)
    assert is_clique(c, family(b3, "a+b", "a+c", "b+c"))
    assert not is_clique(c, family(b3, "a", "b"))
    assert not is_clique(c, Family(b3))


def test_contact_json_shape(b3):
    doc = overlap(b3).to_json()
    assert doc["kind"] == "contact" and ["a"] in [p[0] for p in doc["pairs"]]


def test_larger_algebra_contact():
    b5 = make_algebra("abcde")
    assert derive_contact(kmin(b5)) == overlap(b5)
