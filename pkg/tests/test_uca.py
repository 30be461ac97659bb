from itertools import combinations

import pytest

import oracle
from uclab import (
    AlgebraError,
    AxiomViolation,
    Family,
    NonAtomError,
    PreconditionError,
    Ultracontact,
    family,
    kmax,
    kmin,
    make_algebra,
    principal_stack,
    up_closure,
)
from uclab.families import enumerate_grills, enumerate_stacks, minkowski_sum
from uclab.simplicial import enumerate_ucs
from uclab.uca import (
    FamilySystem,
    NotAChainError,
    chain_meet,
    extend_by_atoms,
    extend_by_grills,
    extend_by_set,
    meet_oracle,
    meet_oracle_cover,
    uc_from_explicit,
    uc_join,
    uc_meet,
    upset_extension,
    witness_meet_failure,
)


def members_as_sets(k):
    return {frozenset(f.masks) for f in k.members()}


def test_kmin_kmax_match_definitions(b3):
    assert members_as_sets(kmin(b3)) == oracle.kmin_members(3)
    assert members_as_sets(kmax(b3)) == oracle.kmax_members(3)


def test_every_b3_uc_passes_oracle_axioms(b3):
    for k in enumerate_ucs(b3):
        assert oracle.uc_axiom_failure(members_as_sets(k), 3) is None


def test_membership_examples(b3, named):
    assert family(b3, "a", "b+c") in named["K_ab"]
    assert family(b3, "a", "b") not in named["Kmin"]
    assert Family(b3) not in named["Kmax"]
    assert family(b3, "a+b", "a+c") in named["Kmin"]
    assert family(b3, "a+b", "a+c", "b+c") not in named["Kmin"]
    assert family(b3, "a", "b", "c") in named["Kmax"]
    assert family(b3, "0") not in named["Kmax"]


def test_explicit_validation(b3):
    base = kmin(b3).explicit()
    k = uc_from_explicit(base)
    assert k == kmin(b3)
    extra = base | FamilySystem.of(b3, [family(b3, "a", "b")])
    bad = extra.violation()
    assert bad.axiom == "K3"
    assert bad.witnesses["G"] == family(b3, "a", "b+c")
    with pytest.raises(AxiomViolation) as e:
        uc_from_explicit(extra)
    assert e.value.axiom == "K3"


def test_zero_member_is_k1(b3):
    system = kmin(b3).explicit() | FamilySystem.of(b3, [family(b3, "0", "a")])
    assert system.violation().axiom == "K1"


def test_missing_singleton_is_k2(b3):
    system = kmin(b3).explicit()
    system.table[family(b3, "a+b").bits] = 0
    assert system.violation().axiom == "K2"


def test_k4_violation_reported(b3):
    # Kmin plus the up-set of {a+b, c}: the naive non-atom extension
    system = upset_extension(kmin(b3), family(b3, "a+b", "c"))
    bad = system.violation()
    # (K3) survives because the added part is all subfamilies of an up-set
    assert bad is not None and bad.axiom == "K4"
    assert oracle.uc_axiom_failure({frozenset(f.masks) for f in system.members()}, 3) is not None


def test_join_examples(b3, named):
    assert uc_join([named["K_ab"], named["K_ac"], named["K_bc"]]) == named["K"]
    k = named["K"]
    assert uc_join([k, k]) == k
    assert uc_join([k, named["Kmax"]]) == named["Kmax"]


def test_meet_examples(b3, b4, named):
    k_ab = Ultracontact(b4, [0b0011])
    k_cd = Ultracontact(b4, [0b1100])
    assert uc_meet([k_ab, k_cd]) == kmin(b4)
    assert uc_meet([named["K"], named["Kmax"]]) == named["K"]
    assert uc_meet([named["K"], named["K_abc"]]) == named["K"]


def test_lattice_on_members(b3):
    ucs = enumerate_ucs(b3)
    for a in ucs:
        for b in ucs:
            ja, jb = members_as_sets(a), members_as_sets(b)
            assert members_as_sets(uc_join([a, b])) == ja | jb
            m = members_as_sets(uc_meet([a, b]))
            assert m <= ja & jb
            # greatest: every UC inside both lies inside the meet
            for c in ucs:
                if c <= a and c <= b:
                    assert c <= uc_meet([a, b])


def test_meet_oracle_small(b3, named):
    assert meet_oracle([named["K"]]) == named["K"]
    assert meet_oracle([named["K_ab"], named["K_bc"]]) == uc_meet([named["K_ab"], named["K_bc"]])


def test_meet_oracle_cover_b4(b4):
    k_ab = Ultracontact(b4, [0b0011])
    k_cd = Ultracontact(b4, [0b1100])
    m = family(b4, "a+c", "a+d", "b+c", "b+d")
    assert m in k_ab and m in k_cd
    cover = meet_oracle_cover([k_ab, k_cd], m)
    assert cover
    inter = -1
    for s in cover:
        assert not (s in k_ab and s in k_cd)
        inter &= s.bits
    # m supports the sum of the cover, which for stacks is their intersection
    assert inter & ~up_closure(m).bits == 0
    # the cover from the proof: both summands up-closed
    ua, uc = up_closure(family(b4, "a", "b")), up_closure(family(b4, "c", "d"))
    assert ua not in k_cd and uc not in k_ab
    assert up_closure(minkowski_sum([ua, uc])) == up_closure(m)
    assert meet_oracle_cover([k_ab, k_cd], family(b4, "a")) is None


def test_extend_by_grills(b3, named):
    ga, gb = principal_stack(b3.of("a")), principal_stack(b3.of("b"))
    assert extend_by_grills(kmin(b3), [ga | gb]) == named["K_ab"]
    for k in enumerate_ucs(b3):
        assert extend_by_grills(k, [ga]) == k
    assert extend_by_grills(kmin(b3), enumerate_grills(b3)) == kmax(b3)


def test_extend_by_grill_is_smallest(b3):
    # smallest UC containing K and the grill, by scanning all UCs
    ucs = enumerate_ucs(b3)
    for k in ucs:
        for g in enumerate_grills(b3):
            ext = extend_by_grills(k, [g])
            above = [u for u in ucs if k <= u and g in u]
            assert ext in above and all(ext <= u for u in above)


def test_extend_by_set(b3, named):
    system, ok = extend_by_set(kmin(b3), family(b3, "a", "b"))
    assert not ok and system.violation() is not None
    g = principal_stack(b3.of("a")) | principal_stack(b3.of("b"))
    system, ok = extend_by_set(kmin(b3), g)
    assert ok and system.to_ultracontact() == named["K_ab"]
    m = family(b3, "a+b", "a+c")
    system, ok = extend_by_set(named["K"], m)
    assert ok and system.to_ultracontact() == named["K"]


def test_extend_by_atoms(b3, named):
    assert extend_by_atoms(kmin(b3), family(b3, "a", "b")) == named["K_ab"]
    assert extend_by_atoms(named["K"], Family(b3)) == named["K"]
    with pytest.raises(NonAtomError):
        extend_by_atoms(kmin(b3), family(b3, "a+b", "c"))


def test_non_atom_failure_split(b3):
    system = upset_extension(kmin(b3), family(b3, "a+b", "c"))
    left, right = family(b3, "a", "c"), family(b3, "b", "c")
    total = minkowski_sum([left, right])
    assert total.bits in system.member_bits()
    assert left not in system and right not in system


def test_witness_meet_failure(b4):
    m = up_closure(family(b4, "a+b")) | up_closure(family(b4, "c+d"))
    k1, k2 = witness_meet_failure(m)
    assert m in k1 and m in k2 and m not in uc_meet([k1, k2])


@pytest.mark.parametrize(
    "build, message",
    [
        (lambda b: principal_stack(b.of("a")), "nonzero lower bound"),
        (lambda b: principal_stack(b.of("a")) | principal_stack(b.of("b")), "grill"),
        (lambda b: Family(b), "empty"),
        (lambda b: family(b, "a", "b"), "not a stack"),
        (lambda b: Family(b, (1 << 16) - 1), "contains 0"),
    ],
)
def test_witness_meet_failure_preconditions(b4, build, message):
    with pytest.raises(PreconditionError, match=message):
        witness_meet_failure(build(b4))


def test_witness_meet_failure_exhaustive_b3(b3):
    for s in enumerate_stacks(b3):
        try:
            k1, k2 = witness_meet_failure(s)
        except PreconditionError:
            continue
        assert s in k1 and s in k2 and s not in uc_meet([k1, k2])


def test_chain_meet(b3, named):
    chain = [named["Kmax"], named["K_ab"], named["Kmin"]]
    assert chain_meet(chain) == named["Kmin"]
    assert chain_meet([named["K"]]) == named["K"]
    assert chain_meet([named["Kmax"], named["Kmin"]]) == named["Kmin"]
    with pytest.raises(NotAChainError):
        chain_meet([named["K_ab"], named["K_bc"]])


def test_chains_exhaustive(b3):
    ucs = enumerate_ucs(b3)
    for size in (2, 3):
        for combo in combinations(ucs, size):
            if all(a <= b or b <= a for a in combo for b in combo):
                assert chain_meet(list(combo)) == uc_meet(list(combo))


def test_mixed_algebras_rejected(b3, b4):
    with pytest.raises(AlgebraError):
        uc_join([kmin(b3), kmin(b4)])
    with pytest.raises(ValueError):
        uc_meet([])


def test_faces_and_witnesses(b3, named):
    assert named["K"].faces() == [1, 2, 3, 4, 5, 6]
    assert len(kmin(b3).witnesses()) == 10
    assert len(kmax(b3).witnesses()) == 18
    for s in kmax(b3).witnesses():
        assert s in kmax(b3)


def test_ultracontact_order(b3, named):
    assert named["Kmin"] < named["K_ab"] < named["K"] < named["Kmax"]
    assert not named["K_ab"] <= named["K_bc"]
    assert named["Kmax"] >= named["K"]


def test_larger_algebra_membership():
    b6 = make_algebra("abcdef")
    k = Ultracontact(b6, [0b000111, 0b111000])
    assert family(b6, "a", "b", "c") in k
    assert family(b6, "a", "d") not in k
    assert family(b6, "a+d", "b+e") in k
