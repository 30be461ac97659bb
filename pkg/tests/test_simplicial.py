import pytest

import oracle
from uclab import AxiomViolation, CapError, Ultracontact, kmax, kmin, make_algebra, uc_join, uc_meet
from uclab.simplicial import SimplicialComplex, check_complex, enumerate_complexes, enumerate_ucs, sigma, sigma_inverse


def test_sigma_examples(b3, named):
    assert sigma(kmin(b3)).faces == (1, 2, 4)
    assert sigma(named["K_abc"]).faces == tuple(range(1, 8))
    assert sigma(named["K"]).faces == (1, 2, 3, 4, 5, 6)


def test_sigma_inverse_examples(b3, named):
    singles = SimplicialComplex("abc", [["a"], ["b"], ["c"]])
    assert sigma_inverse(singles, b3) == kmin(b3)
    full = SimplicialComplex("abc", range(1, 8))
    assert sigma_inverse(full) == named["K_abc"] == kmax(b3)


def test_validation():
    assert SimplicialComplex("abc", [["a"], ["b"], ["c"], ["a", "b"]]).is_valid
    assert SimplicialComplex("abc", [["a"], ["b"]]).violation().axiom == "SC1"
    bad = SimplicialComplex("abc", [["a"], ["b"], ["c"], ["a", "b", "c"]])
    assert bad.violation().axiom == "SC2"
    with pytest.raises(AxiomViolation):
        check_complex(bad)
    with pytest.raises(AxiomViolation):
        sigma_inverse(bad)


@pytest.mark.parametrize("n, count", [(1, 1), (2, 2), (3, 9), (4, 114)])
def test_complex_counts_match_filter(n, count):
    got = {frozenset(c.faces) for c in enumerate_complexes(n)}
    assert len(got) == count
    assert got == set(oracle.complexes(n))


def test_five_vertex_count():
    # inclusion-exclusion over Dedekind numbers gives 6894
    assert oracle.complex_count(5) == 6894
    assert len(enumerate_complexes(5)) == 6894


def test_enumerate_ucs(b1, b2, b3, named):
    assert len(enumerate_ucs(b1)) == 1
    assert enumerate_ucs(b2) == [kmin(b2), kmax(b2)]
    ucs = enumerate_ucs(b3)
    assert len(ucs) == 9 and len(set(ucs)) == 9
    for name in ("Kmin", "Kmax", "K_ab", "K", "K_abc"):
        assert named[name] in ucs


def test_sigma_round_trip_b3(b3):
    ucs = enumerate_ucs(b3)
    for k in ucs:
        assert sigma_inverse(sigma(k), b3) == k
        assert sigma(k).is_valid
    for a in ucs:
        for b in ucs:
            assert (a <= b) == (sigma(a) <= sigma(b))
            assert sigma(uc_meet([a, b])) == sigma(a) & sigma(b)
            assert sigma(uc_join([a, b])) == sigma(a) | sigma(b)


def test_faces_are_atom_member_families(b3):
    # sigma keeps exactly the atom families in the ultracontact
    for k in enumerate_ucs(b3):
        members = {frozenset(f.masks) for f in k.members()}
        atom_sets = {s for s in range(1, 8) if frozenset(1 << i for i in range(3) if s >> i & 1) in members}
        assert set(sigma(k).faces) == atom_sets


def test_complex_ops():
    a = SimplicialComplex("abc", [1, 2, 4, 3])
    b = SimplicialComplex("abc", [1, 2, 4, 5])
    assert (a & b).faces == (1, 2, 4)
    assert (a | b).faces == (1, 2, 3, 4, 5)
    assert a.facets == (3, 4)
    assert ["a", "b"] in a and 3 in a


def test_vertex_mismatch(b3):
    with pytest.raises(Exception, match="vertices"):
        sigma_inverse(SimplicialComplex("xyz", [1, 2, 4]), b3)


def test_caps():
    with pytest.raises(CapError):
        enumerate_complexes(6)
    with pytest.raises(CapError):
        enumerate_ucs(make_algebra("abcdef"))


def test_ultracontact_faces_closed(b4):
    k = Ultracontact(b4, [0b0111])
    assert sigma(k).is_valid and len(sigma(k)) == 8
