import pytest
from hypothesis import given
from hypothesis import strategies as st

import oracle
from uclab import AlgebraError, Family, NotAGrillError, Stack, UclabError, family, make_algebra
from uclab.families import (
    class_join,
    class_meet,
    classify,
    count_grills,
    enumerate_grills,
    enumerate_stacks,
    generate_ideal,
    grill_atoms,
    grill_of_atoms,
    grill_partial_meet,
    minkowski_sum,
    principal_stack,
    similar,
    supports,
    up_closure,
)


def fset(f):
    return frozenset(f.masks)


def test_up_closure_examples(b3):
    assert str(up_closure(family(b3, "a", "b"))) == "{a, b, a+b, a+c, b+c, a+b+c}"
    assert up_closure(Family(b3)).is_empty
    assert up_closure(family(b3, "1")).masks == [7]


def test_stack_rejects_non_upset(b3):
    with pytest.raises(UclabError, match="not upward closed"):
        Stack(b3, family(b3, "a").bits)
    assert Stack.from_antichain(b3, ["a"]) == principal_stack(b3.of("a"))


def test_support_examples(b3):
    a = family(b3, "a")
    up_a = principal_stack(b3.of("a"))
    assert supports(a, up_a) and supports(up_a, a)
    assert supports(family(b3, "0"), family(b3, "a", "b"))
    assert supports(family(b3, "b"), Family(b3))
    assert not supports(Family(b3), a)
    assert similar(a, up_a)
    assert similar(family(b3, "a", "b", "1"), family(b3, "a", "b"))
    assert not similar(a, family(b3, "b"))


def test_minkowski_examples(b3, b4):
    s = minkowski_sum([family(b4, "a", "b"), family(b4, "c", "d")])
    assert s == family(b4, "a+c", "a+d", "b+c", "b+d")
    # a0 = a, a1 = b, b = c inside B3: {a, c} + {b, c}
    s = minkowski_sum([family(b3, "a", "c"), family(b3, "b", "c")])
    assert s == family(b3, "a+b", "a+c", "b+c", "c")
    assert minkowski_sum([family(b3, "a"), Family(b3)]).is_empty
    with pytest.raises(ValueError):
        minkowski_sum([])


def test_classify_examples(b3):
    g = up_closure(family(b3, "a", "b"))
    c = classify(g)
    assert c.is_stack and c.is_grill and not c.is_filter
    c = classify(family(b3, "0", "a"))
    assert c.is_ideal and c.is_proper_ideal and not c.is_grill
    c = classify(Family(b3, (1 << 8) - 1))
    assert c.is_stack and c.is_filter and not c.is_proper_filter and not c.is_grill
    assert classify(principal_stack(b3.of("a"))).is_ultrafilter
    assert not classify(principal_stack(b3.parse("a+b"))).is_ultrafilter


def test_generate_ideal(b3):
    assert generate_ideal(family(b3, "a", "b")) == family(b3, "0", "a", "b", "a+b")
    assert generate_ideal(Family(b3)) == family(b3, "0")
    assert len(generate_ideal(family(b3, "1"))) == 8


@pytest.mark.parametrize("n, count", [(1, 3), (2, 6), (3, 20)])
def test_stack_counts_match_filter_oracle(n, count):
    alg = make_algebra([chr(97 + i) for i in range(n)])
    got = {fset(s) for s in enumerate_stacks(alg)}
    assert len(got) == count
    assert got == set(oracle.stacks(n))


@pytest.mark.parametrize("n, count", [(1, 1), (2, 3), (3, 7)])
def test_grills_match_definition(n, count):
    alg = make_algebra([chr(97 + i) for i in range(n)])
    got = enumerate_grills(alg)
    assert count_grills(alg) == len(got) == count
    assert {fset(g) for g in got} == set(oracle.grills(n))
    for g in got:
        assert grill_of_atoms(alg, grill_atoms(g)) == g


def test_classify_against_oracle(b3):
    for bits in range(1 << 8):
        f = Family(b3, bits)
        c = classify(f)
        s = fset(f)
        assert c.is_stack == oracle.is_stack(s, 3)
        assert c.is_grill == oracle.is_grill(s, 3)
        assert c.is_filter == oracle.is_filter(s, 3)
        assert c.is_ideal == oracle.is_ideal(s, 3)


def test_grill_partial_meet(b3):
    ga, gb, gc = (principal_stack(x) for x in (b3.of("a"), b3.of("b"), b3.of("c")))
    assert grill_partial_meet([ga | gb, ga | gc]) == ga
    assert grill_partial_meet([ga, gb]) is None
    assert grill_partial_meet([ga | gb]) == ga | gb
    with pytest.raises(NotAGrillError):
        grill_partial_meet([family(b3, "a")])


def test_grill_partial_meet_matches_formula(b3):
    # greatest grill inside the intersection, found by scanning all grills
    grills = enumerate_grills(b3)
    for g in grills:
        for h in grills:
            common = fset(g) & fset(h)
            below = [x for x in grills if fset(x) <= common]
            expect = max(below, key=len) if below else None
            assert grill_partial_meet([g, h]) == expect


def test_class_operations(b3):
    a, b = family(b3, "a"), family(b3, "b")
    assert class_join(a, b) == principal_stack(b3.parse("a+b"))
    assert class_meet(a, b) == principal_stack(b3.of("a")) | principal_stack(b3.of("b"))
    assert class_join(a, family(b3, "1")).masks == [7]


def test_family_set_ops(b2, b3):
    f, g = family(b3, "a", "b"), family(b3, "b", "c")
    assert (f | g) == family(b3, "a", "b", "c")
    assert (f & g) == family(b3, "b") and (f - g) == family(b3, "a")
    assert family(b3, "b") < f and not f <= g
    assert len(f.complement()) == 6
    assert b3.of("a") in f and 2 in f and b3.of("c") not in f
    with pytest.raises(AlgebraError):
        f | family(b2, "a")


families3 = st.integers(0, (1 << 8) - 1)


@given(families3, families3)
def test_support_agrees_with_oracle(x, y):
    b3 = make_algebra("abc")
    f, g = Family(b3, x), Family(b3, y)
    assert supports(f, g) == oracle.supports(fset(f), fset(g))
    assert supports(f, g) == (g <= up_closure(f))
    assert similar(f, g) == (up_closure(f) == up_closure(g))
    assert fset(minkowski_sum([f, g])) == oracle.msum(fset(f), fset(g))


@given(st.integers(1, 5), st.data())
def test_up_closure_is_closure(n, data):
    alg = make_algebra([chr(97 + i) for i in range(n)])
    bits = data.draw(st.integers(0, (1 << alg.size) - 1))
    f = Family(alg, bits)
    u = up_closure(f)
    assert f <= u and up_closure(u) == u
    assert u.antichain <= f
    assert up_closure(u.antichain) == u
