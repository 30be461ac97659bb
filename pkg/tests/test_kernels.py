"""The compiled kernels must agree with the pure-Python ones bit for bit."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracle
from uclab import _kernels
from uclab._kernels import python as py
from uclab.boolalg import make_algebra
from uclab.families import family, stack_bits
from uclab.simplicial import enumerate_ucs
from uclab.uca import upset_extension

compiled = _kernels.compiled
backends = [py] + ([compiled] if compiled is not None else [])
needs_compiled = pytest.mark.skipif(compiled is None, reason="extension not built")


def family_of(n):
    return st.integers(0, (1 << (1 << n)) - 1)


def as_set(bits):
    return frozenset(i for i in range(bits.bit_length()) if bits >> i & 1)


@needs_compiled
@given(st.integers(1, 6).flatmap(lambda n: st.tuples(st.just(n), family_of(n), family_of(n))))
def test_closures_and_sums_agree(args):
    n, f, g = args
    assert compiled.upclose(f, n) == py.upclose(f, n)
    assert compiled.downclose(f, n) == py.downclose(f, n)
    assert compiled.minkowski(f, g) == py.minkowski(f, g)
    assert compiled.supports(f, g, n) == py.supports(f, g, n)


@pytest.mark.parametrize("impl", backends, ids=lambda m: m.__name__.rsplit(".", 1)[-1])
@given(st.integers(1, 3).flatmap(lambda n: st.tuples(st.just(n), family_of(n), family_of(n))))
def test_kernels_match_definitions(impl, args):
    n, f, g = args
    assert as_set(impl.upclose(f, n)) == oracle.up(as_set(f), n)
    assert as_set(impl.minkowski(f, g)) == oracle.msum(as_set(f), as_set(g))
    assert impl.supports(f, g, n) == oracle.supports(as_set(f), as_set(g))


def table_from_bits(bits, n):
    size = 1 << (1 << n)
    return bytes(bits >> i & 1 for i in range(size))


@pytest.mark.parametrize("impl", backends, ids=lambda m: m.__name__.rsplit(".", 1)[-1])
@settings(max_examples=300)
@given(st.integers(0, (1 << 16) - 1))
def test_uc_violation_on_b2_tables(impl, bits):
    table = table_from_bits(bits, 2)
    hit = impl.uc_violation(table, 2, stack_bits(2))
    members = {as_set(f) for f in range(16) if table[f]}
    expect = oracle.uc_axiom_failure(members, 2)
    assert (hit is None) == (expect is None)
    if hit is not None:
        assert hit[0] == expect
    assert (impl.k4_bruteforce(table, 2) is None) == _no_k4(members)


def _no_k4(members):
    fams = list(oracle.all_families(2))
    return not any(
        oracle.msum(f, g) in members and f not in members and g not in members for f in fams for g in fams
    )


@pytest.mark.parametrize("impl", backends, ids=lambda m: m.__name__.rsplit(".", 1)[-1])
@settings(max_examples=300)
@given(st.integers(0, (1 << 16) - 1))
def test_hypercontact_on_b2_tables(impl, bits):
    table = table_from_bits(bits | 1, 2)  # the empty family is always in
    hit = impl.hypercontact_violation(table, 2)
    members = {as_set(f) for f in range(16) if table[f]}
    expect = oracle.hypercontact_failure(members, 2)
    assert (hit is None) == (expect is None)
    if hit is not None:
        assert hit[0] == expect


@needs_compiled
def test_table_kernels_agree_on_b3():
    b3 = make_algebra("abc")
    tables = [bytes(k.table()) for k in enumerate_ucs(b3)]
    tables.append(bytes(upset_extension(enumerate_ucs(b3)[0], family(b3, "a+b", "c")).table))
    stacks = stack_bits(3)
    for t in tables:
        assert compiled.uc_violation(t, 3, stacks) == py.uc_violation(t, 3, stacks)
        assert compiled.k4_bruteforce(t, 3) == py.k4_bruteforce(t, 3)
        h = bytearray(t)
        h[0] = 1
        assert compiled.hypercontact_violation(bytes(h), 3) == py.hypercontact_violation(bytes(h), 3)


@needs_compiled
def test_ss_bruteforce_agrees():
    for n in (1, 2):
        stacks = list(stack_bits(n))
        assert compiled.ss_bruteforce(stacks, n, 0, 0) == py.ss_bruteforce(stacks, n, 0, 0)


@needs_compiled
@given(st.lists(st.sampled_from(stack_bits(3)), max_size=12), st.sampled_from(stack_bits(3)))
def test_find_cover_agrees(stacks, target):
    assert compiled.find_cover(stacks, target) == py.find_cover(stacks, target)


@pytest.mark.parametrize("impl", backends, ids=lambda m: m.__name__.rsplit(".", 1)[-1])
@given(st.lists(st.sampled_from(stack_bits(3)), max_size=8), st.sampled_from(stack_bits(3)))
def test_find_cover_is_least(impl, stacks, target):
    m = impl.find_cover(stacks, target)
    fits = []
    for sel in range(1, 1 << len(stacks)):
        inter = -1
        for i in range(len(stacks)):
            if sel >> i & 1:
                inter &= stacks[i]
        if inter & ~target == 0:
            fits.append(sel)
    assert m == (min(fits) if fits else -1)


def test_backend_flag():
    assert _kernels.BACKEND in ("cython", "python")
    assert (_kernels.BACKEND == "cython") == (compiled is not None)


def test_wide_algebras_use_python():
    # seven atoms do not fit in one word; the dispatcher must still answer
    n = 7
    f = 1 << 0b0000011
    up = _kernels.upclose(f, n)
    assert up == py.upclose(f, n) and bin(up).count("1") == 32
