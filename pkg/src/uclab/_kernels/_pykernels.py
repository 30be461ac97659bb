"""Pure-Python implementations of the bit-level kernels.

A family over the algebra with ``n`` atoms is an int whose bit ``x`` is set
iff the element with atom mask ``x`` is a member.  A *membership table* for a
system of families is a bytes-like object of length ``2 ** (2 ** n)`` indexed by
family bits.

Every function here has a twin with the same signature in ``_ckernels``.
"""

from functools import lru_cache

__all__ = [
    "upclose",
    "downclose",
    "minkowski",
    "supports",
    "uc_violation",
    "k4_bruteforce",
    "hypercontact_violation",
    "ss_bruteforce",
    "find_cover",
]


@lru_cache(maxsize=None)
def _lacking(n, i):
    """Family mask of the element positions whose atom ``i`` is absent."""
    step = 1 << i
    pattern = (1 << step) - 1
    width = 2 * step
    size = 1 << n
    while width < size:
        pattern |= pattern << width
        width *= 2
    return pattern


def _iter_bits(x):
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


def upclose(bits, n):
    for i in range(n):
        bits |= (bits & _lacking(n, i)) << (1 << i)
    return bits


def downclose(bits, n):
    full = (1 << (1 << n)) - 1
    for i in range(n):
        bits |= (bits & (full ^ _lacking(n, i))) >> (1 << i)
    return bits


def minkowski(f, g):
    right = list(_iter_bits(g))
    out = 0
    for x in _iter_bits(f):
        for y in right:
            out |= 1 << (x | y)
    return out


def supports(f, g, n):
    return g & ~upclose(f, n) == 0


def uc_violation(table, n, stacks):
    """First violated ultracontact axiom as ``(name, a, b)``, or None.

    K3 is checked through its two generating instances (closure under ``up``
    and under dropping one member); once K0-K3 hold the system is
    similarity-closed, so K4 only needs pairs of stacks.
    """
    size = len(table)
    if table[0]:
        return ("K0", 0, 0)
    for f in range(1, size, 2):
        if table[f]:
            return ("K1", f, 0)
    for x in range(1, 1 << n):
        if not table[1 << x]:
            return ("K2", 1 << x, 0)
    for f in range(1, size):
        if not table[f]:
            continue
        up = upclose(f, n)
        if not table[up]:
            return ("K3", f, up)
        rest = f
        while rest:
            low = rest & -rest
            g = f ^ low
            if g and not table[g]:
                return ("K3", f, g)
            rest ^= low
    for u in stacks:
        in_u = table[u]
        for v in stacks:
            if table[u & v] and not in_u and not table[v]:
                return ("K4", u, v)
    return None


def k4_bruteforce(table, n):
    """Search every pair of families for a K4 failure; n <= 3 only."""
    size = len(table)
    for f in range(1, size):
        if table[f]:
            continue
        for g in range(f, size):
            if table[g]:
                continue
            if table[minkowski(f, g)]:
                return (f, g)
    return None


def hypercontact_violation(table, n):
    size = len(table)
    if not table[0]:
        return ("H0", 0, 0, 0)
    for f in range(1, size, 2):
        if table[f]:
            return ("H1", f, 0, 0)
    for x in range(1, 1 << n):
        if not table[1 << x]:
            return ("H2", 1 << x, 0, 0)
    for f in range(1, size):
        if not table[f]:
            continue
        for x in _iter_bits(f):
            if not table[f ^ (1 << x)]:
                return ("H3", f, f ^ (1 << x), 0)
    for f in range(1, size):
        if not table[f]:
            continue
        for y in _iter_bits(upclose(f, n)):
            if not table[f | (1 << y)]:
                return ("H4", f, y, 0)
    for d in range(1, size):
        if not table[d]:
            continue
        for z in _iter_bits(d):
            for base in (d, d ^ (1 << z)):
                x = z
                while True:
                    rest = z ^ x
                    t = x
                    while True:
                        y = rest | t
                        if not table[base | (1 << x)] and not table[base | (1 << y)]:
                            return ("H5", base, x, y)
                        if t == 0:
                            break
                        t = (t - 1) & x
                    if x == 0:
                        break
                    x = (x - 1) & z
    return None


def ss_bruteforce(stacks, n, fixed_in, fixed_out):
    """All index masks S over ``stacks`` satisfying (SS0)-(SS4).

    ``stacks`` must list every stack of the algebra.  Only candidates with
    ``fixed_in`` inside and ``fixed_out`` outside are examined.
    """
    k = len(stacks)
    index = {s: i for i, s in enumerate(stacks)}
    empty = 1 << index[0]
    full = 1 << index[(1 << (1 << n)) - 1]
    principal = 0
    for x in range(1, 1 << n):
        principal |= 1 << index[upclose(1 << x, n)]
    below = []
    for s in stacks:
        m = 0
        for j, t in enumerate(stacks):
            if t and t & ~s == 0:
                m |= 1 << j
        below.append(m)
    meet = [[index[s & t] for t in stacks] for s in stacks]
    free = ((1 << k) - 1) & ~(fixed_in | fixed_out)
    found = []
    sub = 0
    while True:
        cand = fixed_in | sub
        if not (cand & empty or cand & full or principal & ~cand):
            ok = True
            for i in _iter_bits(cand):
                if below[i] & ~cand:
                    ok = False
                    break
            if ok:
                for i in range(k):
                    if not ok:
                        break
                    if cand >> i & 1:
                        continue
                    row = meet[i]
                    for j in range(i, k):
                        if cand >> row[j] & 1 and not cand >> j & 1:
                            ok = False
                            break
            if ok:
                found.append(cand)
        sub = (sub - free) & free
        if sub == 0:
            break
    return sorted(found)


def find_cover(stacks, target):
    """Least index mask T != 0 with the intersection of ``stacks[T]`` inside
    ``target``, or -1 when no nonempty selection works."""
    k = len(stacks)
    whole = -1
    for s in stacks:
        whole &= s
    # intersections only shrink, so no cover exists unless the full one works
    if not k or whole & ~target:
        return -1
    inter = [-1] * (1 << k)
    for m in range(1, 1 << k):
        low = m & -m
        inter[m] = inter[m ^ low] & stacks[low.bit_length() - 1]
        if inter[m] & ~target == 0:
            return m
    return -1
