"""Time the compiled kernels against the pure-Python ones on the same inputs.

    python3 benchmarks/bench_kernels.py [--repeat 5] [--only NAME ...]

Each row reports the best of ``--repeat`` runs per backend and the speedup.
Both backends must return identical results; a mismatch aborts the run.
"""

import argparse
import sys
import timeit

from uclab import _kernels, family, kmax, kmin, make_algebra
from uclab._kernels import python as py
from uclab.families import stack_bits
from uclab.simplicial import enumerate_ucs
from uclab.uca import upset_extension


def _cases():
    b3, b4 = make_algebra("abc"), make_algebra("abcd")
    st3 = list(stack_bits(3))
    st4 = list(stack_bits(4))
    fixed_in = sum(1 << st3.index(py.upclose(1 << (1 << i), 3)) for i in range(3))
    fixed_out = 1 << st3.index(0) | 1 << st3.index(255)
    t3_kmin = bytes(kmin(b3).table())
    t3_kmax = bytes(kmax(b3).table())
    t4_kmin = bytes(kmin(b4).table())
    t4_k = bytes(enumerate_ucs(b4)[57].table())
    t3_bad = bytes(upset_extension(kmin(b3), family(b3, "a+b", "c")).table)
    h4 = bytearray(kmax(b4).table())
    h4[0] = 1
    bad4 = [s for s in st4 if s and not kmin(b4).contains_bits(s)][:18]
    target = py.upclose(family(b4, "a+c", "a+d", "b+c", "b+d").bits, 4)
    return [
        ("ss_bruteforce n=3 full", lambda k: k.ss_bruteforce(st3, 3, 0, 0)),
        ("ss_bruteforce n=3 fixed", lambda k: k.ss_bruteforce(st3, 3, fixed_in, fixed_out)),
        ("k4_bruteforce n=3 broken", lambda k: k.k4_bruteforce(t3_bad, 3)),
        ("k4_bruteforce n=3 Kmin", lambda k: k.k4_bruteforce(t3_kmin, 3)),
        ("k4_bruteforce n=3 Kmax", lambda k: k.k4_bruteforce(t3_kmax, 3)),
        ("uc_violation n=4 Kmin", lambda k: k.uc_violation(t4_kmin, 4, st4)),
        ("uc_violation n=4 mixed", lambda k: k.uc_violation(t4_k, 4, st4)),
        ("hypercontact n=4 Kmax", lambda k: k.hypercontact_violation(bytes(h4), 4)),
        ("find_cover 18 stacks, hit", lambda k: k.find_cover(bad4, target)),
        ("find_cover 18 stacks, miss", lambda k: k.find_cover(bad4, 0)),
    ]


def _best(fn, repeat):
    timer = timeit.Timer(fn)
    number, _ = timer.autorange()
    return min(timer.repeat(repeat=repeat, number=number)) / number


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=5)
    parser.add_argument("--only", nargs="*", help="substrings of case names to run")
    args = parser.parse_args(argv)

    compiled = _kernels.compiled
    if compiled is None:
        print("compiled kernels are not built; only the Python timings are shown", file=sys.stderr)

    print(f"{'kernel':28} {'python':>12} {'cython':>12} {'speedup':>9}")
    for name, run in _cases():
        if args.only and not any(s in name for s in args.only):
            continue
        t_py = _best(lambda: run(py), args.repeat)
        if compiled is None:
            print(f"{name:28} {t_py * 1e3:10.3f}ms {'-':>12} {'-':>9}")
            continue
        if run(py) != run(compiled):
            raise SystemExit(f"{name}: backends disagree")
        t_c = _best(lambda: run(compiled), args.repeat)
        print(f"{name:28} {t_py * 1e3:10.3f}ms {t_c * 1e3:10.3f}ms {t_py / t_c:8.1f}x")
    return 0


if __name__ == "__main__":
    sys.exit(main())
