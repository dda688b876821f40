#!/usr/bin/env python3
"""Write data/sl25_a5.ext: SL(2,5) as a central extension of A5 = PSL(2,5).

Both groups are given as explicit multiplication tables so that the
projection can be listed by element index.
"""
import itertools
import sys

P = 5


def mul(x, y):
    a, b, c, d = x
    e, f, g, h = y
    return ((a * e + b * g) % P, (a * f + b * h) % P,
            (c * e + d * g) % P, (c * f + d * h) % P)


def neg(x):
    return tuple((-v) % P for v in x)


sl = sorted(m for m in itertools.product(range(P), repeat=4)
            if (m[0] * m[3] - m[1] * m[2]) % P == 1)
assert len(sl) == 120
sl_idx = {m: i for i, m in enumerate(sl)}

psl = sorted({min(m, neg(m)) for m in sl})
assert len(psl) == 60
psl_idx = {m: i for i, m in enumerate(psl)}


def canon(m):
    return min(m, neg(m))


out = sys.stdout if len(sys.argv) < 2 else open(sys.argv[1], "w")
w = out.write
w("# SL(2,5) -> A5 = PSL(2,5); elements are 2x2 matrices over F_5 in\n")
w("# lexicographic order of (a, b, c, d); PSL elements are the smaller\n")
w("# of each pair {M, -M}.\n")
w("extension SL(2,5)->A5\n")
w("group SL(2,5) order 120\n")
w("table\n")
for x in sl:
    w(" ".join(str(sl_idx[mul(x, y)]) for y in sl) + "\n")
w("group A5 order 60\n")
w("table\n")
for x in psl:
    w(" ".join(str(psl_idx[canon(mul(x, y))]) for y in psl) + "\n")
w("proj\n")
w(" ".join(str(psl_idx[canon(m)]) for m in sl) + "\n")
