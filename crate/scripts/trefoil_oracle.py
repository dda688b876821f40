#!/usr/bin/env python3
"""Brute-force count of S3 transposition colorings of a signed-crossing diagram.

Tries all 3^arcs assignments of transpositions to arcs and keeps those that
satisfy the Wirtinger relation at every crossing:

    positive: x[out] = x[over]^-1 x[in] x[over]
    negative: x[out] = x[over] x[in] x[over]^-1

Usage: trefoil_oracle.py [diagram.pd]   (defaults to data/trefoil.pd)
"""
import itertools
import re
import sys
from pathlib import Path


def compose(p, q):
    """p then q, as tuples on 0..2."""
    return tuple(q[p[i]] for i in range(3))


def inverse(p):
    out = [0] * 3
    for i, x in enumerate(p):
        out[x] = i
    return tuple(out)


TRANSPOSITIONS = [(1, 0, 2), (2, 1, 0), (0, 2, 1)]


def mul(a, b):
    """Product a*b in the convention a*b = apply a, then b."""
    return compose(a, b)


def parse(text):
    crossings = []
    for m in re.finditer(r"X([+-])\[(\d+),(\d+),(\d+)\]", text):
        crossings.append((1 if m.group(1) == "+" else -1, *map(int, m.group(2, 3, 4))))
    arcs = sorted({a for c in crossings for a in c[1:]} | {int(a) for a in re.findall(r"O\[(\d+)\]", text)})
    return crossings, arcs


def count(crossings, arcs):
    n = 0
    for values in itertools.product(TRANSPOSITIONS, repeat=len(arcs)):
        x = dict(zip(arcs, values))
        ok = True
        for sign, over, inn, out in crossings:
            o = x[over] if sign > 0 else inverse(x[over])
            if x[out] != mul(mul(inverse(o), x[inn]), o):
                ok = False
                break
        n += ok
    return n


def main():
    default = Path(__file__).resolve().parent.parent / "data" / "trefoil.pd"
    path = Path(sys.argv[1]) if len(sys.argv) > 1 else default
    crossings, arcs = parse(path.read_text())
    print(count(crossings, arcs))


if __name__ == "__main__":
    main()
