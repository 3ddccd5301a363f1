#!/usr/bin/env python3
"""Standalone oracle for the certified-distance tables.

Computes, for each block length ell, the largest distance d such that the
exact counting condition

    sum_{e even, 0 < e < d} [ A1(e)*M2*M16 + A2(e)*N2*M16 + A3(e)*M2*N16 ]
        <  N2 * N16

holds, where N2/M2 are the self-dual binary counting products (or the
doubly-even variants T/S), N16/M16 the Hermitian GF(16) products, and

    A1(e) = C(5*ell, e)
    A2(e) = C(ell, e/2) * 15^(e/2)      (0 unless e/2 is an integer <= ell)
    A3(e) = C(ell, e/5)                 (0 unless e/5 is an integer <= ell)

Everything is exact integer arithmetic; no floats anywhere.  This script is
deliberately self-contained and must not import the main package: its output
is frozen as a regression fixture that the package is later tested against.

Writes tests/fixtures/dstar_fixtures.json.
"""

import json
import math
import os

ELLS = [40, 80, 160, 320]


def binary_masses(ell):
    n2 = 1
    for i in range(1, ell // 2):
        n2 *= 2**i + 1
    m2 = 1
    for i in range(1, ell // 2 - 1):
        m2 *= 2**i + 1
    return n2, m2


def type2_masses(ell):
    assert ell % 8 == 0
    t = 2
    for i in range(1, ell // 2 - 1):
        t *= 2**i + 1
    s = 2
    for i in range(1, ell // 2 - 2):
        s *= 2**i + 1
    return t, s


def hermitian16_masses(ell):
    n16 = 1
    for i in range(0, ell // 2):
        n16 *= 2 ** (4 * i + 2) + 1
    m16 = 1
    for i in range(0, ell // 2 - 1):
        m16 *= 2 ** (4 * i + 2) + 1
    return n16, m16


def largest_certified_distance(ell, doubly_even):
    if doubly_even:
        n2, m2 = type2_masses(ell)
    else:
        n2, m2 = binary_masses(ell)
    n16, m16 = hermitian16_masses(ell)
    rhs = n2 * n16
    lhs = 0
    d = 1
    while True:
        if lhs >= rhs:
            return d - 1
        # add the weight-(d) term before moving to d+1 (sum runs over e < d)
        e = d
        if e % 2 == 0:
            a1 = math.comb(5 * ell, e)
            a2 = math.comb(ell, e // 2) * 15 ** (e // 2)
            a3 = math.comb(ell, e // 5) if e % 5 == 0 else 0
            lhs += a1 * m2 * m16 + a2 * n2 * m16 + a3 * m2 * n16
        d += 1
        if d > 5 * ell:  # safety: cannot exceed the length
            return 5 * ell


def main():
    out = {"theorem1": {}, "theorem2": {}}
    for ell in ELLS:
        d1 = largest_certified_distance(ell, doubly_even=False)
        out["theorem1"][str(ell)] = d1
        print(f"ell={ell:4d}  type I/II mix: d*={d1:4d}  delta={d1 / (5 * ell):.6f}")
    for ell in ELLS:
        d2 = largest_certified_distance(ell, doubly_even=True)
        out["theorem2"][str(ell)] = d2
        print(f"ell={ell:4d}  doubly even:   d*={d2:4d}  delta={d2 / (5 * ell):.6f}")
    here = os.path.dirname(os.path.abspath(__file__))
    fixdir = os.path.join(here, "..", "tests", "fixtures")
    os.makedirs(fixdir, exist_ok=True)
    path = os.path.join(fixdir, "dstar_fixtures.json")
    with open(path, "w") as f:
        json.dump(out, f, indent=2, sort_keys=True)
        f.write("\n")
    print("wrote", os.path.normpath(path))


if __name__ == "__main__":
    main()
