#!/usr/bin/env python3
"""Writes fixtures/kac_paljutkin.json: the 8-dimensional Kac-Paljutkin Hopf
algebra H8 acting on its 2-dimensional irreducible module.

H8 is generated by x, y, z with
    x^2 = y^2 = 1, xy = yx, zx = yz, zy = xz, z^2 = (1 + x + y - xy) / 2,
    Delta(x) = x (x) x, Delta(y) = y (x) y,
    Delta(z) = (1 (x) 1 + 1 (x) y + x (x) 1 - x (x) y) (z (x) z) / 2,
    eps(x) = eps(y) = eps(z) = 1, S(x) = x, S(y) = y, S(z) = z.
It is semisimple, neither commutative nor cocommutative, and defined over Q.
"""

import itertools
import json
import sys
from fractions import Fraction
from pathlib import Path

BASIS = [(i, j, k) for k in (0, 1) for j in (0, 1) for i in (0, 1)]
LABELS = {b: ("x" * b[0] + "y" * b[1] + "z" * b[2]) or "1" for b in BASIS}
HALF = Fraction(1, 2)


def add(acc, key, c):
    acc[key] = acc.get(key, 0) + c
    if acc[key] == 0:
        del acc[key]


def mul_basis(a, b):
    i, j, k = a
    p, q, c = b
    if k == 1:
        p, q = q, p  # z x^p y^q = x^q y^p z
    xi, yj = (i + p) % 2, (j + q) % 2
    if k + c < 2:
        return {(xi, yj, k + c): Fraction(1)}
    out = {}
    for (dx, dy), s in (((0, 0), 1), ((1, 0), 1), ((0, 1), 1), ((1, 1), -1)):
        add(out, ((xi + dx) % 2, (yj + dy) % 2, 0), HALF * s)
    return out


def mul(u, v):
    out = {}
    for a, ca in u.items():
        for b, cb in v.items():
            for r, cr in mul_basis(a, b).items():
                add(out, r, ca * cb * cr)
    return out


def mul2(u, v):
    out = {}
    for (a1, a2), ca in u.items():
        for (b1, b2), cb in v.items():
            for r1, c1 in mul_basis(a1, b1).items():
                for r2, c2 in mul_basis(a2, b2).items():
                    add(out, (r1, r2), ca * cb * c1 * c2)
    return out


ONE, X, Y, Z = (0, 0, 0), (1, 0, 0), (0, 1, 0), (0, 0, 1)
DELTA_GEN = {
    X: {(X, X): Fraction(1)},
    Y: {(Y, Y): Fraction(1)},
    Z: mul2({(ONE, ONE): HALF, (ONE, Y): HALF, (X, ONE): HALF, (X, Y): -HALF}, {(Z, Z): Fraction(1)}),
}


def power_word(b):
    return [X] * b[0] + [Y] * b[1] + [Z] * b[2]


def delta(b):
    out = {(ONE, ONE): Fraction(1)}
    for g in power_word(b):
        out = mul2(out, DELTA_GEN[g])
    return out


def antipode(b):
    out = {ONE: Fraction(1)}
    for g in reversed(power_word(b)):
        out = mul(out, {g: Fraction(1)})
    return out


def matmul(a, b):
    return [[sum(a[i][k] * b[k][j] for k in range(2)) for j in range(2)] for i in range(2)]


REP_GEN = {X: [[1, 0], [0, -1]], Y: [[-1, 0], [0, 1]], Z: [[0, 1], [1, 0]]}


def rep_matrix(b):
    m = [[1, 0], [0, 1]]
    for g in power_word(b):
        m = matmul(m, REP_GEN[g])
    return m


def s(q):
    return str(Fraction(q))


def main():
    fixture = {
        "basis": [LABELS[b] for b in BASIS],
        "mult": [
            {"left": LABELS[a], "right": LABELS[b], "out": LABELS[r], "coeff": s(c)}
            for a, b in itertools.product(BASIS, BASIS)
            for r, c in sorted(mul_basis(a, b).items(), key=lambda kv: BASIS.index(kv[0]))
        ],
        "unit": ["1"] + ["0"] * 7,
        "comult": [
            {"in": LABELS[a], "out1": LABELS[r1], "out2": LABELS[r2], "coeff": s(c)}
            for a in BASIS
            for (r1, r2), c in sorted(delta(a).items(), key=lambda kv: (BASIS.index(kv[0][0]), BASIS.index(kv[0][1])))
        ],
        "counit": ["1"] * 8,
        "antipode": [[s(antipode(col).get(row, 0)) for col in BASIS] for row in BASIS],
        "rep": {"dim": 2, "matrices": {LABELS[b]: [[s(v) for v in r] for r in rep_matrix(b)] for b in BASIS}},
    }
    target = Path(sys.argv[1]) if len(sys.argv) > 1 else Path(__file__).resolve().parent.parent / "fixtures" / "kac_paljutkin.json"
    target.write_text(json.dumps(fixture, indent=2) + "\n")


if __name__ == "__main__":
    main()
