#!/usr/bin/env python3
"""Independent numpy oracle for the shipped Crabb-Davie fixture.

Construction (basis e, f1..f3, g1..g3, h of C^8):
    T_i e = f_i,  T_i f_i = -g_i,  T_i f_j = g_k ({i,j,k} = {1,2,3}),
    T_i g_j = delta_ij h,  T_i h = 0,
and p = X1 X2 X3 - X1^3 - X2^3 - X3^3. Then p(T) e = 4 h, so ||p(T)|| = 4,
while |p| < 4 on the 3-torus.

Usage:
    crabb_davie_oracle.py            verify data/fixtures against a fresh derivation
    crabb_davie_oracle.py --write    regenerate the golden files
"""

import argparse
import json
import math
import pathlib
import sys

import numpy as np

ROOT = pathlib.Path(__file__).resolve().parent.parent
FIXTURES = ROOT / "data" / "fixtures"
GRID = 256
TERMS = [((1, 1, 1), 1.0), ((3, 0, 0), -1.0), ((0, 3, 0), -1.0), ((0, 0, 3), -1.0)]


def build():
    e, h = 0, 7
    f = [1, 2, 3]
    g = [4, 5, 6]
    mats = []
    for i in range(3):
        t = np.zeros((8, 8), dtype=complex)
        t[f[i], e] = 1.0
        for j in range(3):
            if j == i:
                t[g[i], f[j]] = -1.0
            else:
                t[g[3 - i - j], f[j]] = 1.0
        t[h, g[i]] = 1.0
        mats.append(t)
    return mats


def lhs(mats):
    acc = np.zeros((8, 8), dtype=complex)
    for alpha, c in TERMS:
        term = np.eye(8, dtype=complex)
        for m, a in zip(mats, alpha):
            term = term @ np.linalg.matrix_power(m, a)
        acc += c * term
    return float(np.linalg.svd(acc, compute_uv=False)[0])


def torus_sup(m):
    z = np.exp(2j * np.pi * np.arange(m) / m)
    z2, z3 = np.meshgrid(z, z, indexing="ij")
    best = 0.0
    for z1 in z:
        vals = z1 * z2 * z3 - z1**3 - z2**3 - z3**3
        best = max(best, float(np.abs(vals).max()))
    pad = (math.pi / m) * sum(abs(c) * sum(alpha) for alpha, c in TERMS)
    return best, pad, best + pad


def matrix_json(a):
    return {
        "rows": a.shape[0],
        "cols": a.shape[1],
        "data": [[float(v.real), float(v.imag)] for v in a.reshape(-1)],
    }


def tuple_json(mats):
    return {"d": 3, "dim": 8, "matrices": [matrix_json(m) for m in mats]}


def poly_json():
    return {"d": 3, "terms": [{"alpha": list(a), "coeff": [c, 0.0]} for a, c in TERMS]}


def expected_json(mats):
    grid_sup, pad, upper = torus_sup(GRID)
    return {"grid": GRID, "lhs": lhs(mats), "grid_sup": grid_sup, "lipschitz_pad": pad, "sup_upper": upper}


def dump(obj):
    return json.dumps(obj, indent=2) + "\n"


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--write", action="store_true")
    args = ap.parse_args()

    mats = build()
    for a in mats:
        for b in mats:
            assert np.array_equal(a @ b, b @ a)
        assert abs(np.linalg.svd(a, compute_uv=False)[0] - 1.0) < 1e-12
    exp = expected_json(mats)
    files = {
        "crabb_davie_tuple.json": tuple_json(mats),
        "crabb_davie_poly.json": poly_json(),
        "crabb_davie_expected.json": exp,
    }
    if args.write:
        FIXTURES.mkdir(parents=True, exist_ok=True)
        for name, obj in files.items():
            (FIXTURES / name).write_text(dump(obj))
        print(dump(exp), end="")
        return 0

    ok = True
    for name in ("crabb_davie_tuple.json", "crabb_davie_poly.json"):
        if json.loads((FIXTURES / name).read_text()) != files[name]:
            print(f"FAIL {name} differs from the construction")
            ok = False
    shipped = json.loads((FIXTURES / "crabb_davie_expected.json").read_text())
    for key in ("lhs", "grid_sup", "lipschitz_pad", "sup_upper"):
        if abs(shipped[key] - exp[key]) > 1e-12:
            print(f"FAIL expected.{key}: shipped {shipped[key]} vs derived {exp[key]}")
            ok = False
    margin = exp["lhs"] - exp["sup_upper"]
    print(f"lhs={exp['lhs']!r} sup_upper={exp['sup_upper']!r} margin={margin!r}")
    if not margin > 1e-3:
        print("FAIL margin lhs - sup_upper must exceed 1e-3")
        ok = False
    print("PASS" if ok else "FAIL")
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
