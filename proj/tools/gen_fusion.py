#!/usr/bin/env python3
"""Write representation-ring fusion rules for small groups as JSON.

Non-abelian tables come from integer character tables: the multiplicity of
nu in lambda*mu is the inner product <chi_lambda chi_mu, chi_nu>.  Cyclic
groups use chi_a chi_b = chi_(a+b mod n) directly.
"""

import argparse
import json
from fractions import Fraction
from pathlib import Path

# class sizes, then irreducible characters evaluated on each class
CHARACTER_TABLES = {
    "s3": {
        "classes": [1, 3, 2],  # e, transpositions, 3-cycles
        "irreps": {"1": [1, 1, 1], "sgn": [1, -1, 1], "std": [2, 0, -1]},
    },
    "d4": {
        "classes": [1, 1, 2, 2, 2],  # e, r^2, {r, r^3}, {s, sr^2}, {sr, sr^3}
        "irreps": {
            "1": [1, 1, 1, 1, 1],
            "a": [1, 1, 1, -1, -1],
            "b": [1, 1, -1, 1, -1],
            "c": [1, 1, -1, -1, 1],
            "V": [2, -2, 0, 0, 0],
        },
    },
    "q8": {
        "classes": [1, 1, 2, 2, 2],  # 1, -1, {±i}, {±j}, {±k}
        "irreps": {
            "1": [1, 1, 1, 1, 1],
            "i": [1, 1, 1, -1, -1],
            "j": [1, 1, -1, 1, -1],
            "k": [1, 1, -1, -1, 1],
            "H": [2, -2, 0, 0, 0],
        },
    },
}


def from_characters(table):
    sizes = table["classes"]
    order = sum(sizes)
    irreps = table["irreps"]
    labels = list(irreps)

    def inner(u, v):
        return Fraction(sum(s * a * b for s, a, b in zip(sizes, u, v)), order)

    for a in labels:
        for b in labels:
            expect = 1 if a == b else 0
            if inner(irreps[a], irreps[b]) != expect:
                raise ValueError(f"characters {a}, {b} are not orthonormal")
    mult = []
    for lam in labels:
        for mu in labels:
            prod = [x * y for x, y in zip(irreps[lam], irreps[mu])]
            for nu in labels:
                m = inner(prod, irreps[nu])
                if m.denominator != 1 or m < 0:
                    raise ValueError(f"non-integral multiplicity for {lam}*{mu}->{nu}")
                if m:
                    mult.append([lam, mu, nu, int(m)])
    return {"labels": labels, "unit": labels[0], "mult": mult}


def cyclic(n):
    labels = [f"chi{k}" for k in range(n)]
    mult = [[labels[a], labels[b], labels[(a + b) % n], 1] for a in range(n) for b in range(n)]
    return {"labels": labels, "unit": labels[0], "mult": mult}


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("outdir", type=Path, nargs="?", default=Path(__file__).resolve().parent.parent / "data" / "fusion")
    args = parser.parse_args()
    args.outdir.mkdir(parents=True, exist_ok=True)
    rings = {name: from_characters(t) for name, t in CHARACTER_TABLES.items()}
    rings.update({f"c{n}": cyclic(n) for n in (2, 3, 4)})
    for name, ring in rings.items():
        path = args.outdir / f"{name}.json"
        path.write_text(json.dumps(ring, indent=1) + "\n")
        print(path)


if __name__ == "__main__":
    main()
