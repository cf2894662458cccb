#!/usr/bin/env python3
"""Writes the algebra and module files in corpus/.

Structure constants are computed here directly from the defining
constructions (matrix units, polynomial reduction, group tables) so the corpus
does not depend on the C++ library.
"""

import itertools
import pathlib
import sys

OUT = pathlib.Path(sys.argv[1] if len(sys.argv) > 1 else pathlib.Path(__file__).parent.parent / "corpus")


def write_algebra(stem, p, names, unit, mul, note):
    n = len(names)
    lines = [f"# {note}", f"algebra {stem} p={p} dim={n}", "basis " + " ".join(names),
             "unit " + " ".join(str(x % p) for x in unit)]
    for i in range(n):
        for j in range(n):
            lines.append(f"mul {i + 1} {j + 1} : " + " ".join(str(x % p) for x in mul(i, j)))
    (OUT / f"{stem}.alg").write_text("\n".join(lines) + "\n")


def write_module(stem, name, over, p, mats, note):
    m = len(mats[0])
    lines = [f"# {note}", f"module {name} over {over} dim={m}"]
    for i, mat in enumerate(mats):
        lines.append(f"act {i + 1}")
        lines.extend(" ".join(str(x % p) for x in row) for row in mat)
    (OUT / f"{stem}.mod").write_text("\n".join(lines) + "\n")


def matrix_units(n):
    return [(a, b) for a in range(n) for b in range(n)]


def matrix_algebra(stem, p, n):
    units = matrix_units(n)
    idx = {u: k for k, u in enumerate(units)}

    def mul(i, j):
        (a, b), (c, d) = units[i], units[j]
        v = [0] * len(units)
        if b == c:
            v[idx[(a, d)]] = 1
        return v

    unit = [1 if a == b else 0 for a, b in units]
    write_algebra(stem, p, [f"e{a + 1}{b + 1}" for a, b in units], unit, mul,
                  f"M_{n}(F_{p}) on matrix units")


def natural_module(stem, over, p, n):
    mats = []
    for a, b in matrix_units(n):
        mats.append([[1 if (r, c) == (a, b) else 0 for c in range(n)] for r in range(n)])
    write_module(stem, "nat", over, p, mats, f"natural right module of M_{n}(F_{p}) on row vectors")


def upper_triangular(stem, p, n):
    units = [(a, b) for a in range(n) for b in range(a, n)]
    idx = {u: k for k, u in enumerate(units)}

    def mul(i, j):
        (a, b), (c, d) = units[i], units[j]
        v = [0] * len(units)
        if b == c:
            v[idx[(a, d)]] = 1
        return v

    unit = [1 if a == b else 0 for a, b in units]
    write_algebra(stem, p, [f"e{a + 1}{b + 1}" for a, b in units], unit, mul,
                  f"upper triangular {n}x{n} matrices over F_{p}")
    return units


def poly_quotient(stem, p, modulus, note):
    """F_p[x]/(f) for monic f given low to high (leading 1 included)."""
    d = len(modulus) - 1

    def reduce(coeffs):
        c = list(coeffs)
        for k in range(len(c) - 1, d - 1, -1):
            lead = c[k] % p
            if lead:
                for t in range(d + 1):
                    c[k - d + t] -= lead * modulus[t]
        return [x % p for x in c[:d]] + [0] * max(0, d - len(c))

    def mul(i, j):
        c = [0] * (2 * d)
        c[i + j] = 1
        return reduce(c)

    names = ["1"] + ["x" if k == 1 else f"x{k}" for k in range(1, d)]
    write_algebra(stem, p, names, [1] + [0] * (d - 1), mul, note)


def group_algebra(stem, p, elements, op, names, note):
    idx = {g: k for k, g in enumerate(elements)}

    def mul(i, j):
        v = [0] * len(elements)
        v[idx[op(elements[i], elements[j])]] = 1
        return v

    unit = [1] + [0] * (len(elements) - 1)
    write_algebra(stem, p, names, unit, mul, note)


def product_of_fields(stem, p, k):
    def mul(i, j):
        return [1 if (i == j == t) else 0 for t in range(k)]

    write_algebra(stem, p, [f"f{t + 1}" for t in range(k)], [1] * k, mul,
                  f"F_{p}^{k} with orthogonal idempotents")


def main():
    OUT.mkdir(parents=True, exist_ok=True)
    write_algebra("f2", 2, ["1"], [1], lambda i, j: [1], "prime field F_2")
    write_algebra("f3", 3, ["1"], [1], lambda i, j: [1], "prime field F_3")
    product_of_fields("f2xf2", 2, 2)
    product_of_fields("f5xf5", 5, 2)
    matrix_algebra("m2f2", 2, 2)
    matrix_algebra("m2f3", 3, 2)
    matrix_algebra("m3f2", 2, 3)
    upper_triangular("ut2f2", 2, 2)
    upper_triangular("ut3f2", 2, 3)
    poly_quotient("f4", 2, [1, 1, 1], "F_4 = F_2[x]/(x^2+x+1)")
    poly_quotient("f9", 3, [1, 0, 1], "F_9 = F_3[x]/(x^2+1)")
    poly_quotient("f2x2", 2, [0, 0, 1], "F_2[x]/(x^2)")
    poly_quotient("f3x2", 3, [0, 0, 1], "F_3[x]/(x^2)")
    poly_quotient("f2x3", 2, [0, 0, 0, 1], "F_2[x]/(x^3)")
    poly_quotient("f3x3", 3, [0, 0, 0, 1], "F_3[x]/(x^3)")
    poly_quotient("f3x2m1", 3, [2, 0, 1], "F_3[x]/(x^2-1), split by CRT")
    group_algebra("f2c2", 2, [0, 1], lambda a, b: (a + b) % 2, ["1", "g"], "group algebra F_2[C_2]")
    group_algebra("f3c3", 3, [0, 1, 2], lambda a, b: (a + b) % 3, ["1", "g", "g2"],
                  "group algebra F_3[C_3]")
    group_algebra("f2c3", 2, [0, 1, 2], lambda a, b: (a + b) % 3, ["1", "g", "g2"],
                  "group algebra F_2[C_3] = F_2 x F_4")
    perms = [tuple(q) for q in itertools.permutations(range(3))]
    perms.sort(key=lambda q: (q != (0, 1, 2), q))
    group_algebra("f2s3", 2, perms, lambda a, b: tuple(b[a[k]] for k in range(3)),
                  ["p" + "".join(str(x + 1) for x in q) for q in perms],
                  "group algebra F_2[S_3], permutations composed left to right")

    natural_module("m2f2_nat", "m2f2", 2, 2)
    natural_module("m2f3_nat", "m2f3", 3, 2)
    natural_module("m3f2_nat", "m3f2", 2, 3)
    # ut2f2 on basis e11 e12 e22.
    write_module("ut2f2_s1", "s1", "ut2f2", 2, [[[1]], [[0]], [[0]]], "simple with e11 acting as 1")
    write_module("ut2f2_s2", "s2", "ut2f2", 2, [[[0]], [[0]], [[1]]], "simple with e22 acting as 1")
    write_module("ut2f2_nat", "nat", "ut2f2", 2,
                 [[[1, 0], [0, 0]], [[0, 1], [0, 0]], [[0, 0], [0, 1]]],
                 "row vectors, not simple")
    write_module("f2xf2_first", "first", "f2xf2", 2, [[[1]], [[0]]], "first factor")
    write_module("f2xf2_second", "second", "f2xf2", 2, [[[0]], [[1]]], "second factor")
    write_module("f2x2_res", "res", "f2x2", 2, [[[1]], [[0]]], "residue field A/(x)")
    write_module("f3x2m1_plus", "plus", "f3x2m1", 3, [[[1]], [[1]]], "A/(x-1)")
    write_module("f3x2m1_minus", "minus", "f3x2m1", 3, [[[1]], [[2]]], "A/(x+1)")
    write_module("f4_self", "self", "f4", 2, [[[1, 0], [0, 1]], [[0, 1], [1, 1]]],
                 "regular module of F_4")

    # Broken: e1*e2 changed so associativity fails.
    text = (OUT / "ut2f2.alg").read_text().replace("mul 1 2 : 0 1 0", "mul 1 2 : 0 1 1")
    text = text.replace("algebra ut2f2", "algebra broken").replace(
        "# upper triangular", "# deliberately non-associative copy of upper triangular")
    (OUT / "broken.alg").write_text(text)


if __name__ == "__main__":
    main()
