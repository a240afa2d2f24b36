"""Writes the hand-entered golden measurement and basis files."""
import json
import math
import os

S3 = math.sqrt(3.0)
OUT = os.path.join(os.path.dirname(__file__), "..", "golden")


def m2(scale, a, b, d):
    b = complex(*b)
    rows = [[complex(a), b], [b.conjugate(), complex(d)]]
    return [[[scale * z.real + 0.0, scale * z.imag + 0.0] for z in r] for r in rows]


def diag(vals):
    n = len(vals)
    return [[[vals[i] if i == j else 0.0, 0.0] for j in range(n)] for i in range(n)]


def measurement(d, blocks, provenance=None):
    out = {"format_version": "1", "d": d, "block_sizes": [len(b) for b in blocks], "operators": blocks}
    if provenance:
        out["provenance"] = provenance
    return out


def write(name, obj):
    with open(os.path.join(OUT, name), "w") as f:
        json.dump(obj, f, indent=2)
        f.write("\n")


write("qubit_23.json", measurement(2, [
    [diag([1.0, 0.0]), diag([0.0, 1.0])],
    [m2(1 / 3, 1, (0, -1), 1), m2(1 / 6, 2, (S3, 1), 2), m2(1 / 6, 2, (-S3, 1), 2)],
], {"basis": "hand-entered"}))

a, b = S3 / 36, S3 / 12
sic = {
    ("unprimed", "+"): [m2(a, 1 + 3 * S3, (-5, -1), -1 + 3 * S3), m2(a, 1 + 3 * S3, (1, 5), -1 + 3 * S3),
                        m2(a, -5 + 3 * S3, (1, -1), 5 + 3 * S3), m2(b, 1 + S3, (1, -1), -1 + S3)],
    ("unprimed", "-"): [m2(a, -1 + 3 * S3, (5, 1), 1 + 3 * S3), m2(a, -1 + 3 * S3, (-1, -5), 1 + 3 * S3),
                        m2(a, 5 + 3 * S3, (-1, 1), -5 + 3 * S3), m2(b, -1 + S3, (-1, 1), 1 + S3)],
    ("primed", "+"): [m2(b, 1 + S3, (-1, -1), -1 + S3), m2(b, 1 + S3, (1, 1), -1 + S3),
                      m2(b, -1 + S3, (1, -1), 1 + S3), m2(b, -1 + S3, (-1, 1), 1 + S3)],
    ("primed", "-"): [m2(b, -1 + S3, (1, 1), 1 + S3), m2(b, -1 + S3, (-1, -1), 1 + S3),
                      m2(b, 1 + S3, (-1, 1), -1 + S3), m2(b, 1 + S3, (1, -1), -1 + S3)],
}
t_star = {"unprimed": 1 / (6 * math.sqrt(6)), "primed": 1 / (2 * math.sqrt(6))}
for (family, sign), ops in sic.items():
    t = t_star[family] * (1 if sign == "+" else -1)
    name = f"sic_{family}_{'plus' if sign == '+' else 'minus'}.json"
    write(name, measurement(2, [ops], {"basis": "pauli", "variants": [f"{family}:{sign}"], "t": [t]}))

r = 1 / math.sqrt(2)
write("basis_pauli.json", {"format_version": "1", "d": 2, "operators": [
    m2(r, 0, (1, 0), 0), m2(r, 0, (0, -1), 0), m2(r, 1, (0, 0), -1)]})
s = 1 / (3 * math.sqrt(2))
write("basis_g.json", {"format_version": "1", "d": 2, "operators": [
    m2(s, 2, (-1, -2), -2), m2(s, 2, (2, 1), -2), m2(s, -1, (2, -2), 1)]})

n = 1 / (S3 * (S3 + 1))
write("basis_qutrit_pair.json", {"format_version": "1", "d": 3, "operators": [
    diag([(-2 - S3) * n, n, (1 + S3) * n]), diag([n, (-2 - S3) * n, (1 + S3) * n])]})
