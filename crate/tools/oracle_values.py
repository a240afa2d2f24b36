"""Independent NumPy computation of the regression constants frozen into the
acceptance suite.

Run: python3 tools/oracle_values.py
"""

import numpy as np


def gell_mann(d):
    ops = []
    pairs = [(j, k) for j in range(d) for k in range(j + 1, d)]
    for j, k in pairs:
        m = np.zeros((d, d), complex)
        m[j, k] = m[k, j] = 1 / np.sqrt(2)
        ops.append(m)
    for j, k in pairs:
        m = np.zeros((d, d), complex)
        m[j, k] = -1j / np.sqrt(2)
        m[k, j] = 1j / np.sqrt(2)
        ops.append(m)
    for l in range(1, d):
        diag = [1.0] * l + [-float(l)] + [0.0] * (d - l - 1)
        ops.append(np.diag(diag).astype(complex) / np.sqrt(l * (l + 1)))
    return ops


def partition(ops, sizes):
    out, i = [], 0
    for m in sizes:
        out.append(ops[i:i + m - 1])
        i += m - 1
    return out


def h_ops(block):
    m = len(block) + 1
    s = np.sqrt(m)
    g = sum(block)
    return [g - s * (1 + s) * gk for gk in block] + [(1 + s) * g]


def t_hi(block):
    h = h_ops(block)
    lmin = min(np.linalg.eigvalsh(x).min() for x in h)
    return 1 / (len(h) * abs(lmin))


def povm(block, t):
    d = block[0].shape[0]
    h = h_ops(block)
    return [np.eye(d) / len(h) + t * x for x in h]


def t_for_r(r, m):
    return np.sqrt(r / m) / (1 + np.sqrt(m))


def r_class(d, sizes, r):
    blocks = partition(gell_mann(d), sizes)
    out = []
    for b in blocks:
        t = t_for_r(r, len(b) + 1)
        assert t <= t_hi(b) + 1e-15, (d, sizes, r)
        out.append(povm(b, t))
    return out


def max_r(d, sizes):
    blocks = partition(gell_mann(d), sizes)
    return min(len(b + [0]) * (1 + np.sqrt(len(b) + 1)) ** 2 * t_hi(b) ** 2 for b in blocks)


def c_max(d, sizes, r):
    return (d - 1) * r / d + sum(1 / m for m in sizes)


def bell(d):
    v = np.zeros(d * d, complex)
    for m in range(d):
        v[m * d + m] = 1 / np.sqrt(d)
    return np.outer(v, v.conj())


def corr(ga, gb, rho):
    ea = [e for b in ga for e in b]
    eb = [e for b in gb for e in b]
    return np.array([[np.trace(rho @ np.kron(a, b)).real for b in eb] for a in ea])


def kappas(g, d):
    s = sum(np.kron(e, e) for b in g for e in b)
    f = np.zeros((d * d, d * d))
    for m in range(d):
        for n in range(d):
            f[m * d + n, n * d + m] = 1
    gram = np.array([[d * d, d], [d, d * d]], float)
    rhs = np.array([np.trace(s).real, np.trace(s @ f).real])
    kp, km = np.linalg.solve(gram, rhs)
    return kp, km, np.abs(s - kp * np.eye(d * d) - km * f).max()


def report(name, d, sizes, r):
    g = r_class(d, sizes, r)
    p = corr(g, g, bell(d))
    cm = c_max(d, sizes, r)
    tn = np.linalg.svd(p, compute_uv=False).sum()
    kp, km, res = kappas(g, d)
    print(f"{name}: d={d} sizes={sizes} r={r!r}")
    print(f"  C_max          = {cm!r}")
    print(f"  kappa          = ({kp!r}, {km!r}) residual {res:.2e}")
    print(f"  Bell Tr P      = {np.trace(p)!r}  bound {cm!r}")
    print(f"  Bell ||P||_Tr  = {tn!r}  bound {cm!r}  margin {tn - cm!r}")


if __name__ == "__main__":
    report("qubit [2,3]", 2, [2, 3], 1 / 3)
    report("qubit SIC", 2, [4], 1 / 6)
    report("qubit MUB", 2, [2, 2, 2], 1.0)
    r3 = max_r(3, [3, 3, 3, 3])
    print("max feasible r for d=3 [3,3,3,3]:", repr(r3))
    report("qutrit [3,3,3,3]", 3, [3, 3, 3, 3], 0.3)
    r235 = max_r(3, [2, 4, 5])
    print("max feasible r for d=3 [2,4,5]:", repr(r235))
    report("qutrit [2,4,5]", 3, [2, 4, 5], 0.08)

    # Gram-determinant rank oracle for d=3 [3,3,3,3]
    g = r_class(3, [3, 3, 3, 3], 0.3)
    vecs = [np.eye(3)] + [e for b in g for e in b[:-1]]
    gram = np.array([[np.trace(a @ b).real for b in vecs] for a in vecs])
    print("d=3 [3,3,3,3] Gram det:", repr(np.linalg.det(gram)), "size", gram.shape)
