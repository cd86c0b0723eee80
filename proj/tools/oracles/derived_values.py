"""Independent reference values frozen into the unit tests.

Uses sympy only; nothing here depends on the C++ library.
Run: python3 tools/oracles/derived_values.py
"""
import json
from itertools import product

import sympy as sp
from sympy.matrices.normalforms import smith_normal_form

x = sp.symbols("x")


def snf(rows):
    m = sp.Matrix(rows)
    d = smith_normal_form(m, domain=sp.ZZ)
    return [abs(int(d[i, i])) for i in range(min(m.shape))]


def lattice_is_full(gens, n):
    # Gcd of maximal minors equals 1 iff the generators span Z^n.
    m = sp.Matrix(gens)
    g = 0
    from itertools import combinations
    for rows in combinations(range(m.rows), n):
        g = sp.gcd(g, m.extract(list(rows), list(range(n))).det())
    return abs(g) == 1


def coeffs_in_subfield(poly_value, n, m):
    """Express an element of Q[x]/Phi_n (x = zeta_n) lying in Q(zeta_m), m | n,
    in the power basis of zeta_m = x^(n/m)."""
    phin = sp.cyclotomic_poly(n, x)
    step = n // m
    dm = sp.totient(m)
    basis = [sp.rem(sp.expand(x ** (step * j)), phin, x) for j in range(dm)]
    cs = sp.symbols(f"c0:{dm}")
    expr = sp.rem(sp.expand(sum(c * b for c, b in zip(cs, basis)) - poly_value), phin, x)
    sol = sp.solve(sp.Poly(expr, x).all_coeffs(), cs, dict=True)[0]
    return [str(sp.nsimplify(sol[c])) for c in cs]


def distribution_lhs(f, ell):
    n = f * ell
    phin = sp.cyclotomic_poly(n, x)
    val = sp.Integer(1)
    for a in range(1, n + 1):
        if a % f == 1 % f and sp.gcd(a, n) == 1:
            val = sp.rem(sp.expand(val * (1 - x ** a)), phin, x)
    return coeffs_in_subfield(val, n, f)


# Quaternion group through the complex 2x2 model; a group-ring element is given
# by coefficients on (1, i, j, k) and the linear characters by signs on (i, j).
I2 = sp.eye(2)
QI = sp.Matrix([[sp.I, 0], [0, -sp.I]])
QJ = sp.Matrix([[0, 1], [-1, 0]])
QK = QI * QJ


def q8_rep(c):
    return c[0] * I2 + c[1] * QI + c[2] * QJ + c[3] * QK


def q8_nrd(mat):
    """mat: square list of (a, b, c, d) tuples. Returns values on the linear
    characters (si, sj) in the order (1,1), (-1,1), (1,-1), (-1,-1) and on the
    degree-2 component."""
    n = len(mat)
    out = []
    for si, sj in [(1, 1), (-1, 1), (1, -1), (-1, -1)]:
        m = sp.Matrix(n, n, lambda r, s: mat[r][s][0] + si * mat[r][s][1] + sj * mat[r][s][2] + si * sj * mat[r][s][3])
        out.append(int(m.det()))
    big = sp.zeros(2 * n, 2 * n)
    for r in range(n):
        for s in range(n):
            big[2 * r:2 * r + 2, 2 * s:2 * s + 2] = q8_rep(mat[r][s])
    out.append(int(sp.simplify(big.det())))
    return out


# S3 through permutation matrices: trivial, sign and the 2-dim summand of the
# permutation representation. Elements given as coefficients on
# (1, r, r^2, s, s r, s r^2) with r = (0 1 2), s = (0 1), "s r" = s then r.
def perm(p):
    m = sp.zeros(3, 3)
    for i, pi in enumerate(p):
        m[i, pi] = 1
    return m


R = perm([1, 2, 0])
S = perm([1, 0, 2])
S3_ELTS = [sp.eye(3), R, R * R, S, S * R, S * R * R]
S3_SIGN = [1, 1, 1, -1, -1, -1]
# Basis of the sum-zero plane, used to restrict the permutation representation.
P = sp.Matrix([[1, -1, 0], [0, 1, -1]])
PINV = P.T * (P * P.T).inv()


def s3_nrd(mat):
    n = len(mat)
    triv = sp.Matrix(n, n, lambda r, s: sum(mat[r][s]))
    sign = sp.Matrix(n, n, lambda r, s: sum(c * e for c, e in zip(mat[r][s], S3_SIGN)))
    big = sp.zeros(2 * n, 2 * n)
    for r in range(n):
        for s in range(n):
            # Row-vector action v -> v * g restricted to the plane.
            block = sum((c * (P * g * PINV) for c, g in zip(mat[r][s], S3_ELTS)), sp.zeros(2, 2))
            big[2 * r:2 * r + 2, 2 * s:2 * s + 2] = block
    return [int(triv.det()), int(sign.det()), int(sp.simplify(big.det()))]


def main():
    out = {}
    out["hnf_full"] = lattice_is_full([[2, 0], [0, 3], [1, 1]], 2)
    out["snf_diag23"] = snf([[2, 0], [0, 3]])
    out["snf_c2_2plusg"] = snf([[2, 1], [1, 2]])
    out["phi_at_1"] = {str(p): int(sp.cyclotomic_poly(p, 1)) for p in [2, 3, 5, 7, 11, 13]}
    out["phi12_at_1"] = int(sp.cyclotomic_poly(12, 1))
    out["distribution_lhs"] = {f"{f},{l}": distribution_lhs(f, l) for f, l in [(3, 2), (4, 3), (5, 2), (7, 3)]}
    q8_cases = [
        [[(1, 1, 0, 0)]],
        [[(1, 2, -1, 0)]],
        [[(1, 1, 0, 0), (0, 0, 1, 0)], [(2, 0, 0, 1), (1, -1, 0, 0)]],
        [[(0, 1, 1, 0), (1, 0, 0, 0)], [(0, 0, 0, 1), (1, 1, 1, 1)]],
    ]
    out["q8_nrd"] = [{"matrix": c, "nrd": q8_nrd(c)} for c in q8_cases]
    s3_cases = [
        [[(1, 1, 0, 0, 0, 0)]],
        [[(2, 0, 0, 1, 0, 0)]],
        [[(1, 0, 0, 0, 1, 1)]],
        [[(1, 1, 0, 0, 0, 0), (0, 0, 0, 1, 0, 0)], [(0, 0, 1, 0, 0, 0), (1, 0, 0, 0, 0, 1)]],
    ]
    out["s3_nrd"] = [{"matrix": c, "nrd": s3_nrd(c)} for c in s3_cases]
    print(json.dumps(out, indent=1))


if __name__ == "__main__":
    main()
