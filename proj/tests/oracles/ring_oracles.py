"""Independent checks of the pinned ring invariants, frozen into the C++ tests.

Uses sympy only for Groebner bases; all linear algebra is plain Gaussian
elimination mod p written here, so nothing is shared with the library.
Run: python3 tests/oracles/ring_oracles.py
"""
from fractions import Fraction
from itertools import combinations, combinations_with_replacement

from sympy import Poly, Matrix, groebner, reduced, symbols

P = 101
X = symbols("x1:6")
x1, x2, x3, x4, x5 = X
RELATIONS = [x1**2 - x2 * x3, x2**2 - x3 * x5, x3**2 - x1 * x4, x4**2, x5**2, x3 * x4, x2 * x5, x4 * x5]
F1, F2 = x1 + x2 + x4, x2 + x3 + x5


def rank_mod_p(rows, p=P):
    rows = [[v % p for v in r] for r in rows if any(v % p for v in r)]
    rank, col = 0, 0
    ncols = len(rows[0]) if rows else 0
    while rank < len(rows) and col < ncols:
        piv = next((i for i in range(rank, len(rows)) if rows[i][col]), None)
        if piv is None:
            col += 1
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        inv = pow(rows[rank][col], p - 2, p)
        rows[rank] = [v * inv % p for v in rows[rank]]
        for i in range(len(rows)):
            if i != rank and rows[i][col]:
                c = rows[i][col]
                rows[i] = [(a - c * b) % p for a, b in zip(rows[i], rows[rank])]
        rank += 1
        col += 1
    return rank


class Quotient:
    def __init__(self, gens, gens_vars):
        self.vars = gens_vars
        self.gb = list(groebner(gens, *gens_vars, order="grevlex", modulus=P).exprs)
        lead = [Poly(g, *gens_vars).monoms(order="grevlex")[0] for g in self.gb]
        self.basis = []
        d = 0
        while True:
            layer = [m for m in self.monomials(d) if not any(all(a >= b for a, b in zip(m, l)) for l in lead)]
            if not layer:
                break
            self.basis += layer
            d += 1
        self.index = {m: i for i, m in enumerate(self.basis)}

    def monomials(self, d):
        n = len(self.vars)
        out = set()
        for c in combinations_with_replacement(range(n), d):
            m = [0] * n
            for i in c:
                m[i] += 1
            out.add(tuple(m))
        return sorted(out, key=lambda m: (sum(m), m))

    def degree(self, i):
        return sum(self.basis[i])

    def coords(self, f):
        r = reduced(f, self.gb, *self.vars, order="grevlex", modulus=P)[1]
        v = [0] * len(self.basis)
        if r != 0:
            for m, c in Poly(r, *self.vars, modulus=P).terms():
                v[self.index[m]] = int(c) % P
        return v

    def element(self, i):
        e = 1
        for var, k in zip(self.vars, self.basis[i]):
            e *= var**k
        return e

    def hilbert(self):
        h = {}
        for m in self.basis:
            h[sum(m)] = h.get(sum(m), 0) + 1
        return [h[d] for d in sorted(h)]


def koszul_homology(R, seq):
    """Total dims of Z_p, B_p, H_p of the Koszul complex on `seq` over R."""
    m, n = len(seq), len(R.basis)
    subsets = {p: list(combinations(range(m), p)) for p in range(m + 1)}
    mult = [[R.coords(s * R.element(j)) for j in range(n)] for s in seq]

    def boundary(p):
        # columns: (subset, basis) of E_p; rows: (subset, basis) of E_{p-1}
        rows_index = {s: k for k, s in enumerate(subsets[p - 1])}
        mat = [[0] * (len(subsets[p]) * n) for _ in range(len(subsets[p - 1]) * n)]
        for k, s in enumerate(subsets[p]):
            for pos, i in enumerate(s):
                t = s[:pos] + s[pos + 1:]
                sign = -1 if pos % 2 else 1
                r0 = rows_index[t] * n
                for j in range(n):
                    for b, c in enumerate(mult[i][j]):
                        if c:
                            mat[r0 + b][k * n + j] = (mat[r0 + b][k * n + j] + sign * c) % P
        return mat

    ranks = {p: rank_mod_p(boundary(p)) if 1 <= p <= m else 0 for p in range(m + 2)}
    out = {}
    for p in range(m + 1):
        dim = len(subsets[p]) * n
        z = dim - ranks[p]
        b = ranks[p + 1]
        out[p] = (z, b, z - b)
    return out


def series_inverse(c, prec):
    out = [Fraction(0)] * prec
    out[0] = Fraction(1, c[0])
    for k in range(1, prec):
        s = sum(Fraction(c[i]) * out[k - i] for i in range(1, min(k, len(c) - 1) + 1))
        out[k] = -s / c[0]
    return out


def deviations(p_series, m):
    """eps_1..eps_m with P = prod (1+z^(2i-1))^eps / (1-z^(2i))^eps, by peeling factors."""
    cur = [Fraction(v) for v in p_series]
    eps = []
    prec = len(cur)
    for i in range(1, m + 1):
        e = int(cur[i])
        eps.append(e)
        if i % 2:
            # divide by (1 + z^i)^e
            for _ in range(e):
                nxt = cur[:]
                for k in range(i, prec):
                    nxt[k] = cur[k] - nxt[k - i]
                cur = nxt
        else:
            # multiply by (1 - z^i)^e
            for _ in range(e):
                cur = [cur[k] - (cur[k - i] if k >= i else 0) for k in range(prec)]
    return eps


def witness_minors_primary(n):
    w = symbols(f"w1:{n + 1}")
    W = Matrix(n, n, lambda i, j: w[i + j - 2] if 4 <= i + j + 2 <= n + 3 else 0)
    minors = set()
    for rows in combinations(range(n), 3):
        for cols in combinations(range(n), 3):
            d = W.extract(list(rows), list(cols)).det()
            if d != 0:
                minors.add(d.expand())
    G = groebner(list(minors), *w, order="grevlex", modulus=P)
    lead = [Poly(g, *w).monoms(order="grevlex")[0] for g in G.exprs]
    pure = set()
    for m in lead:
        nz = [i for i, e in enumerate(m) if e]
        if len(nz) == 1:
            pure.add(nz[0])
    return len(pure) == n


def main():
    B = Quotient(RELATIONS, X)
    print("hilbert B:", B.hilbert())
    h = koszul_homology(B, [F1, F2])
    print("koszul (f1,f2): Z1 B1 H1 =", h[1], "H2 =", h[2][2], "H0 =", h[0][2])
    amb = koszul_homology(B, list(X))
    print("ambient betti (Koszul homology on the variables):", [amb[p][2] for p in range(6)])
    hb = B.hilbert()
    alt = [v * (-1) ** i for i, v in enumerate(hb)]
    poincare = series_inverse(alt, 8)
    print("1/H_B(-z):", [int(v) for v in poincare])
    print("deviations:", deviations(poincare, 3))
    tate = series_inverse([1, 0, -2, 0, 1], 6)
    num = [sum(([1, 2, 1][i] if i < 3 else 0) * tate[k - i] for i in range(k + 1)) for k in range(5)]
    print("(1+z)^2/(1-z^2)^2:", [int(v) for v in num])
    print("dim B_3 (nu(m^3) for a graded ring generated in degree 1):", hb[3])
    for n in (4, 5, 6):
        print(f"I3(W_{n}) primary to (w):", witness_minors_primary(n))


if __name__ == "__main__":
    main()
