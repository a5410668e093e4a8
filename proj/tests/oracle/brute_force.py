#!/usr/bin/env python3
"""Independent brute-force oracle for the frozen values used in the C++ tests.

Builds GF(p^(2s)) from scratch with schoolbook polynomial arithmetic (same
deterministic modulus/generator rules as the library), then computes
minimum distances of C_(q,q+1,3,h) and its dual by exhaustive enumeration
of (a, b) pairs and of codewords. Nothing here shares code with the C++
implementation.

    python3 tests/oracle/brute_force.py
"""
import itertools
import math
import sys


def poly_mulmod(a, b, mod, p):
    n = len(mod) - 1
    out = [0] * (2 * n)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
    for d in range(len(out) - 1, n - 1, -1):
        c = out[d]
        if c:
            for i in range(n + 1):
                out[d - n + i] = (out[d - n + i] - c * mod[i]) % p
    return out[:n]


def is_irreducible_bruteforce(f, p):
    # f monic, coefficient list low degree first; try every monic divisor.
    n = len(f) - 1
    for deg in range(1, n // 2 + 1):
        for tail in itertools.product(range(p), repeat=deg):
            g = list(tail) + [1]
            r = list(f)
            for d in range(n, deg - 1, -1):
                c = r[d]
                if c:
                    for i in range(deg + 1):
                        r[d - deg + i] = (r[d - deg + i] - c * g[i]) % p
            if not any(r[:deg]):
                return False
    return True


class Field:
    def __init__(self, p, s):
        self.p, self.s, self.q = p, s, p ** s
        n = 2 * s
        self.size = p ** n
        self.order = self.size - 1
        # lexicographically smallest monic irreducible, low degree first
        for tup in itertools.product(range(p), repeat=n):
            f = list(tup) + [1]
            if f[0] and is_irreducible_bruteforce(f, p):
                self.modulus = f
                break
        self.n = n
        primes = [r for r in range(2, self.order + 1)
                  if self.order % r == 0 and all(r % t for t in range(2, int(r ** 0.5) + 1))]
        for v in range(1, self.size):
            g = self.vec(v)
            if all(self.slow_pow(g, self.order // r) != self.vec(1) for r in primes):
                self.alpha = v
                break
        self.exp = [0] * self.order
        self.log = {}
        cur = self.vec(1)
        a = self.vec(self.alpha)
        for i in range(self.order):
            val = self.val(cur)
            self.exp[i] = val
            self.log[val] = i
            cur = poly_mulmod(cur, a, self.modulus, p)
        assert len(self.log) == self.order

    def vec(self, v):
        return [(v // self.p ** i) % self.p for i in range(self.n)]

    def val(self, vec):
        return sum(c * self.p ** i for i, c in enumerate(vec))

    def slow_pow(self, g, e):
        r = self.vec(1)
        base = g
        while e:
            if e & 1:
                r = poly_mulmod(r, base, self.modulus, self.p)
            base = poly_mulmod(base, base, self.modulus, self.p)
            e >>= 1
        return r

    def add(self, x, y):
        return self.val([(a + b) % self.p for a, b in zip(self.vec(x), self.vec(y))])

    def mul(self, x, y):
        if x == 0 or y == 0:
            return 0
        return self.exp[(self.log[x] + self.log[y]) % self.order]

    def powe(self, x, e):
        if x == 0:
            return 0
        return self.exp[(self.log[x] * e) % self.order]

    def trace(self, x):
        return self.add(x, self.powe(x, self.q))


def dual_distance(F, h):
    q = F.q
    beta_log = q - 1
    # exponents of beta^(h i) and beta^((h+1) i)
    best = None
    elems = range(F.size)
    addtab = {}
    def add(x, y):
        key = (x, y) if x <= y else (y, x)
        r = addtab.get(key)
        if r is None:
            r = F.add(x, y)
            addtab[key] = r
        return r
    tr = [F.trace(x) for x in elems]
    u1 = [F.exp[(beta_log * h * i) % F.order] for i in range(q + 1)]
    u2 = [F.exp[(beta_log * (h + 1) * i) % F.order] for i in range(q + 1)]
    for a in elems:
        for b in elems:
            if a == 0 and b == 0:
                continue
            w = 0
            for i in range(q + 1):
                if tr[add(F.mul(a, u1[i]), F.mul(b, u2[i]))]:
                    w += 1
            if w and (best is None or w < best):
                best = w
    return best


def code_distance(F, h):
    """Exhaustive d via parity checks over all F_q words of weight <= 5."""
    q = F.q
    sub = [0] + [F.exp[(q + 1) * j] for j in range(q - 1)]
    nz = sub[1:]
    u1 = [F.exp[((q - 1) * h * i) % F.order] for i in range(q + 1)]
    u2 = [F.exp[((q - 1) * (h + 1) * i) % F.order] for i in range(q + 1)]
    for w in range(1, 6):
        for supp in itertools.combinations(range(q + 1), w):
            for coeffs in itertools.product(nz, repeat=w - 1):
                cs = (1,) + coeffs  # scale so first coefficient is 1
                s1 = s2 = 0
                for c, i in zip(cs, supp):
                    s1 = F.add(s1, F.mul(c, u1[i]))
                    s2 = F.add(s2, F.mul(c, u2[i]))
                if s1 == 0 and s2 == 0:
                    return w
    return None


def order(F, x):
    e = 1
    cur = x
    while cur != 1:
        cur = F.mul(cur, x)
        e += 1
    return e


def compare_csv(path):
    """Checks d and d_dual of every row of a sweep CSV against this oracle."""
    import csv
    fields = {}
    bad = 0
    with open(path, newline="") as fh:
        rows = list(csv.DictReader(fh))
    for row in rows:
        p, s, h = int(row["p"]), int(row["s"]), int(row["h"])
        F = fields.setdefault((p, s), Field(p, s))
        want_dual = dual_distance(F, h)
        got_dual = int(row["d_dual"])
        want_d = code_distance(F, h) if row["d"] else None
        got_d = int(row["d"]) if row["d"] else None
        if want_dual != got_dual or want_d != got_d:
            bad += 1
            print(f"q={F.q} h={h}: d {got_d} vs {want_d}, d_dual {got_dual} vs {want_dual}")
    print(f"{len(rows)} rows compared, {bad} disagreements")
    return bad == 0 and len(rows) > 0


if __name__ == "__main__":
    if len(sys.argv) == 3 and sys.argv[1] == "--compare":
        sys.exit(0 if compare_csv(sys.argv[2]) else 1)
    for (p, s) in [(2, 1), (3, 1), (2, 2), (5, 1), (2, 3), (3, 2)]:
        F = Field(p, s)
        print(f"GF({p}^{2*s}) modulus={F.modulus} alpha={F.alpha} "
              f"beta={F.exp[F.q - 1]}")
    F = Field(5, 2)
    print("GF(625) beta order", order(F, F.exp[F.q - 1]), "modulus", F.modulus,
          "alpha", F.alpha)
    for (p, s, hs) in [(5, 1, range(6)), (3, 2, range(10)), (2, 3, range(9))]:
        F = Field(p, s)
        print(f"q={F.q} d:", {h: code_distance(F, h) for h in hs})
    for (p, s, hs) in [(3, 2, range(10)), (2, 3, range(9))]:
        F = Field(p, s)
        print(f"q={F.q} d_dual:", {h: dual_distance(F, h) for h in hs})
    if "--big" in sys.argv:
        for (p, s, h) in [(3, 3, 4), (3, 3, 2), (5, 2, 2)]:
            F = Field(p, s)
            print(f"q={F.q} h={h} d_dual={dual_distance(F, h)}", flush=True)
