"""Independent sympy computations of the derived reference values.

The C++ tests freeze the numbers printed here.  Run with
`python3 tests/oracles/derive.py`.
"""
import itertools

import sympy as sp


def mutate_matrix(b, k):
    m, n = len(b), len(b[0])
    out = [[0] * n for _ in range(m)]
    for i in range(m):
        for j in range(n):
            if i == k or j == k:
                out[i][j] = -b[i][j]
            else:
                out[i][j] = b[i][j] + (abs(b[i][k]) * b[k][j] + b[i][k] * abs(b[k][j])) // 2
    return out


def mutate(b, xs, k):
    pos = sp.Integer(1)
    neg = sp.Integer(1)
    for j, e in enumerate(b[k]):
        if e > 0:
            pos *= xs[j] ** e
        elif e < 0:
            neg *= xs[j] ** (-e)
    new = list(xs)
    new[k] = sp.factor(sp.cancel((pos + neg) / xs[k]))
    return mutate_matrix(b, k), new


def is_laurent(expr, gens):
    num, den = sp.fraction(sp.cancel(sp.together(expr)))
    return sp.Poly(den, *gens).is_monomial


def explore(b, xs, max_seeds=200):
    key = lambda c: frozenset(sp.srepr(sp.expand(sp.cancel(v))) for v in c)
    seen = {key(xs): (b, xs)}
    order = [(b, xs)]
    frontier = [(b, xs)]
    while frontier:
        cb, cx = frontier.pop(0)
        for k in range(len(cb)):
            nb, nx = mutate(cb, cx, k)
            kk = key(nx)
            if kk not in seen and len(seen) < max_seeds:
                seen[kk] = (nb, nx)
                order.append((nb, nx))
                frontier.append((nb, nx))
    return order


def main():
    print("mutate affine k=1:", mutate_matrix([[0, 2], [-2, 0]], 0))
    print("mutate A3 k=2:", mutate_matrix([[0, 1, 0], [-1, 0, 1], [0, -1, 0]], 1))

    x0, x1 = sp.symbols("x0 x1")
    b = [[0, 2], [-2, 0]]
    b1, c1 = mutate(b, [x0, x1], 0)
    b2, c2 = mutate(b1, c1, 1)
    print("affine x2:", sp.expand(c1[0]), " x3:", sp.factor(c2[1]))

    x13, x14, x15 = sp.symbols("x13 x14 x15")
    gens = [x13, x14, x15]
    a3 = [[0, 1, 0], [-1, 0, 1], [0, -1, 0]]
    seeds = explore(a3, gens)
    variables = {sp.srepr(sp.expand(sp.cancel(v))): v for _, c in seeds for v in c}
    print("A3 clusters:", len(seeds), " variables:", len(variables),
          " all Laurent:", all(is_laurent(v, gens) for v in variables.values()))

    # Tangent dimensions.
    x, xp, c1s, c2s = sp.symbols("x xp c1 c2")
    rel = [x * xp - (c1s * c2s + 1)]
    jac = sp.Matrix(rel).jacobian([x, xp, c1s, c2s]).subs({x: 0, xp: 0, c1s: 2, c2s: sp.Rational(-1, 2)})
    print("SL2 tangent:", 4 - jac.rank())

    x24, x35, x46 = sp.symbols("x24 x35 x46")
    rels = [x13 * x24 - (x14 + 1), x14 * x35 - (x13 + x15), x15 * x46 - (x14 + 1)]
    allg = [x13, x14, x15, x24, x35, x46]
    j = sp.Matrix(rels).jacobian(allg)
    deep = {x13: 0, x14: -1, x15: 0, x24: 0, x35: 0, x46: 0}
    print("A3 deep jacobian:", j.subs(deep).tolist(), " tangent:", 6 - j.subs(deep).rank())
    generic = {x13: 1, x14: 1, x15: 1, x24: 2, x35: 2, x46: 2}
    print("A3 generic tangent:", 6 - j.subs(generic).rank(),
          " relations vanish:", [r.subs(generic) for r in rels])

    # Skew-symmetrizer of [[0,1],[-2,0]]: d1*1 = -d2*(-2).
    d1, d2 = 2, 1
    print("symmetrizer [[0,1],[-2,0]]:", (d1, d2), d1 * 1 == -d2 * -2)

    # Affine global expression versus omega on the chart {x0, x1}.
    X2 = (x1**2 + 1) / x0
    X3 = ((x1**2 + 1) ** 2 + x0**2) / (x0**2 * x1)
    def dd(f):
        return (sp.diff(f, x0), sp.diff(f, x1))
    def wedge(f, g):
        a, b = dd(f), dd(g)
        return a[0] * b[1] - a[1] * b[0]
    expr = (x0 * X3 * wedge(x1, X2) - x1 * X3 / 2 * wedge(x0, X2)
            - x0 * X2 / 2 * wedge(x1, X3) + x1 * X2 * wedge(x1, X2))
    omega = 2 / (x0 * x1)
    print("affine global coefficient:", sp.simplify(expr), " minus omega:", sp.simplify(expr - omega))
    print("dx0^dx2/x1^2:", sp.simplify(wedge(x0, X2) / x1**2 - omega))
    XM1 = (x0**2 + 1) / x1
    print("dxm1^dx1/x0^2:", sp.simplify(wedge(XM1, x1) / x0**2 - omega))

    # Markov: every matrix at mutation depth <= 3 keeps |B_ij| = 2 off the diagonal.
    mk = [[0, 2, -2], [-2, 0, 2], [2, -2, 0]]
    ok = True
    for length in range(4):
        for seq in itertools.product(range(3), repeat=length):
            m = mk
            for k in seq:
                m = mutate_matrix(m, k)
            ok &= all(abs(m[i][j]) == 2 for i in range(3) for j in range(3) if i != j)
    print("Markov |B_ij| = 2 through depth 3:", ok)

    # Affine p0 propagation: x2*x4 = x3^2 + 1 with x2 = -i, x3 = 0.
    I = sp.I
    print("affine p0 x4:", sp.simplify((0**2 + 1) / (-I)))


if __name__ == "__main__":
    main()
