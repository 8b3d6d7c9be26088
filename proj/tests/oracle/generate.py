"""Independent sympy oracle for the series-valued quantities.

Writes tests/oracle_values.inc.  Regenerate with
    python3 tests/oracle/generate.py > tests/oracle_values.inc
"""
import sympy as sp

t = sp.symbols("t")


def frac(expr):
    """(numerator, denominator) as sympy Polys over QQ, without cancellation."""
    if expr.is_Add:
        n, d = sp.Poly(0, t, domain="QQ"), sp.Poly(1, t, domain="QQ")
        for a in expr.args:
            an, ad = frac(a)
            n, d = n * ad + an * d, d * ad
        return n, d
    if expr.is_Mul:
        n, d = sp.Poly(1, t, domain="QQ"), sp.Poly(1, t, domain="QQ")
        for a in expr.args:
            an, ad = frac(a)
            n, d = n * an, d * ad
        return n, d
    if expr.is_Pow and expr.exp.is_Integer:
        bn, bd = frac(expr.base)
        e = int(expr.exp)
        return (bn**e, bd**e) if e >= 0 else (bd**-e, bn**-e)
    return sp.Poly(expr, t, domain="QQ"), sp.Poly(1, t, domain="QQ")


def series(expr, order):
    num, den = frac(expr)
    common = sp.gcd(num, den)
    num, den = sp.quo(num, common), sp.quo(den, common)
    a = num.all_coeffs()[::-1]
    b = den.all_coeffs()[::-1]
    out = []
    for i in range(order + 1):
        acc = a[i] if i < len(a) else sp.Rational(0)
        for j in range(1, min(i, len(b) - 1) + 1):
            acc -= b[j] * out[i - j]
        out.append(acc / b[0])
    return out


def poly(expr):
    num, den = frac(expr)
    q, r = sp.div(num, den)
    assert r.is_zero
    return q.all_coeffs()[::-1] if not q.is_zero else []


def shift(F, D):
    c = poly(F)
    out = 0
    for q in range(len(c) + 3):
        if 2 <= q <= D and q - 2 < len(c):
            out += c[q - 2] * t**q
        elif q > D and q < len(c):
            out += c[q] * t**q
    return out


def quantities(g):
    G = 2 * g
    R = (((1 + t**3)**G - (1 + t)**G * t**(G + 2)) / ((1 - t**2) * (1 - t**4)) - t**(4*g - 4)
         + t**(G + 2) * (1 + t)**G / ((1 - t**2) * (1 - t**4))
         + (1 - t)**G * t**(4*g - 4) / (4 * (1 + t**2))
         + (1 + t)**G * t**(4*g - 4) / (2 * (1 - t**2))
         * (sp.Integer(G) / (t + 1) + 1 / (t**2 - 1) - sp.Rational(1, 2) + (3 - G))
         + sp.Rational(1, 2) * (2**G - 1) * t**(4*g - 4) * ((1 + t)**(G - 2) + (1 - t)**(G - 2) - 2))
    Pp = sp.Rational(1, 2) * ((1 + t)**G + (1 - t)**G) + 2**G * ((1 - t**(4*g)) / (1 - t**2) - 1)
    Pm = sp.Rational(1, 2) * ((1 + t)**G - (1 - t)**G)
    Sig = Pp / (1 - t**4) + t**2 / (1 - t**4) * Pm
    Ip = (1 - t**(4*g - 4))**2 / ((1 - t**2) * (1 - t**4))
    Im = t**2 * (1 - t**(4*g - 4)) * (1 - t**(4*g - 8)) / ((1 - t**2) * (1 - t**4))
    E2 = Pp * Ip + Pm * Im
    fib = (1 - t**12) / (1 - t**2) - (1 - t**6) / (1 - t**2) + ((1 - t**6) / (1 - t**2))**2
    bl = (fib * (1 - t**(4*g - 8)) * (1 - t**(4*g - 4)) * (1 - t**(4*g)) / ((1 - t**2) * (1 - t**4) * (1 - t**6))
          - (1 - t**6) / (1 - t**2) * (1 - t**(4*g - 4)) * (1 - t**(4*g)) / ((1 - t**2) * (1 - t**4))
          * t**2 * (1 - t**(2 * (2*g - 5))) / (1 - t**2))
    Pups = bl - Ip * (1 - t**(4*g)) / (1 - t**2) + 1 / (1 - t**4) * (1 - t**(4*g)) / (1 - t**2)
    r2s = R + 2**G * (Pups - 1 / (1 - t**4)) + E2 - Sig
    corr2 = sp.expand(sp.cancel(Pp) * shift(Ip, 4*g - 7) + sp.cancel(Pm) * shift(Im, 4*g - 7))
    order = 6 * g - 2
    r2s_series = series(r2s, order)
    corr2_coeffs = poly(corr2)
    r1 = [r2s_series[i] - (corr2_coeffs[i] if i < len(corr2_coeffs) else 0) for i in range(order + 1)]
    return {
        "p_sl2_r": series(R, order),
        "p_sl2_sigma": series(Sig, order),
        "p_sl2_p_upsilon_ss": series(Pups, order),
        "p_sl2_e2_ss": poly(E2),
        "p_sl2_r2s": r2s_series,
        "correction_theorem2": corr2_coeffs,
        "ip_r1": r1,
    }


def main():
    print("// Generated by tests/oracle/generate.py; do not edit.")
    print("// {name, genus, {coefficients...}} with truncated series to order 6g-2.")
    for g in (2, 3, 4):
        for name, coeffs in quantities(g).items():
            assert all(c == int(c) for c in coeffs), (name, g)
            body = ", ".join('"%d"' % int(c) for c in coeffs)
            print('{"%s", %d, {%s}},' % (name, g, body))


if __name__ == "__main__":
    main()
