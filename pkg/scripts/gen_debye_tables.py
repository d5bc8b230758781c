"""Regenerate the Debye polynomial coefficient table embedded in specfun.

The uniform large-order expansion of the modified Bessel pair uses the
polynomials u_k(t) defined by u_0 = 1 and the recurrence

    u_{k+1}(t) = t^2 (1 - t^2) u_k'(t) / 2
                 + (1/8) * integral_0^t (1 - 5 s^2) u_k(s) ds .

Each u_k is t^k times an even polynomial in t; the table in
``coaxcasimir.specfun`` stores those even-polynomial coefficients as
floats.  Run this script to re-derive them exactly with sympy and print
the table in the embedded format:

    python scripts/gen_debye_tables.py [K_MAX]
"""

import sys

import sympy as sp


def debye_polynomials(k_max: int):
    t, s = sp.symbols("t s")
    u = sp.Integer(1)
    polys = [u]
    for _ in range(k_max):
        u = (
            t**2 * (1 - t**2) * sp.diff(u, t) / 2
            + sp.integrate((1 - 5 * s**2) * u.subs(t, s), (s, 0, t)) / 8
        )
        u = sp.expand(u)
        polys.append(u)
    return t, polys


def coefficient_rows(k_max: int):
    """Rows C[k][j] with u_k(t) = t**k * sum_j C[k][j] * t**(2 j)."""
    t, polys = debye_polynomials(k_max)
    rows = []
    for k, poly in enumerate(polys):
        p = sp.Poly(sp.expand(poly / t**k) if k else poly, t)
        coeffs = {}
        for (power,), coeff in p.terms():
            assert power % 2 == 0, "u_k / t^k must be even in t"
            coeffs[power // 2] = coeff
        row = [float(coeffs.get(j, 0)) for j in range(max(coeffs) + 1)]
        rows.append(row)
    return rows


def main() -> None:
    k_max = int(sys.argv[1]) if len(sys.argv) > 1 else 8
    rows = coefficient_rows(k_max)
    print("_UK = (")
    for row in rows:
        body = ", ".join(repr(c) for c in row)
        print(f"    ({body}{',' if len(row) == 1 else ''}),")
    print(")")


if __name__ == "__main__":
    main()
