"""Independent reference computations (sympy) for cross-checks."""

import sympy

from aluffi.polyring import Polynomial, RingContext


def to_sympy(f: Polynomial, symbols):
    expr = 0
    for e, c in f.coeffs.items():
        term = sympy.Rational(int(c.numerator), int(c.denominator))
        for s, a in zip(symbols, e):
            term *= s**a
        expr += term
    return expr


def from_sympy(expr, ring: RingContext) -> Polynomial:
    return ring.parse(str(sympy.expand(expr)))


def sympy_groebner(gens, ring: RingContext, order: str) -> set:
    """Reduced Groebner basis from sympy; order is 'lex' or 'grevlex'."""
    symbols = sympy.symbols(ring.var_names)
    G = sympy.groebner([to_sympy(g, symbols) for g in gens], *symbols, order=order, domain=sympy.QQ)
    return {from_sympy(g, ring) for g in G.exprs}


def _rank(rows) -> int:
    """Rank of sparse rows (dicts column -> Fraction) by plain elimination."""
    from fractions import Fraction

    pivots: dict = {}
    rank = 0
    for row in rows:
        row = {k: Fraction(int(v.numerator), int(v.denominator)) for k, v in row.items() if v}
        while row:
            p = max(row)
            if p not in pivots:
                c = row[p]
                pivots[p] = {k: v / c for k, v in row.items()}
                rank += 1
                break
            c = row[p]
            for k, v in pivots[p].items():
                w = row.get(k, 0) - c * v
                if w:
                    row[k] = w
                else:
                    row.pop(k, None)
    return rank


def brute_force_dimensions(gens, ring: RingContext, up_to: int) -> list:
    """dim_k (R/A)_d for d = 0..up_to, from the span of monomial multiples
    of the (homogeneous) generators."""
    from itertools import combinations_with_replacement

    n = ring.num_vars

    def monomials(d):
        out = []
        for combo in combinations_with_replacement(range(n), d):
            e = [0] * n
            for i in combo:
                e[i] += 1
            out.append(tuple(e))
        return out

    dims = []
    for d in range(up_to + 1):
        rows = []
        for g in gens:
            k = d - g.degree()
            if k < 0:
                continue
            for m in monomials(k):
                rows.append({tuple(a + b for a, b in zip(e, m)): c for e, c in g.coeffs.items()})
        dims.append(len(monomials(d)) - _rank(rows))
    return dims
