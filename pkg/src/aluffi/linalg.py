"""Exact sparse linear algebra on polynomials viewed as coefficient vectors.

A vector is a dict ``monomial -> coefficient``.  :class:`Span` keeps a fully
reduced row echelon basis whose pivots are the largest monomial of each row
under plain tuple comparison, which is all that linear bookkeeping needs.
"""

from __future__ import annotations

from gmpy2 import mpq


class Span:
    """A subspace of the monomial vector space, in reduced row echelon form."""

    __slots__ = ("rows",)

    def __init__(self, vectors=()):
        self.rows: dict = {}  # pivot monomial -> row with row[pivot] == 1
        for v in vectors:
            self.add(v)

    def __len__(self):
        return len(self.rows)

    def reduce(self, v: dict) -> dict:
        """Remainder of ``v`` modulo the span (a fresh dict)."""
        out = dict(v)
        rows = self.rows
        hits = [m for m in v if m in rows]
        for p in hits:
            c = out.get(p)
            if not c:
                continue
            for m, a in rows[p].items():
                x = out.get(m, 0) - c * a
                if x:
                    out[m] = x
                else:
                    out.pop(m, None)
        return out

    def contains(self, v: dict) -> bool:
        return not self.reduce(v)

    def add(self, v: dict) -> bool:
        """Insert ``v``; return True when the dimension grew."""
        w = self.reduce(v)
        if not w:
            return False
        p = max(w)
        inv = 1 / mpq(w[p])
        w = {m: a * inv for m, a in w.items()}
        for q, row in self.rows.items():
            c = row.get(p)
            if c:
                for m, a in w.items():
                    x = row.get(m, 0) - c * a
                    if x:
                        row[m] = x
                    else:
                        row.pop(m, None)
        self.rows[p] = w
        return True

    def basis(self) -> list:
        return [self.rows[p] for p in sorted(self.rows, reverse=True)]

    def intersection(self, other: "Span") -> "Span":
        """Zassenhaus intersection of two spans."""
        if not self.rows or not other.rows:
            return Span()
        # Zassenhaus: rows (u | u) and (v | 0); tag 1 marks the left block,
        # which wins pivot selection, so rows living purely in the right block
        # span the intersection
        big = Span()
        for v in self.basis():
            row = {(1, m): a for m, a in v.items()}
            row.update({(0, m): a for m, a in v.items()})
            big.add(row)
        for v in other.basis():
            big.add({(1, m): a for m, a in v.items()})
        out = Span()
        for row in big.rows.values():
            if all(k[0] == 0 for k in row):
                out.add({k[1]: a for k, a in row.items()})
        return out


# --------------------------------------------------------------------------
# packed polynomials: exponent tuples folded into one integer so that
# multiplying monomials is a single addition (no carries while every
# exponent stays below 2**PACK_BITS)

PACK_BITS = 12


def pack(e) -> int:
    k = 0
    for i, a in enumerate(e):
        k |= a << (PACK_BITS * i)
    return k


def unpack(k: int, n: int) -> tuple:
    mask = (1 << PACK_BITS) - 1
    return tuple((k >> (PACK_BITS * i)) & mask for i in range(n))


def _plain(c):
    # integral rationals become ints, which multiply much faster
    if isinstance(c, int):
        return c
    den = getattr(c, "denominator", None)
    if den == 1:
        return int(c.numerator)
    return c


def pack_poly(p: dict) -> dict:
    return {pack(e): _plain(c) for e, c in p.items()}


def unpack_poly(p: dict, n: int) -> dict:
    return {unpack(k, n): mpq(c) for k, c in p.items()}


def packed_addmul(acc: dict, a: dict, b: dict, sign: int = 1):
    """acc += sign * a * b on packed polynomials."""
    get = acc.get
    for ka, ca in a.items():
        ca = sign * ca
        for kb, cb in b.items():
            k = ka + kb
            v = get(k, 0) + ca * cb
            if v:
                acc[k] = v
            else:
                del acc[k]
