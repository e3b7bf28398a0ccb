"""Degree-by-degree linear algebra for homogeneous ideals.

Homogeneous ideals are split along the finest integer grading that keeps
every generator homogeneous.  A graded piece of an ideal, a product or a
power is then a small exact :class:`~aluffi.linalg.Span` inside one
multidegree component, so truncated questions ("is J ∩ I^t equal to
J·I^(t-1) in degree d?") become rank computations instead of Groebner bases.
"""

from __future__ import annotations

import operator
from fractions import Fraction
from math import lcm as int_lcm
from typing import Iterable, Optional, Sequence

from . import monomial as mono
from .linalg import Span, pack_poly, packed_addmul, unpack_poly
from .polyring import Polynomial


def nullspace(rows: Sequence[Sequence[int]], n: int) -> list:
    """Integer basis of {w in Q^n : r . w = 0 for every row r}."""
    mat = [[Fraction(x) for x in r] for r in rows if any(r)]
    pivots = []
    rank = 0
    for col in range(n):
        piv = None
        for i in range(rank, len(mat)):
            if mat[i][col]:
                piv = i
                break
        if piv is None:
            continue
        mat[rank], mat[piv] = mat[piv], mat[rank]
        inv = 1 / mat[rank][col]
        mat[rank] = [x * inv for x in mat[rank]]
        for i in range(len(mat)):
            if i != rank and mat[i][col]:
                f = mat[i][col]
                mat[i] = [a - f * b for a, b in zip(mat[i], mat[rank])]
        pivots.append(col)
        rank += 1
        if rank == len(mat):
            break
    free = [c for c in range(n) if c not in pivots]
    basis = []
    for fcol in free:
        v = [Fraction(0)] * n
        v[fcol] = Fraction(1)
        for i, pcol in enumerate(pivots):
            v[pcol] = -mat[i][fcol]
        den = 1
        for x in v:
            den = int_lcm(den, x.denominator)
        basis.append(tuple(int(x * den) for x in v))
    return basis


class Grading:
    """Multidegree map e -> (deg e, w_1 . e, ..., w_k . e)."""

    def __init__(self, weights: Sequence[Sequence[int]], n: int):
        self.n = n
        self.weights = tuple(tuple(w) for w in weights)

    @classmethod
    def finest(cls, polys: Iterable[Polynomial], n: int) -> "Grading":
        rows = []
        seen = set()
        for p in polys:
            terms = list(p.coeffs)
            base = terms[0]
            for e in terms[1:]:
                d = tuple(a - b for a, b in zip(e, base))
                if d not in seen:
                    seen.add(d)
                    rows.append(d)
        return cls(nullspace(rows, n), n)

    def of(self, e) -> tuple:
        return (sum(e),) + tuple(sum(w * a for w, a in zip(ws, e)) for ws in self.weights)

    def of_poly(self, p: Polynomial) -> tuple:
        return self.of(next(iter(p.coeffs)))


def _sub(a: tuple, b: tuple) -> tuple:
    return tuple(map(operator.sub, a, b))


def _add(a: tuple, b: tuple) -> tuple:
    return tuple(map(operator.add, a, b))


def _group(gens: Sequence[Polynomial], grading: Grading) -> dict:
    """Generators bucketed by degree, then multidegree: {d: {md: [coeff dicts]}}."""
    groups: dict = {}
    for g in gens:
        if g:
            md = grading.of_poly(g)
            groups.setdefault(md[0], {}).setdefault(md, []).append(dict(g.coeffs))
    return groups


def _pairs(md: tuple, left: dict, right) -> list:
    """Pairs (a, b) with a in ``left``, b in ``right`` and a + b = md, walking
    the smaller of the two sets."""
    if len(left) <= len(right):
        return [(a, b) for a in left for b in (_sub(md, a),) if b in right]
    return [(a, b) for b in right for a in (_sub(md, b),) if a in left]


def _shift(v: dict, m: tuple) -> dict:
    return {tuple([x + y for x, y in zip(e, m)]): c for e, c in v.items()}


def _mul(a: dict, b: dict) -> dict:
    out: dict = {}
    for ea, ca in a.items():
        for eb, cb in b.items():
            e = tuple([x + y for x, y in zip(ea, eb)])
            v = out.get(e, 0) + ca * cb
            if v:
                out[e] = v
            else:
                out.pop(e, None)
    return out


def _fill(vectors, full: int) -> Span:
    """Span of ``vectors``, stopping once it is the whole component."""
    sp = Span()
    if full:
        for v in vectors:
            sp.add(v)
            if len(sp) == full:
                break
    return sp


class MonomialIndex:
    """Monomials of each degree grouped by multidegree (built lazily)."""

    def __init__(self, grading: Grading):
        self.grading = grading
        self._by_degree: dict = {}

    def table(self, d: int) -> dict:
        if d < 0:
            return {}
        table = self._by_degree.get(d)
        if table is None:
            table = {}
            for m in mono.monomials_of_degree(self.grading.n, d):
                table.setdefault(self.grading.of(m), []).append(m)
            self._by_degree[d] = table
        return table

    def component(self, md: tuple) -> list:
        return self.table(md[0]).get(md, [])

    def multidegrees(self, d: int) -> list:
        return list(self.table(d))


class GradedIdeal:
    """Graded pieces of the ideal generated by homogeneous ``gens``."""

    def __init__(self, gens: Sequence[Polynomial], grading: Grading, index: MonomialIndex):
        self.grading = grading
        self.index = index
        self.groups = _group(gens, grading)
        self._cache: dict = {}
        self._support: dict = {}

    def support(self, d: int) -> set:
        """Multidegrees of degree d where the ideal can be nonzero."""
        sup = self._support.get(d)
        if sup is None:
            sup = set()
            for gd, G in self.groups.items():
                if gd <= d:
                    T = self.index.table(d - gd)
                    sup.update(_add(a, b) for a in G for b in T)
            self._support[d] = sup
        return sup

    def _vectors(self, md: tuple):
        d = md[0]
        for gd, G in self.groups.items():
            if gd > d:
                continue
            T = self.index.table(d - gd)
            for gmd, mmd in _pairs(md, G, T):
                for m in T[mmd]:
                    for g in G[gmd]:
                        yield _shift(g, m)

    def component(self, md: tuple) -> Span:
        sp = self._cache.get(md)
        if sp is None:
            sp = _fill(self._vectors(md), len(self.index.component(md)))
            self._cache[md] = sp
        return sp


class GradedProduct:
    """Graded pieces of A·B where A is given by generators and B by pieces."""

    def __init__(self, gens: Sequence[Polynomial], other, grading: Grading):
        self.grading = grading
        self.groups = _group(gens, grading)
        self.other = other
        self.index = other.index
        self._cache: dict = {}
        self._support: dict = {}

    def support(self, d: int) -> set:
        sup = self._support.get(d)
        if sup is None:
            sup = set()
            for gd, G in self.groups.items():
                if gd <= d:
                    inner = self.other.support(d - gd)
                    sup.update(_add(a, b) for a in G for b in inner)
            self._support[d] = sup
        return sup

    def _vectors(self, md: tuple):
        d = md[0]
        for gd, G in self.groups.items():
            if gd > d:
                continue
            for gmd, omd in _pairs(md, G, self.other.support(d - gd)):
                vs = self.other.component(omd).basis()
                for g in G[gmd]:
                    for v in vs:
                        yield _mul(g, v)

    def component(self, md: tuple) -> Span:
        sp = self._cache.get(md)
        if sp is None:
            sp = _fill(self._vectors(md), len(self.index.component(md)))
            self._cache[md] = sp
        return sp


def graded_power(gens: Sequence[Polynomial], t: int, grading: Grading, index: MonomialIndex):
    """A chain providing graded pieces of (gens)^t."""
    out = GradedIdeal(gens, grading, index)
    for _ in range(t - 1):
        out = GradedProduct(gens, out, grading)
    return out


class GradedPair:
    """Shared graded data for a pair J ⊆ I of homogeneous ideals.

    ``K`` lists the generators of I outside J; then
    J ∩ I^t = J·I^(t-1) + (J ∩ K^t) and the Valabrega-Valla piece in a
    multidegree is the part of J ∩ K^t not already in J·I^(t-1).
    """

    def __init__(self, J_gens: Sequence[Polynomial], I_gens: Sequence[Polynomial], K_gens: Sequence[Polynomial]):
        polys = list(J_gens) + list(I_gens)
        self.n = polys[0].ring.num_vars
        self.ring = polys[0].ring
        self.grading = Grading.finest(polys, self.n)
        self.index = MonomialIndex(self.grading)
        self.J_gens = list(J_gens)
        self.I_gens = list(I_gens)
        self.K_gens = list(K_gens)
        self.J = GradedIdeal(self.J_gens, self.grading, self.index)
        self._powers_I: dict = {}
        self._powers_K: dict = {}
        self._low: dict = {}

    def power_I(self, t: int):
        if t not in self._powers_I:
            self._powers_I[t] = graded_power(self.I_gens, t, self.grading, self.index)
        return self._powers_I[t]

    def power_K(self, t: int):
        if t not in self._powers_K:
            self._powers_K[t] = graded_power(self.K_gens, t, self.grading, self.index)
        return self._powers_K[t]

    def low(self, t: int):
        """Graded pieces of J·I^(t-1)."""
        if t not in self._low:
            self._low[t] = GradedProduct(self.J_gens, self.power_I(t - 1), self.grading)
        return self._low[t]

    def k_multidegrees(self, t: int, d: int) -> list:
        """Multidegrees of degree d where K^t can be nonzero."""
        return sorted(self.power_K(t).support(d))

    def witnesses_in_degree(self, t: int, d: int, limit: Optional[int] = None) -> list:
        """Basis vectors of (J ∩ K^t)_d that are not in (J·I^(t-1))_d, reduced
        modulo the latter."""
        found = []
        # small components first: they are cheap and often hold a witness
        mds = sorted(self.k_multidegrees(t, d), key=lambda md: (len(self.index.component(md)), md))
        for md in mds:
            V = self.power_K(t).component(md)
            if not len(V):
                continue
            U = self.J.component(md)
            if not len(U):
                continue
            X = U.intersection(V)
            if not len(X):
                continue
            L = self.low(t).component(md)
            for x in X.basis():
                r = L.reduce(x)
                if r:
                    found.append(Polynomial(self.ring, r, _trusted=True))
                    if limit is not None and len(found) >= limit:
                        return found
        return found


# --------------------------------------------------------------------------
# span of the r-minors of a graded matrix


def _det(entries: list, rows: Sequence[int], cols: Sequence[int], memo: Optional[dict] = None) -> dict:
    """Determinant of the submatrix on ``rows`` x ``cols`` (packed entries)
    by Laplace expansion along rows.  Sub-determinants are memoized on the
    unused columns; share one ``memo`` across column sets of a fixed row set."""
    if memo is None:
        memo = {}
    r = len(rows)

    def rec(k: int, free: tuple) -> dict:
        if k == r - 1:
            row = entries[rows[k]]
            a = row[free[0]]
            return a if a else {}
        got = memo.get(free)
        if got is not None:
            return got
        out: dict = {}
        row = entries[rows[k]]
        for pos, c in enumerate(free):
            a = row[c]
            if not a:
                continue
            sub = rec(k + 1, free[:pos] + free[pos + 1:])
            if sub:
                packed_addmul(out, a, sub, -1 if pos % 2 else 1)
        memo[free] = out
        return out

    return rec(0, tuple(cols))


def graded_minor_span(entries: Sequence[Sequence[Polynomial]], r: int, row_degrees: Sequence[tuple],
                      col_degrees: Sequence[tuple], grading: Grading) -> list:
    """A basis of the linear span of the r-minors of a graded matrix.

    Entry (i, j) must be homogeneous of multidegree col_degrees[j] -
    row_degrees[i] (or zero), so the minor on rows R and columns C has
    multidegree sum(col) - sum(row).  Minors are generated per multidegree
    component of the target degree and a component is abandoned as soon as
    its span is everything, which is what makes "I_r = m^r" cheap to reach.
    """
    from itertools import combinations

    nrows, ncols = len(entries), len(entries[0])
    raw = [[pack_poly(e.coeffs) if e else None for e in row] for row in entries]
    n = grading.n
    ring = next(e.ring for row in entries for e in row if e)
    by_sum: dict = {}
    for C in combinations(range(ncols), r):
        s = col_degrees[C[0]]
        for j in C[1:]:
            s = _add(s, col_degrees[j])
        by_sum.setdefault(s, []).append(C)
    # candidate target components: any sum(col) - sum(row)
    spans: dict = {}
    capacity: dict = {}
    index = MonomialIndex(grading)
    row_sets = list(combinations(range(nrows), r))
    row_sums = []
    for R in row_sets:
        s = row_degrees[R[0]]
        for i in R[1:]:
            s = _add(s, row_degrees[i])
        row_sums.append(s)
    for R, sR in zip(row_sets, row_sums):
        memo: dict = {}
        for csum, Cs in by_sum.items():
            md = _sub(csum, sR)
            cap = capacity.get(md)
            if cap is None:
                cap = capacity[md] = len(index.component(md)) if md[0] >= 0 else 0
                spans[md] = Span()
            sp = spans[md]
            if len(sp) >= cap:
                continue
            for C in Cs:
                # a zero column inside the block kills the minor
                if any(all(raw[i][j] is None for i in R) for j in C):
                    continue
                d = _det(raw, R, C, memo)
                if d and sp.add(d) and len(sp) >= cap:
                    break
    out = []
    for md in sorted(spans):
        for v in spans[md].basis():
            out.append(Polynomial(ring, unpack_poly(v, n), _trusted=True))
    return out
