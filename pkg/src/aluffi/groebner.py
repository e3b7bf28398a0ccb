"""Multivariate division and Buchberger's algorithm over Q."""

from __future__ import annotations

import heapq
from dataclasses import dataclass, field
from typing import Sequence

from gmpy2 import mpq

from .polyring import (
    ContextMismatch,
    DegRevLex,
    Elimination,
    Lex,
    MonomialOrder,
    Polynomial,
    RingContext,
)


def heap_key(order: MonomialOrder):
    """Key whose *ascending* order is the descending term order (for heapq)."""
    if isinstance(order, DegRevLex):
        return lambda e: (-sum(e), e[::-1])
    if isinstance(order, Lex):
        return lambda e: tuple([-a for a in e])
    if isinstance(order, Elimination):
        k = order.k
        inner = heap_key(order.inner)
        return lambda e: (inner(e[:k]), inner(e[k:]))
    key = order.key

    class _Rev:
        __slots__ = ("k",)

        def __init__(self, e):
            self.k = key(e)

        def __lt__(self, other):
            return self.k > other.k

        def __eq__(self, other):
            return self.k == other.k

    return _Rev


def _divides(a, b) -> bool:
    for x, y in zip(a, b):
        if x > y:
            return False
    return True


def _lcm(a, b):
    return tuple([x if x > y else y for x, y in zip(a, b)])


def _coprime(a, b) -> bool:
    for x, y in zip(a, b):
        if x and y:
            return False
    return True


def _mask(e) -> int:
    m = 0
    for i, a in enumerate(e):
        if a:
            m |= 1 << i
    return m


class _Reducer:
    """Basis elements prepared for repeated division (leading data cached)."""

    def __init__(self, order: MonomialOrder):
        self.order = order
        self.key = order.key
        self.hkey = heap_key(order)
        self.lms: list = []
        self.masks: list = []
        self.tails: list = []  # list of list[(exps, coeff)] scaled by 1/lc
        self.active: list = []

    def add(self, poly: dict, active: bool = True) -> int:
        lm = max(poly, key=self.key)
        lc = poly[lm]
        inv = 1 / lc
        tail = [(e, c * inv) for e, c in poly.items() if e != lm]
        self.lms.append(lm)
        self.masks.append(_mask(lm))
        self.tails.append(tail)
        self.active.append(active)
        return len(self.lms) - 1

    def find(self, e, emask):
        lms, masks, active = self.lms, self.masks, self.active
        for i in range(len(lms)):
            if active[i] and not masks[i] & ~emask and _divides(lms[i], e):
                return i
        return -1

    def normal_form(self, p: dict, full: bool = True, quotients: list | None = None) -> dict:
        """Reduce ``p`` (consumed) modulo the active elements."""
        hkey = self.hkey
        heap = [(hkey(e), e) for e in p]
        heapq.heapify(heap)
        queued = set(p)
        rem = {}
        lms, tails = self.lms, self.tails
        while heap:
            _, e = heapq.heappop(heap)
            queued.discard(e)
            c = p.pop(e, None)
            if c is None:
                continue
            i = self.find(e, _mask(e))
            if i < 0:
                rem[e] = c
                if not full:
                    # the rest is already below the leading term
                    rem.update(p)
                    return rem
                continue
            lm = lms[i]
            shift = tuple([a - b for a, b in zip(e, lm)])
            if quotients is not None:
                q = quotients[i]
                q[shift] = q.get(shift, 0) + c
            for te, tc in tails[i]:
                m = tuple([a + b for a, b in zip(te, shift)])
                v = p.get(m)
                if v is None:
                    p[m] = -c * tc
                    if m not in queued:
                        queued.add(m)
                        heapq.heappush(heap, (hkey(m), m))
                else:
                    v -= c * tc
                    if v:
                        p[m] = v
                    else:
                        del p[m]
        return rem


@dataclass(frozen=True)
class GroebnerBasis:
    ring: RingContext
    order: MonomialOrder
    elements: tuple
    _lms: tuple = field(default=(), compare=False, repr=False)

    def __post_init__(self):
        object.__setattr__(self, "elements", tuple(self.elements))
        object.__setattr__(self, "_lms", tuple(g.leading_monomial(self.order) for g in self.elements))

    def __iter__(self):
        return iter(self.elements)

    def __len__(self):
        return len(self.elements)

    def leading_monomials(self) -> list:
        return list(self._lms)

    def _reducer(self) -> _Reducer:
        red = getattr(self, "_red", None)
        if red is None:
            red = _Reducer(self.order)
            for g in self.elements:
                red.add(dict(g.coeffs))
            object.__setattr__(self, "_red", red)
        return red

    def normal_form(self, f: Polynomial) -> Polynomial:
        if f.ring != self.ring:
            raise ContextMismatch(f"rings differ: [{f.ring}] vs [{self.ring}]")
        if not f or not self.elements:
            return f
        return Polynomial(self.ring, self._reducer().normal_form(dict(f.coeffs)), _trusted=True)

    def contains(self, f: Polynomial) -> bool:
        return not self.normal_form(f)

    def is_unit(self) -> bool:
        return any(not any(lm) for lm in self._lms)


def reduce(f: Polynomial, basis: Sequence[Polynomial], order: MonomialOrder | None = None):
    """Multivariate division of ``f`` by ``basis``.

    Returns ``(normal_form, quotients)`` with ``f == sum(q*g) + normal_form``.
    Divisors are tried in list order, as in the textbook algorithm.
    """
    order = order or f.ring.order
    for g in basis:
        if g.ring != f.ring:
            raise ContextMismatch(f"rings differ: [{f.ring}] vs [{g.ring}]")
        if not g:
            raise ValueError("zero polynomial in division basis")
    red = _Reducer(order)
    for g in basis:
        red.add(dict(g.coeffs))
    raw = [dict() for _ in basis]
    rem = red.normal_form(dict(f.coeffs), full=True, quotients=raw)
    quotients = []
    for g, q in zip(basis, raw):
        inv = 1 / g.leading_coefficient(order)
        quotients.append(Polynomial(f.ring, {e: c * inv for e, c in q.items() if c}))
    return Polynomial(f.ring, rem, _trusted=True), quotients


def _spoly(f: dict, g: dict, lmf, lmg, key) -> dict:
    lcm = _lcm(lmf, lmg)
    sf = tuple([a - b for a, b in zip(lcm, lmf)])
    sg = tuple([a - b for a, b in zip(lcm, lmg)])
    cf, cg = f[lmf], g[lmg]
    out = {}
    for e, c in f.items():
        out[tuple([a + b for a, b in zip(e, sf)])] = c / cf
    for e, c in g.items():
        m = tuple([a + b for a, b in zip(e, sg)])
        v = out.get(m, 0) - c / cg
        if v:
            out[m] = v
        else:
            out.pop(m, None)
    return out


def buchberger(gens: Sequence[Polynomial], order: MonomialOrder | None = None, ring: RingContext | None = None,
               max_degree: int | None = None) -> GroebnerBasis:
    """Reduced Groebner basis of the ideal generated by ``gens``.

    Pairs are processed by the normal strategy (smallest lcm degree first) with
    Gebauer-Moeller pruning.  ``max_degree`` truncates the computation: for
    homogeneous input the result is then a Groebner basis up to that degree.
    """
    gens = [g for g in gens if g]
    if ring is None:
        if not gens:
            raise ValueError("cannot infer the ring of an empty generator list")
        ring = gens[0].ring
    order = order or ring.order
    for g in gens:
        if g.ring != ring:
            raise ContextMismatch(f"rings differ: [{g.ring}] vs [{ring}]")
    if not gens:
        return GroebnerBasis(ring, order, ())

    key = order.key
    red = _Reducer(order)
    polys: list = []  # dict form, indices shared with red
    pairs: list = []  # heap of (deg(lcm), heapkey(lcm) reversed?, i, j)
    hkey = red.hkey

    def pair_entry(i, j):
        lcm = _lcm(red.lms[i], red.lms[j])
        # normal strategy: ascending degree, then ascending term order
        return (sum(lcm), _Asc(key(lcm)), i, j, lcm)

    def update(h: int):
        lmh = red.lms[h]
        current = [i for i in range(h) if red.active[i]]
        cand = [(i, _lcm(red.lms[i], lmh)) for i in current]
        # chain criterion among the new pairs (Gebauer-Moeller "M" and "F")
        keep = []
        for idx, (i, l) in enumerate(cand):
            coprime = _coprime(red.lms[i], lmh)
            redundant = False
            if not coprime:
                for jdx, (j, l2) in enumerate(cand):
                    if jdx != idx and l2 != l and _divides(l2, l):
                        redundant = True
                        break
            if not redundant:
                keep.append((i, l, coprime))
        # among equal lcms keep one, preferring a coprime representative
        by_lcm: dict = {}
        for i, l, coprime in keep:
            prev = by_lcm.get(l)
            if prev is None or (coprime and not prev[1]):
                by_lcm[l] = (i, coprime)
        new_pairs = [(i, l) for l, (i, coprime) in by_lcm.items() if not coprime]
        # prune old pairs (criterion "B")
        if pairs:
            survivors = []
            for entry in pairs:
                _, _, i, j, l = entry
                if _divides(lmh, l) and _lcm(red.lms[i], lmh) != l and _lcm(red.lms[j], lmh) != l:
                    continue
                survivors.append(entry)
            pairs[:] = survivors
            heapq.heapify(pairs)
        for i, l in new_pairs:
            heapq.heappush(pairs, (sum(l), _Asc(key(l)), i, h, l))
        # leading-monomial redundancy among basis elements
        for i in current:
            if _divides(lmh, red.lms[i]):
                red.active[i] = False

    # seed with interreduced generators, sorted ascending
    seed = sorted((dict(g.coeffs) for g in gens), key=lambda d: key(max(d, key=key)))
    for d in seed:
        nf = red.normal_form(dict(d), full=True)
        if not nf:
            continue
        h = red.add(nf)
        polys.append(nf)
        update(h)

    while pairs:
        deg, _, i, j, l = heapq.heappop(pairs)
        if max_degree is not None and deg > max_degree:
            continue
        s = _spoly(polys[i], polys[j], red.lms[i], red.lms[j], key)
        if not s:
            continue
        nf = red.normal_form(s, full=True)
        if not nf:
            continue
        h = red.add(nf)
        polys.append(nf)
        update(h)
        if not any(red.lms[h]):
            break  # unit ideal

    return GroebnerBasis(ring, order, _reduce_basis(ring, order, [polys[i] for i in range(len(polys)) if red.active[i]]))


class _Asc:
    """Wrap a key so that tuples compare by it in heaps."""

    __slots__ = ("k",)

    def __init__(self, k):
        self.k = k

    def __lt__(self, other):
        return self.k < other.k

    def __eq__(self, other):
        return self.k == other.k


def _reduce_basis(ring: RingContext, order: MonomialOrder, polys: list) -> list:
    key = order.key
    polys = [p for p in polys if p]
    lms = [max(p, key=key) for p in polys]
    if any(not any(lm) for lm in lms):
        return [ring.one()]
    # minimal basis
    keep = []
    for i, lm in enumerate(lms):
        if any(_divides(lms[j], lm) and (lms[j] != lm or j < i) for j in range(len(lms)) if j != i):
            continue
        keep.append(i)
    polys = [polys[i] for i in keep]
    out = []
    for i, p in enumerate(polys):
        red = _Reducer(order)
        for j, q in enumerate(polys):
            if j != i:
                red.add(q)
        lm = max(p, key=key)
        lc = p[lm]
        tail = {e: c for e, c in p.items() if e != lm}
        tail = red.normal_form(tail, full=True)
        inv = 1 / lc
        monic = {e: c * inv for e, c in tail.items()}
        monic[lm] = mpq(1)
        out.append(Polynomial(ring, monic, _trusted=True))
    out.sort(key=lambda g: key(g.leading_monomial(order)), reverse=True)
    return out


def ideal_member(f: Polynomial, gb: GroebnerBasis) -> bool:
    return gb.contains(f)


def leading_term_ideal(gb: GroebnerBasis) -> list:
    """Minimal monomial generators of the initial ideal (``gb`` is reduced)."""
    lms = gb.leading_monomials()
    return [m for m in lms if not any(o != m and _divides(o, m) for o in lms)]


def s_polynomial(f: Polynomial, g: Polynomial, order: MonomialOrder | None = None) -> Polynomial:
    order = order or f.ring.order
    key = order.key
    df, dg = dict(f.coeffs), dict(g.coeffs)
    return Polynomial(f.ring, _spoly(df, dg, max(df, key=key), max(dg, key=key), key), _trusted=True)


def is_groebner_basis(polys: Sequence[Polynomial], order: MonomialOrder | None = None) -> bool:
    """Buchberger's criterion, checked on every pair."""
    polys = [p for p in polys if p]
    if not polys:
        return True
    order = order or polys[0].ring.order
    for i in range(len(polys)):
        for j in range(i + 1, len(polys)):
            nf, _ = reduce(s_polynomial(polys[i], polys[j], order), polys, order)
            if nf:
                return False
    return True
