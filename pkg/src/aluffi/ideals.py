"""Ideals, symbolic matrices and Hilbert series.

An :class:`Ideal` is a generator list in a fixed ring with a lazily filled
cache of reduced Groebner bases, one per term order.  Monomial ideals skip
Buchberger entirely: their minimal generators already form the reduced basis.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from gmpy2 import mpq

from . import monomial as mono
from .groebner import GroebnerBasis, buchberger, reduce
from .linalg import Span, pack_poly, packed_addmul, unpack_poly
from .polyring import (
    ContextMismatch,
    DegRevLex,
    Elimination,
    MonomialOrder,
    Polynomial,
    RingContext,
    format_polynomial,
)


class UnitIdealError(ValueError):
    pass


# --------------------------------------------------------------------------
# ideals


class Ideal:
    """Ideal of ``ring`` generated by ``generators``."""

    def __init__(self, generators: Iterable[Polynomial], ring: RingContext | None = None):
        gens = []
        seen = set()
        for g in generators:
            if ring is None:
                ring = g.ring
            elif g.ring != ring:
                raise ContextMismatch(f"rings differ: [{g.ring}] vs [{ring}]")
            if not g:
                continue
            m = g.monic(DegRevLex())
            if m not in seen:
                seen.add(m)
                gens.append(g)
        if ring is None:
            raise ValueError("the ring of an empty ideal must be given")
        self.ring = ring
        self.generators = tuple(gens)
        self._cache: dict = {}
        self._lock = threading.Lock()

    # -- basic protocol ------------------------------------------------------

    def __len__(self):
        return len(self.generators)

    def __iter__(self) -> Iterator[Polynomial]:
        return iter(self.generators)

    def __repr__(self):
        return f"Ideal([{', '.join(str(g) for g in self.generators)}])"

    def __str__(self):
        return "(" + ", ".join(str(g) for g in self.generators) + ")"

    @property
    def is_monomial(self) -> bool:
        return all(g.is_monomial() for g in self.generators)

    def monomial_generators(self) -> list:
        """Minimal exponent tuples (monomial ideals only)."""
        if not self.is_monomial:
            raise ValueError("not a monomial ideal")
        return mono.minimalize(next(iter(g.coeffs)) for g in self.generators)

    def is_zero(self) -> bool:
        return not self.generators

    def is_homogeneous(self, weights: Sequence[int] | None = None) -> bool:
        return all(g.is_homogeneous(weights) for g in self.generators)

    # -- Groebner data -------------------------------------------------------

    def groebner(self, order: MonomialOrder | None = None) -> GroebnerBasis:
        order = order or self.ring.order
        with self._lock:
            gb = self._cache.get(order)
            if gb is None:
                if self.is_monomial:
                    key = order.key
                    elems = sorted((self.ring.monomial(m) for m in self.monomial_generators()),
                                   key=lambda g: key(g.leading_monomial(order)), reverse=True)
                    gb = GroebnerBasis(self.ring, order, elems)
                else:
                    gb = buchberger(self.generators, order, ring=self.ring)
                self._cache[order] = gb
        return gb

    def contains(self, f: Polynomial) -> bool:
        if f.ring != self.ring:
            raise ContextMismatch(f"rings differ: [{f.ring}] vs [{self.ring}]")
        if not f:
            return True
        if not self.generators:
            return False
        if self.is_monomial:
            gens = self.monomial_generators()
            return all(mono.is_member(e, gens) for e in f.coeffs)
        return self.groebner().contains(f)

    __contains__ = contains

    def issubset(self, other: "Ideal") -> bool:
        return all(other.contains(g) for g in self.generators)

    def __eq__(self, other):
        if not isinstance(other, Ideal):
            return NotImplemented
        if self.ring != other.ring:
            return False
        return self.issubset(other) and other.issubset(self)

    __hash__ = None

    def is_unit(self) -> bool:
        if any(g.is_constant() for g in self.generators):
            return True
        if self.is_monomial or not self.generators:
            return False
        return self.groebner().is_unit()

    def initial_ideal(self, order: MonomialOrder | None = None) -> list:
        gb = self.groebner(order)
        return mono.minimalize(gb.leading_monomials())

    # -- text format ---------------------------------------------------------

    def to_text(self) -> str:
        lines = [f"ring: {self.ring}"]
        lines += [format_polynomial(g) for g in self.generators]
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str, ring: RingContext | None = None) -> "Ideal":
        lines = [ln.strip() for ln in text.splitlines()]
        lines = [ln for ln in lines if ln and not ln.startswith("#")]
        if lines and lines[0].lower().startswith("ring:"):
            names = [s.strip() for s in lines[0].split(":", 1)[1].split(",") if s.strip()]
            ring = RingContext(tuple(names))
            lines = lines[1:]
        if ring is None:
            raise ValueError("ideal text needs a 'ring: x,y,...' header")
        return cls([ring.parse(ln) for ln in lines], ring)


def _check_same(A: Ideal, B: Ideal):
    if A.ring != B.ring:
        raise ContextMismatch(f"rings differ: [{A.ring}] vs [{B.ring}]")


def interreduce(polys: Iterable[Polynomial], ring: RingContext) -> list:
    """A linearly independent generating list for the same ideal.

    Monomials are minimalized under divisibility; other generators are
    replaced by a reduced echelon basis of their linear span.
    """
    polys = [p for p in polys if p]
    if polys and all(p.is_monomial() for p in polys):
        return [ring.monomial(m) for m in mono.minimalize(next(iter(p.coeffs)) for p in polys)]
    span = Span()
    for p in polys:
        span.add(p.coeffs)
    out = [Polynomial(ring, dict(v), _trusted=True) for v in span.basis()]
    out.sort(key=lambda g: (g.degree(), g.leading_monomial(DegRevLex())))
    return out


def ideal_sum(A: Ideal, B: Ideal) -> Ideal:
    _check_same(A, B)
    return Ideal(interreduce(list(A.generators) + list(B.generators), A.ring), A.ring)


def ideal_product(A: Ideal, B: Ideal) -> Ideal:
    _check_same(A, B)
    if A.is_monomial and B.is_monomial:
        gens = mono.product(A.monomial_generators(), B.monomial_generators())
        return Ideal([A.ring.monomial(m) for m in gens], A.ring)
    return Ideal(interreduce((f * g for f in A.generators for g in B.generators), A.ring), A.ring)


def ideal_power(A: Ideal, t: int) -> Ideal:
    if t < 1:
        raise ValueError("ideal powers start at t = 1")
    out = A
    for _ in range(t - 1):
        out = ideal_product(out, A)
    return out


def maximal_ideal(ring: RingContext) -> Ideal:
    return Ideal(ring.gens(), ring)


def m_power(ring: RingContext, r: int) -> Ideal:
    return Ideal([ring.monomial(m) for m in mono.monomials_of_degree(ring.num_vars, r)], ring)


def _fresh_name(base: str, taken: Iterable[str]) -> str:
    taken = set(taken)
    name = base
    k = 0
    while name in taken:
        k += 1
        name = f"{base}{k}"
    return name


def _extend_front(ring: RingContext, names: Sequence[str], order: MonomialOrder) -> RingContext:
    return RingContext(tuple(names) + ring.var_names, order)


def _lift(f: Polynomial, big: RingContext, shift: int) -> Polynomial:
    pad = (0,) * shift
    return Polynomial(big, {pad + e: c for e, c in f.coeffs.items()}, _trusted=True)


def intersect(A: Ideal, B: Ideal) -> Ideal:
    """A ∩ B via w*A + (1-w)*B and elimination of w."""
    _check_same(A, B)
    ring = A.ring
    if A.is_zero() or B.is_zero():
        return Ideal([], ring)
    if A.is_monomial and B.is_monomial:
        gens = mono.intersect(A.monomial_generators(), B.monomial_generators())
        return Ideal([ring.monomial(m) for m in gens], ring)
    w = _fresh_name("w", ring.var_names)
    big = _extend_front(ring, [w], Elimination(1))
    wv = big.var(0)
    gens = [wv * _lift(a, big, 1) for a in A.generators]
    gens += [(1 - wv) * _lift(b, big, 1) for b in B.generators]
    gb = buchberger(gens, big.order, ring=big)
    out = [Polynomial(ring, {e[1:]: c for e, c in g.coeffs.items()}, _trusted=True)
           for g in gb if not any(e[0] for e in g.coeffs)]
    return Ideal(out, ring)


def divide_exact(g: Polynomial, f: Polynomial) -> Polynomial:
    nf, (q,) = reduce(g, [f])
    if nf:
        raise ArithmeticError(f"{f} does not divide {g}")
    return q


def colon(A: Ideal, f: Polynomial) -> Ideal:
    """(A : f) = (A ∩ (f)) / f."""
    if not f:
        raise ValueError("colon by the zero polynomial")
    if f.ring != A.ring:
        raise ContextMismatch(f"rings differ: [{f.ring}] vs [{A.ring}]")
    if A.is_monomial and f.is_monomial():
        e = next(iter(f.coeffs))
        return Ideal([A.ring.monomial(m) for m in mono.colon(A.monomial_generators(), e)], A.ring)
    inter = intersect(A, Ideal([f], A.ring))
    return Ideal([divide_exact(g, f) for g in inter.generators], A.ring)


def eliminate(A: Ideal, k: int) -> Ideal:
    """A ∩ Q[x_{k+1}, ..., x_n], returned as an ideal of that subring."""
    n = A.ring.num_vars
    if not 0 <= k <= n:
        raise ValueError(f"cannot eliminate {k} of {n} variables")
    if k == 0:
        return A
    if k == n:
        raise ValueError("eliminating every variable leaves no ring")
    sub = RingContext(A.ring.var_names[k:], DegRevLex())
    if A.is_zero():
        return Ideal([], sub)
    gb = A.groebner(Elimination(k))
    out = [Polynomial(sub, {e[k:]: c for e, c in g.coeffs.items()}, _trusted=True)
           for g in gb if not any(any(e[:k]) for e in g.coeffs)]
    return Ideal(out, sub)


def codimension(A: Ideal) -> int:
    """Height of A, read off the initial ideal as a minimum vertex cover."""
    if A.is_unit():
        raise UnitIdealError("the unit ideal has no height")
    if A.is_zero():
        return 0
    return mono.height(A.initial_ideal(DegRevLex()))


def dimension(A: Ideal) -> int:
    return A.ring.num_vars - codimension(A)


def is_m_primary(A: Ideal) -> bool:
    """True iff S/A has Krull dimension zero (a pure power of each variable
    lies in the initial ideal)."""
    if A.is_zero():
        return False
    lead = A.initial_ideal(DegRevLex())
    return mono.has_pure_powers(lead, A.ring.num_vars)


def equals_m_power(A: Ideal, r: int) -> bool:
    """A == m^r: every degree-r monomial is in A and every generator is in m^r."""
    if r < 1:
        raise ValueError("r must be positive")
    if any(min(sum(e) for e in g.coeffs) < r for g in A.generators):
        return False
    ring = A.ring
    if A.is_monomial:
        # all generators have degree >= r, so only the degree-r ones can cover m^r
        low = {e for g in A.generators for e in g.coeffs if sum(e) == r}
        return len(low) == _binom(ring.num_vars + r - 1, r)
    if A.is_homogeneous():
        # linear algebra in degree r suffices: A_r must be everything
        span = Span(g.coeffs for g in A.generators if g.degree() == r)
        return len(span) == _binom(ring.num_vars + r - 1, r)
    gb = A.groebner()
    return all(gb.contains(ring.monomial(m)) for m in mono.monomials_of_degree(ring.num_vars, r))


def _binom(n: int, k: int) -> int:
    from math import comb
    return comb(n, k)


# --------------------------------------------------------------------------
# Hilbert series


def _num_eval_at_one(num: Sequence[int]) -> int:
    return sum(num)


def _divide_one_minus_v(num: Sequence[int]) -> list:
    # num = (1 - v) q  ->  q_k = sum_{i<=k} num_i
    q = []
    acc = 0
    for c in num[:-1]:
        acc += c
        q.append(acc)
    return q or [0]


@dataclass(frozen=True)
class HilbertSeries:
    """numerator(v) / (1 - v)^denominator_exponent, kept in canonical form."""

    numerator: tuple
    denominator_exponent: int

    def __post_init__(self):
        num = [int(c) for c in self.numerator]
        while len(num) > 1 and num[-1] == 0:
            num.pop()
        if not num:
            num = [0]
        e = int(self.denominator_exponent)
        if e < 0:
            raise ValueError("negative denominator exponent")
        while e > 0 and any(num) and _num_eval_at_one(num) == 0:
            num = _divide_one_minus_v(num)
            while len(num) > 1 and num[-1] == 0:
                num.pop()
            e -= 1
        if not any(num):
            num, e = [0], 0
        object.__setattr__(self, "numerator", tuple(num))
        object.__setattr__(self, "denominator_exponent", e)

    def coefficients(self, up_to: int) -> list:
        """Dimensions in degrees 0..up_to."""
        out = [0] * (up_to + 1)
        for i, c in enumerate(self.numerator):
            if i > up_to:
                break
            out[i] += c
        for _ in range(self.denominator_exponent):
            acc = 0
            for d in range(up_to + 1):
                acc += out[d]
                out[d] = acc
        return out

    def __sub__(self, other: "HilbertSeries") -> "HilbertSeries":
        e = max(self.denominator_exponent, other.denominator_exponent)
        a = _times_one_minus_v(list(self.numerator), e - self.denominator_exponent)
        b = _times_one_minus_v(list(other.numerator), e - other.denominator_exponent)
        n = max(len(a), len(b))
        a += [0] * (n - len(a))
        b += [0] * (n - len(b))
        return HilbertSeries(tuple(x - y for x, y in zip(a, b)), e)

    def __str__(self):
        return f"({_format_univariate(self.numerator)})/(1-v)^{self.denominator_exponent}"

    @classmethod
    def parse(cls, text: str) -> "HilbertSeries":
        from .polyring import make_ring
        text = text.strip()
        num_text, _, den = text.rpartition("/")
        den = den.strip()
        if not den.startswith("(1-v)^"):
            raise ValueError(f"bad Hilbert series {text!r}")
        e = int(den[len("(1-v)^"):])
        ring = make_ring("v")
        p = ring.parse(num_text)
        num = [0] * (p.degree() + 1 if p else 1)
        for ex, c in p.coeffs.items():
            num[ex[0]] = int(c)
        return cls(tuple(num), e)


def _times_one_minus_v(num: list, k: int) -> list:
    for _ in range(k):
        num = [a - b for a, b in zip(num + [0], [0] + num)]
    return num


def _format_univariate(num: Sequence[int]) -> str:
    parts = []
    for i, c in enumerate(num):
        if not c:
            continue
        mag = abs(c)
        if i == 0:
            body = str(mag)
        else:
            mon = "v" if i == 1 else f"v^{i}"
            body = mon if mag == 1 else f"{mag}*{mon}"
        if not parts:
            parts.append(body if c > 0 else "-" + body)
        else:
            parts.append(("+ " if c > 0 else "- ") + body)
    return " ".join(parts) if parts else "0"


def hilbert_series(A: Ideal) -> HilbertSeries:
    """Hilbert series of S/A for a standard-graded homogeneous ideal."""
    if not A.is_homogeneous():
        raise ValueError("hilbert_series needs a homogeneous ideal")
    n = A.ring.num_vars
    lead = A.initial_ideal(DegRevLex()) if not A.is_zero() else []
    return HilbertSeries(tuple(mono.hilbert_numerator(lead, n)), n)


def graded_dimensions(A: Ideal, up_to: int) -> list:
    """dim_Q (S/A)_d for d = 0..up_to by counting standard monomials."""
    n = A.ring.num_vars
    lead = A.initial_ideal(DegRevLex()) if not A.is_zero() else []
    return [len(mono.standard_monomials(lead, n, d)) for d in range(up_to + 1)]


# --------------------------------------------------------------------------
# matrices and minors


class SymbolicMatrix:
    """A rectangular grid of polynomials over one ring."""

    def __init__(self, entries: Sequence[Sequence[Polynomial]], ring: RingContext | None = None):
        rows = [list(r) for r in entries]
        if not rows or not rows[0]:
            raise ValueError("a matrix needs at least one row and one column")
        width = len(rows[0])
        if any(len(r) != width for r in rows):
            raise ValueError("ragged matrix")
        ring = ring or rows[0][0].ring
        for r in rows:
            for e in r:
                if e.ring != ring:
                    raise ContextMismatch("matrix entries live in different rings")
        self.ring = ring
        self.entries = tuple(tuple(r) for r in rows)

    @property
    def rows(self) -> int:
        return len(self.entries)

    @property
    def cols(self) -> int:
        return len(self.entries[0])

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def transpose(self) -> "SymbolicMatrix":
        return SymbolicMatrix(list(zip(*self.entries)), self.ring)

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> "SymbolicMatrix":
        return SymbolicMatrix([[self.entries[i][j] for j in cols] for i in rows], self.ring)

    def hstack(self, other: "SymbolicMatrix") -> "SymbolicMatrix":
        if other.rows != self.rows:
            raise ValueError("row counts differ")
        return SymbolicMatrix([a + b for a, b in zip(self.entries, other.entries)], self.ring)

    def det(self) -> Polynomial:
        if self.rows != self.cols:
            raise ValueError("determinant of a non-square matrix")
        found = list(iter_minors(self, self.rows))
        return found[0][2] if found else self.ring.zero()

    def __eq__(self, other):
        return isinstance(other, SymbolicMatrix) and self.entries == other.entries

    __hash__ = None

    def __str__(self):
        return "[" + "; ".join(" ".join(str(e) for e in r) for r in self.entries) + "]"


def iter_minors(M: SymbolicMatrix, r: int) -> Iterator[tuple]:
    """Yield ``(rows, cols, minor)`` for every nonzero r x r minor.

    Minors are built column by column: a k-minor on columns C and rows R
    feeds every (k+1)-minor obtained by appending a later column c and a row
    i outside R (Laplace expansion along the last column).  Only nonzero
    minors are stored, which keeps sparse matrices cheap.
    """
    if not 1 <= r <= min(M.rows, M.cols):
        raise ValueError(f"minor size {r} out of range for a {M.rows}x{M.cols} matrix")
    ring = M.ring
    n = ring.num_vars
    cols = []
    for j in range(M.cols):
        cols.append([(i, pack_poly(M.entries[i][j].coeffs)) for i in range(M.rows) if M.entries[i][j]])
    level: dict = {((), ()): {0: 1}}
    for k in range(r):
        nxt: dict = {}
        for (R, C), d in level.items():
            start = C[-1] + 1 if C else 0
            # leave room for the remaining columns
            for c in range(start, M.cols - (r - k - 1)):
                Cn = C + (c,)
                for i, entry in cols[c]:
                    if i in R:
                        continue
                    pos = sum(1 for x in R if x < i)
                    Rn = tuple(sorted(R + (i,)))
                    sign = -1 if (pos + k) % 2 else 1
                    key = (Rn, Cn)
                    acc = nxt.get(key)
                    if acc is None:
                        acc = nxt[key] = {}
                    packed_addmul(acc, entry, d, sign)
        level = {k2: v for k2, v in nxt.items() if v}
    for (R, C) in sorted(level):
        yield R, C, Polynomial(ring, unpack_poly(level[(R, C)], n), _trusted=True)


def minors(M: SymbolicMatrix, r: int) -> list:
    """All nonzero r x r minors, ordered by (rows, cols)."""
    return [p for _, _, p in iter_minors(M, r)]


def jacobian_matrix(gens: Sequence[Polynomial]) -> SymbolicMatrix:
    """n x s matrix with entry (i, j) = d f_j / d x_i (rows are variables)."""
    gens = list(gens)
    if not gens:
        raise ValueError("jacobian of an empty list")
    ring = gens[0].ring
    return SymbolicMatrix([[f.derivative(i) for f in gens] for i in range(ring.num_vars)], ring)


def minor_ideal(M: SymbolicMatrix, r: int) -> Ideal:
    return Ideal(interreduce(minors(M, r), M.ring), M.ring)


def jacobian_ideal(J: Ideal) -> Ideal:
    """(J, I_r(Θ)) with r the height of J and Θ the Jacobian of J's generators."""
    if J.is_zero():
        raise ValueError("the zero ideal has no Jacobian ideal")
    r = codimension(J)
    theta = jacobian_matrix(J.generators)
    if r > min(theta.rows, theta.cols):
        raise ValueError("height exceeds the Jacobian size")
    return ideal_sum(J, jacobian_minor_ideal(J, r))


def jacobian_minor_ideal(J: Ideal, r: int) -> Ideal:
    """I_r(Θ) for the Jacobian Θ of J's generators."""
    if J.is_homogeneous() and not J.is_monomial:
        return Ideal(jacobian_minor_span(J, r), J.ring)
    return minor_ideal(jacobian_matrix(J.generators), r)


def jacobian_minor_span(J: Ideal, r: int) -> list:
    """Basis of the span of the r-minors of J's Jacobian, built per
    multidegree of the finest grading of J (homogeneous J only)."""
    from .graded import Grading, graded_minor_span

    ring = J.ring
    n = ring.num_vars
    grading = Grading.finest(J.generators, n)
    theta = jacobian_matrix(J.generators)
    rows = [grading.of(tuple(1 if k == i else 0 for k in range(n))) for i in range(n)]
    cols = [grading.of_poly(f) for f in J.generators]
    return graded_minor_span(theta.entries, r, rows, cols, grading)


# --------------------------------------------------------------------------
# Rees algebras


def rees_ring(ring: RingContext, m: int) -> RingContext:
    base = "T"
    names = [f"{base}{i}" for i in range(1, m + 1)]
    while set(names) & set(ring.var_names):
        base = "_" + base
        names = [f"{base}{i}" for i in range(1, m + 1)]
    return RingContext(ring.var_names + tuple(names), DegRevLex())


def rees_ideal(A: Ideal, modulo: Ideal | None = None) -> Ideal:
    """Defining ideal of the Rees algebra of (A + modulo)/modulo over R/modulo.

    The result lives in R[T_1, ..., T_m], one T per generator of A in order,
    and contains the generators of ``modulo``.
    """
    ring = A.ring
    if modulo is not None:
        _check_same(A, modulo)
    m = len(A.generators)
    target = rees_ring(ring, m)
    n = ring.num_vars
    u = _fresh_name("u", target.var_names)
    big = RingContext((u,) + target.var_names, Elimination(1))
    uv = big.var(0)
    gens = []
    for i, f in enumerate(A.generators):
        gens.append(big.var(1 + n + i) - uv * _lift_into(f, big, 1, n + m))
    if modulo is not None:
        gens += [_lift_into(g, big, 1, n + m) for g in modulo.generators]
    gb = buchberger(gens, big.order, ring=big)
    out = [Polynomial(target, {e[1:]: c for e, c in g.coeffs.items()}, _trusted=True)
           for g in gb if not any(e[0] for e in g.coeffs)]
    return Ideal(out, target)


def _lift_into(f: Polynomial, big: RingContext, front: int, width: int) -> Polynomial:
    n = f.ring.num_vars
    pad_back = (0,) * (width - n)
    pad_front = (0,) * front
    return Polynomial(big, {pad_front + e + pad_back: c for e, c in f.coeffs.items()}, _trusted=True)


def t_degree(f: Polynomial, n: int) -> int:
    """Degree in the variables after the first ``n`` (the T variables)."""
    degs = {sum(e[n:]) for e in f.coeffs}
    if len(degs) != 1:
        raise ValueError(f"{f} is not homogeneous in the T variables")
    return degs.pop()


def relation_type(J: Ideal, I: Ideal) -> int:
    """Relation type of I/J: the largest T-degree needed to generate the
    defining ideal of its Rees algebra over R/J."""
    _check_same(J, I)
    if not J.issubset(I):
        raise ValueError("J is not contained in I")
    n = I.ring.num_vars
    rees = rees_ideal(I, modulo=J)
    target = rees.ring
    graded: dict = {}
    for g in rees.generators:
        graded.setdefault(t_degree(g, n), []).append(g)
    degs = sorted(graded)
    base = [_lift_into(g, target, 0, target.num_vars) for g in J.generators]
    low = list(base) + graded.get(0, []) + graded.get(1, [])
    N = 1
    for d in degs:
        if d <= 1:
            continue
        sub = Ideal(low, target)
        candidates = sorted(graded[d], key=lambda g: (g.degree(), g.leading_monomial(DegRevLex())))
        if not all(sub.contains(g) for g in candidates):
            N = d
        low = low + graded[d]
    return N


__all__ = [
    "Ideal",
    "UnitIdealError",
    "HilbertSeries",
    "SymbolicMatrix",
    "ideal_sum",
    "ideal_product",
    "ideal_power",
    "intersect",
    "colon",
    "eliminate",
    "codimension",
    "dimension",
    "hilbert_series",
    "graded_dimensions",
    "jacobian_matrix",
    "minors",
    "iter_minors",
    "minor_ideal",
    "jacobian_ideal",
    "jacobian_minor_ideal",
    "jacobian_minor_span",
    "is_m_primary",
    "equals_m_power",
    "rees_ring",
    "rees_ideal",
    "t_degree",
    "relation_type",
    "maximal_ideal",
    "m_power",
    "interreduce",
    "divide_exact",
]
