"""Exact multivariate polynomials over the rationals.

Monomials are dense exponent tuples; a polynomial is an immutable mapping
from exponent tuples to nonzero ``gmpy2.mpq`` coefficients.  Term order is a
property of the ring, but every order-sensitive method accepts an explicit
order so one ring can host Groebner bases for several orders.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

from gmpy2 import mpq

Monomial = tuple  # tuple[int, ...] of length num_vars


class ContextMismatch(ValueError):
    """Raised when polynomials from different rings are combined."""


class PolynomialSyntaxError(ValueError):
    pass


# --------------------------------------------------------------------------
# monomial orders


class MonomialOrder:
    """Base class.  Subclasses provide ``key``: larger key means larger monomial."""

    name = "order"

    def key(self, exps: Monomial):
        raise NotImplementedError

    def compare(self, u: Monomial, v: Monomial) -> int:
        if len(u) != len(v):
            raise ValueError(f"exponent length mismatch: {len(u)} != {len(v)}")
        ku, kv = self.key(u), self.key(v)
        return (ku > kv) - (ku < kv)


@dataclass(frozen=True)
class Lex(MonomialOrder):
    name = "lex"

    def key(self, exps):
        return exps

    def __str__(self):
        return "lex"


@dataclass(frozen=True)
class DegRevLex(MonomialOrder):
    name = "degrevlex"

    def key(self, exps):
        return (sum(exps), tuple([-e for e in reversed(exps)]))

    def __str__(self):
        return "degrevlex"


@dataclass(frozen=True)
class Elimination(MonomialOrder):
    """Block order: the first ``k`` variables are compared first (by ``inner``),
    ties broken by ``inner`` on the remaining variables."""

    k: int
    inner: MonomialOrder = field(default_factory=DegRevLex)
    name = "elimination"

    def key(self, exps):
        k = self.k
        return (self.inner.key(exps[:k]), self.inner.key(exps[k:]))

    def __str__(self):
        return f"elimination({self.k},{self.inner})"


def compare(order: MonomialOrder, u: Monomial, v: Monomial) -> int:
    """Return 1, 0 or -1 as ``u`` is greater than, equal to or less than ``v``."""
    return order.compare(tuple(u), tuple(v))


def parse_order(text: str) -> MonomialOrder:
    text = text.strip()
    if text == "lex":
        return Lex()
    if text in ("degrevlex", "grevlex"):
        return DegRevLex()
    m = re.fullmatch(r"elimination\((\d+)(?:,(.*))?\)", text)
    if m:
        inner = parse_order(m.group(2)) if m.group(2) else DegRevLex()
        return Elimination(int(m.group(1)), inner)
    raise ValueError(f"unknown monomial order {text!r}")


# --------------------------------------------------------------------------
# rings


_IDENT = re.compile(r"[A-Za-z_][A-Za-z0-9_]*\Z")


@dataclass(frozen=True)
class RingContext:
    """The ring Q[x_1, ..., x_n] together with a default term order."""

    var_names: tuple
    order: MonomialOrder = field(default_factory=DegRevLex)

    def __post_init__(self):
        names = tuple(self.var_names)
        object.__setattr__(self, "var_names", names)
        if not names:
            raise ValueError("a ring needs at least one variable")
        if len(set(names)) != len(names):
            raise ValueError(f"duplicate variable names in {names}")
        for name in names:
            if not _IDENT.match(name):
                raise ValueError(f"invalid variable name {name!r}")

    @property
    def num_vars(self) -> int:
        return len(self.var_names)

    def index(self, name: str) -> int:
        try:
            return self.var_names.index(name)
        except ValueError:
            raise KeyError(f"no variable named {name!r} in ring {self}") from None

    def with_order(self, order: MonomialOrder) -> "RingContext":
        return RingContext(self.var_names, order)

    def zero(self) -> "Polynomial":
        return Polynomial(self, {})

    def one(self) -> "Polynomial":
        return self.constant(1)

    def constant(self, c) -> "Polynomial":
        return Polynomial(self, {(0,) * self.num_vars: mpq(c)})

    def monomial(self, exps: Sequence[int], coeff=1) -> "Polynomial":
        exps = tuple(exps)
        if len(exps) != self.num_vars:
            raise ValueError(f"exponent vector of length {len(exps)} in a ring of {self.num_vars} variables")
        if any(e < 0 for e in exps):
            raise ValueError("negative exponent")
        return Polynomial(self, {exps: mpq(coeff)})

    def var(self, i) -> "Polynomial":
        if isinstance(i, str):
            i = self.index(i)
        exps = [0] * self.num_vars
        exps[i] = 1
        return Polynomial(self, {tuple(exps): mpq(1)})

    def gens(self) -> list:
        return [self.var(i) for i in range(self.num_vars)]

    def parse(self, text: str) -> "Polynomial":
        return _Parser(self, text).parse()

    def __str__(self):
        return ",".join(self.var_names)


# --------------------------------------------------------------------------
# polynomials


class Polynomial:
    """Immutable polynomial; ``terms`` lists (coefficient, exponents) in descending order."""

    __slots__ = ("ring", "_terms", "_hash")

    def __init__(self, ring: RingContext, terms: dict, _trusted: bool = False):
        self.ring = ring
        if _trusted:
            self._terms = terms
        else:
            n = ring.num_vars
            clean = {}
            for exps, c in terms.items():
                exps = tuple(exps)
                if len(exps) != n:
                    raise ValueError(f"exponent vector {exps} does not match {n} variables")
                c = mpq(c)
                if c:
                    clean[exps] = clean.get(exps, 0) + c
            self._terms = {e: c for e, c in clean.items() if c}
        self._hash = None

    # -- inspection ----------------------------------------------------------

    @property
    def coeffs(self) -> dict:
        """Read-only view of the exponent -> coefficient mapping (do not mutate)."""
        return self._terms

    def terms(self, order: MonomialOrder | None = None) -> list:
        key = (order or self.ring.order).key
        items = sorted(self._terms.items(), key=lambda t: key(t[0]), reverse=True)
        return [(c, e) for e, c in items]

    def monomials(self, order: MonomialOrder | None = None) -> list:
        return [e for _, e in self.terms(order)]

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def __len__(self):
        return len(self._terms)

    def is_constant(self) -> bool:
        return not self._terms or (len(self._terms) == 1 and not any(next(iter(self._terms))))

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    def degree(self) -> int:
        if not self._terms:
            return -1
        return max(sum(e) for e in self._terms)

    def weighted_degree(self, weights: Sequence[int]) -> int:
        return max(sum(w * a for w, a in zip(weights, e)) for e in self._terms)

    def is_homogeneous(self, weights: Sequence[int] | None = None) -> bool:
        if not self._terms:
            return True
        if weights is None:
            degs = {sum(e) for e in self._terms}
        else:
            degs = {sum(w * a for w, a in zip(weights, e)) for e in self._terms}
        return len(degs) == 1

    def leading_term(self, order: MonomialOrder | None = None) -> tuple:
        if not self._terms:
            raise ValueError("the zero polynomial has no leading term")
        key = (order or self.ring.order).key
        e = max(self._terms, key=key)
        return self._terms[e], e

    def leading_monomial(self, order: MonomialOrder | None = None) -> Monomial:
        return self.leading_term(order)[1]

    def leading_coefficient(self, order: MonomialOrder | None = None):
        return self.leading_term(order)[0]

    def variables(self) -> list:
        """Indices of variables that occur in some term."""
        used = [False] * self.ring.num_vars
        for e in self._terms:
            for i, a in enumerate(e):
                if a:
                    used[i] = True
        return [i for i, u in enumerate(used) if u]

    def constant_coefficient(self):
        return self._terms.get((0,) * self.ring.num_vars, mpq(0))

    # -- arithmetic ----------------------------------------------------------

    def _check(self, other: "Polynomial"):
        if other.ring is not self.ring and other.ring != self.ring:
            raise ContextMismatch(f"rings differ: [{self.ring}] vs [{other.ring}]")

    def _coerce(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            self._check(other)
            return other
        return self.ring.constant(other)

    def __add__(self, other):
        other = self._coerce(other)
        out = dict(self._terms)
        for e, c in other._terms.items():
            v = out.get(e)
            if v is None:
                out[e] = c
            else:
                v += c
                if v:
                    out[e] = v
                else:
                    del out[e]
        return Polynomial(self.ring, out, _trusted=True)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(self.ring, {e: -c for e, c in self._terms.items()}, _trusted=True)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, Polynomial):
            c = mpq(other)
            if not c:
                return self.ring.zero()
            return Polynomial(self.ring, {e: v * c for e, v in self._terms.items()}, _trusted=True)
        self._check(other)
        if len(self._terms) > len(other._terms):
            a, b = other._terms, self._terms
        else:
            a, b = self._terms, other._terms
        out = {}
        for ea, ca in a.items():
            for eb, cb in b.items():
                e = tuple([x + y for x, y in zip(ea, eb)])
                v = out.get(e)
                out[e] = ca * cb if v is None else v + ca * cb
        return Polynomial(self.ring, {e: c for e, c in out.items() if c}, _trusted=True)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        result = self.ring.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def mul_term(self, coeff, exps: Monomial) -> "Polynomial":
        coeff = mpq(coeff)
        if not coeff:
            return self.ring.zero()
        return Polynomial(
            self.ring,
            {tuple([x + y for x, y in zip(e, exps)]): c * coeff for e, c in self._terms.items()},
            _trusted=True,
        )

    def monic(self, order: MonomialOrder | None = None) -> "Polynomial":
        if not self._terms:
            return self
        lc = self.leading_coefficient(order)
        if lc == 1:
            return self
        inv = 1 / lc
        return Polynomial(self.ring, {e: c * inv for e, c in self._terms.items()}, _trusted=True)

    def primitive(self) -> "Polynomial":
        """Scale to coprime integer coefficients with positive leading coefficient."""
        if not self._terms:
            return self
        from math import gcd, lcm

        den = lcm(*(int(c.denominator) for c in self._terms.values()))
        nums = [int(c * den) for c in self._terms.values()]
        g = gcd(*nums)
        scale = mpq(den, g)
        if self.leading_coefficient() < 0:
            scale = -scale
        return self * scale

    def derivative(self, i) -> "Polynomial":
        if isinstance(i, str):
            i = self.ring.index(i)
        if not 0 <= i < self.ring.num_vars:
            raise IndexError(f"variable index {i} out of range for {self.ring.num_vars} variables")
        out = {}
        for e, c in self._terms.items():
            a = e[i]
            if a:
                d = list(e)
                d[i] = a - 1
                out[tuple(d)] = c * a
        return Polynomial(self.ring, out, _trusted=True)

    def evaluate(self, point: Sequence) -> mpq:
        total = mpq(0)
        pt = [mpq(p) for p in point]
        for e, c in self._terms.items():
            v = c
            for p, a in zip(pt, e):
                if a:
                    v *= p**a
            total += v
        return total

    def substitute(self, images: Sequence["Polynomial"], ring: RingContext | None = None) -> "Polynomial":
        """Ring map sending variable i to ``images[i]`` (all in ``ring``)."""
        ring = ring or images[0].ring
        result = ring.zero()
        cache: dict = {}
        for e, c in self._terms.items():
            term = ring.constant(c)
            for i, a in enumerate(e):
                if a:
                    p = cache.get((i, a))
                    if p is None:
                        p = images[i] ** a
                        cache[(i, a)] = p
                    term = term * p
            result = result + term
        return result

    def remap(self, ring: RingContext, positions: Sequence[int]) -> "Polynomial":
        """Move variable i to index ``positions[i]`` of ``ring`` (monomial embedding)."""
        n = ring.num_vars
        out = {}
        for e, c in self._terms.items():
            d = [0] * n
            for i, a in enumerate(e):
                if a:
                    d[positions[i]] += a
            out[tuple(d)] = c
        return Polynomial(ring, out, _trusted=True)

    # -- comparison, hashing, printing ---------------------------------------

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.ring == other.ring and self._terms == other._terms
        try:
            return self == self.ring.constant(other)
        except (TypeError, ValueError):
            return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __str__(self):
        return format_polynomial(self)

    def __repr__(self):
        return f"Polynomial({format_polynomial(self)!r})"

    def __iter__(self) -> Iterator:
        return iter(self.terms())


def poly_add(f: Polynomial, g: Polynomial) -> Polynomial:
    return f + g


def poly_mul(f: Polynomial, g: Polynomial) -> Polynomial:
    return f * g


def partial_derivative(f: Polynomial, i) -> Polynomial:
    return f.derivative(i)


def normalize(f: Polynomial) -> Polynomial:
    """Rebuild ``f`` through the checking constructor (a no-op on valid input)."""
    return Polynomial(f.ring, dict(f.coeffs))


# --------------------------------------------------------------------------
# text syntax


def _format_coeff(c) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def format_monomial(exps: Monomial, names: Sequence[str]) -> str:
    parts = []
    for name, a in zip(names, exps):
        if a == 1:
            parts.append(name)
        elif a:
            parts.append(f"{name}^{a}")
    return "*".join(parts) if parts else "1"


def format_polynomial(f: Polynomial, order: MonomialOrder | None = None) -> str:
    names = f.ring.var_names
    out = []
    for c, e in f.terms(order):
        neg = c < 0
        a = -c if neg else c
        if any(e):
            mono = format_monomial(e, names)
            body = mono if a == 1 else f"{_format_coeff(a)}*{mono}"
        else:
            body = _format_coeff(a)
        if not out:
            out.append(f"-{body}" if neg else body)
        else:
            out.append(f" - {body}" if neg else f" + {body}")
    return "".join(out) if out else "0"


_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z0-9_]*)|(\*\*|[-+*/^()]))")


class _Parser:
    def __init__(self, ring: RingContext, text: str):
        self.ring = ring
        self.text = text
        self.tokens = self._tokenize(text)
        self.pos = 0

    def _tokenize(self, text):
        tokens = []
        i = 0
        text = text.rstrip()
        while i < len(text):
            m = _TOKEN.match(text, i)
            if not m or m.end() == i:
                raise PolynomialSyntaxError(f"unexpected character at {i} in {text!r}")
            num, ident, op = m.groups()
            if num is not None:
                tokens.append(("num", num))
            elif ident is not None:
                tokens.append(("id", ident))
            else:
                tokens.append(("op", "^" if op == "**" else op))
            i = m.end()
        return tokens

    def peek(self):
        return self.tokens[self.pos] if self.pos < len(self.tokens) else (None, None)

    def take(self):
        tok = self.peek()
        self.pos += 1
        return tok

    def parse(self) -> Polynomial:
        if not self.tokens:
            raise PolynomialSyntaxError("empty polynomial")
        f = self.expr()
        if self.pos != len(self.tokens):
            raise PolynomialSyntaxError(f"trailing input {self.peek()[1]!r} in {self.text!r}")
        return f

    def expr(self) -> Polynomial:
        sign = 1
        kind, val = self.peek()
        if kind == "op" and val in "+-":
            self.take()
            sign = -1 if val == "-" else 1
        f = self.term() * sign
        while True:
            kind, val = self.peek()
            if kind == "op" and val in "+-":
                self.take()
                g = self.term()
                f = f + g if val == "+" else f - g
            else:
                return f

    def term(self) -> Polynomial:
        f = self.factor()
        while True:
            kind, val = self.peek()
            if kind == "op" and val == "*":
                self.take()
                f = f * self.factor()
            elif kind == "op" and val == "/":
                self.take()
                d = self.factor()
                if not d.is_constant() or d.is_zero():
                    raise PolynomialSyntaxError(f"can only divide by a nonzero number in {self.text!r}")
                f = f * (1 / d.constant_coefficient())
            elif kind in ("num", "id") or (kind == "op" and val == "("):
                f = f * self.factor()
            else:
                return f

    def factor(self) -> Polynomial:
        f = self.atom()
        kind, val = self.peek()
        if kind == "op" and val == "^":
            self.take()
            kind, val = self.take()
            if kind != "num":
                raise PolynomialSyntaxError(f"exponent must be a non-negative integer in {self.text!r}")
            f = f ** int(val)
        return f

    def atom(self) -> Polynomial:
        kind, val = self.take()
        if kind == "num":
            return self.ring.constant(mpq(val))
        if kind == "id":
            return self._identifier(val)
        if kind == "op" and val == "(":
            f = self.expr()
            kind, val = self.take()
            if (kind, val) != ("op", ")"):
                raise PolynomialSyntaxError(f"missing ')' in {self.text!r}")
            return f
        raise PolynomialSyntaxError(f"unexpected token {val!r} in {self.text!r}")

    def _identifier(self, name: str) -> Polynomial:
        names = self.ring.var_names
        if name in names:
            return self.ring.var(name)
        # juxtaposed variable names such as "xy" or "x2y"
        split = _split_names(name, set(names))
        if split is None:
            raise PolynomialSyntaxError(f"unknown variable {name!r} (ring variables: {','.join(names)})")
        f = self.ring.one()
        for part in split:
            f = f * self.ring.var(part)
        return f


def _split_names(word: str, names: set) -> list | None:
    best: dict = {len(word): []}
    for i in range(len(word) - 1, -1, -1):
        for j in range(len(word), i, -1):
            if word[i:j] in names and j in best:
                best[i] = [word[i:j]] + best[j]
                break
    return best.get(0)


def parse_polynomial(ring: RingContext, text: str) -> Polynomial:
    return ring.parse(text)


def make_ring(names: Iterable[str] | str, order: MonomialOrder | None = None) -> RingContext:
    if isinstance(names, str):
        names = [n.strip() for n in names.replace(" ", ",").split(",") if n.strip()]
    return RingContext(tuple(names), order or DegRevLex())
