"""Combinatorics of monomial ideals on exponent tuples.

Everything here works on plain tuples; the :mod:`aluffi.ideals` layer decides
when an ideal is monomial and routes through these functions.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations
from typing import Iterable, Sequence


def divides(a, b) -> bool:
    for x, y in zip(a, b):
        if x > y:
            return False
    return True


def lcm(a, b) -> tuple:
    return tuple([x if x > y else y for x, y in zip(a, b)])


def mul(a, b) -> tuple:
    return tuple([x + y for x, y in zip(a, b)])


def support(a) -> frozenset:
    return frozenset(i for i, x in enumerate(a) if x)


def minimalize(monos: Iterable[tuple]) -> list:
    """Minimal generators, sorted by degree then lexicographically."""
    ms = sorted(set(monos), key=lambda m: (sum(m), m))
    out: list = []
    for m in ms:
        if not any(divides(g, m) for g in out):
            out.append(m)
    return out


def is_member(m, gens: Sequence[tuple]) -> bool:
    return any(divides(g, m) for g in gens)


def intersect(A: Sequence[tuple], B: Sequence[tuple]) -> list:
    return minimalize(lcm(a, b) for a in A for b in B)


def product(A: Sequence[tuple], B: Sequence[tuple]) -> list:
    return minimalize(mul(a, b) for a in A for b in B)


def power(A: Sequence[tuple], t: int) -> list:
    if t < 1:
        raise ValueError("power must be positive")
    A = minimalize(A)
    out = A
    for _ in range(t - 1):
        out = product(out, A)
    return out


def colon(A: Sequence[tuple], m: tuple) -> list:
    return minimalize(tuple([x - y if x > y else 0 for x, y in zip(a, m)]) for a in A)


def min_cover(edges: Iterable[frozenset], n: int) -> tuple:
    """Minimum transversal of a hypergraph on vertices ``0..n-1``.

    Branch and bound: branch on the vertices of a smallest uncovered edge.
    Returns ``(size, cover)``.
    """
    edges = [frozenset(e) for e in edges]
    if any(not e for e in edges):
        raise ValueError("empty edge cannot be covered (unit ideal)")
    # drop edges that contain another edge
    edges = sorted(set(edges), key=len)
    minimal: list = []
    for e in edges:
        if not any(f <= e for f in minimal):
            minimal.append(e)
    # greedy upper bound
    greedy: set = set()
    for e in minimal:
        if not e & greedy:
            greedy.add(min(e, key=lambda v: -sum(v in f for f in minimal)))
    best = [len(greedy), frozenset(greedy)]

    def lower_bound(rest: list) -> int:
        # size of a greedily built family of pairwise disjoint edges
        used: set = set()
        count = 0
        for e in rest:
            if not e & used:
                used |= e
                count += 1
        return count

    def search(chosen: frozenset, rest: list):
        if not rest:
            if len(chosen) < best[0]:
                best[0], best[1] = len(chosen), chosen
            return
        if len(chosen) + lower_bound(rest) >= best[0]:
            return
        e = min(rest, key=len)
        for v in sorted(e):
            search(chosen | {v}, [f for f in rest if v not in f])

    search(frozenset(), minimal)
    return best[0], best[1]


def height(gens: Sequence[tuple]) -> int:
    """Height of a proper monomial ideal = minimum cover of the generator supports."""
    if not gens:
        return 0
    n = len(gens[0])
    return min_cover([support(g) for g in gens], n)[0]


def dimension(gens: Sequence[tuple], n: int) -> int:
    return n - height(gens) if gens else n


def has_pure_powers(gens: Sequence[tuple], n: int) -> bool:
    found = [False] * n
    for g in gens:
        s = support(g)
        if len(s) == 1:
            found[next(iter(s))] = True
    return all(found)


# --------------------------------------------------------------------------
# Hilbert series numerators


def _poly_add(p: list, q: list) -> list:
    out = [0] * max(len(p), len(q))
    for i, c in enumerate(p):
        out[i] += c
    for i, c in enumerate(q):
        out[i] += c
    return out


def _poly_shift(p: list, k: int) -> list:
    return [0] * k + list(p)


def _poly_mul(p: list, q: list) -> list:
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                out[i + j] += a * b
    return out


def hilbert_numerator(gens: Sequence[tuple], n: int) -> list:
    """Numerator N with HS(S/M) = N(v) / (1-v)^n, coefficients low degree first.

    Pivot recursion N(M) = N(M + (x_i)) + v * N(M : x_i), with the pivot a
    variable occurring in the most non-pure generators.
    """
    gens = tuple(minimalize(gens))

    @lru_cache(maxsize=None)
    def rec(G: tuple) -> tuple:
        if not G:
            return (1,)
        # base case: pairwise coprime generators
        mixed = [g for g in G if sum(1 for x in g if x) > 1]
        coprime = True
        seen = 0
        for g in G:
            s = 0
            for i, x in enumerate(g):
                if x:
                    s |= 1 << i
            if s & seen:
                coprime = False
                break
            seen |= s
        if coprime:
            out = [1]
            for g in G:
                d = sum(g)
                f = [0] * (d + 1)
                f[0], f[d] = 1, -1
                out = _poly_mul(out, f)
            return tuple(out)
        counts = [0] * n
        for g in mixed or G:
            for i, x in enumerate(g):
                if x:
                    counts[i] += 1
        i = max(range(n), key=lambda k: counts[k])
        e = [0] * n
        e[i] = 1
        e = tuple(e)
        plus = tuple(minimalize([g for g in G if not g[i]] + [e]))
        col = tuple(minimalize(colon(G, e)))
        return tuple(_poly_add(rec(plus), _poly_shift(rec(col), 1)))

    out = list(rec(gens))
    while len(out) > 1 and out[-1] == 0:
        out.pop()
    return out


def standard_monomials(gens: Sequence[tuple], n: int, degree: int) -> list:
    """Monomials of the given degree outside the ideal (brute force)."""
    return [m for m in monomials_of_degree(n, degree) if not is_member(m, gens)]


def monomials_of_degree(n: int, d: int) -> list:
    """All exponent tuples of total degree ``d`` in ``n`` variables."""
    out = []
    for bars in combinations(range(d + n - 1), n - 1):
        prev = -1
        e = []
        for b in bars:
            e.append(b - prev - 1)
            prev = b
        e.append(d + n - 1 - prev - 1)
        out.append(tuple(e))
    return out
