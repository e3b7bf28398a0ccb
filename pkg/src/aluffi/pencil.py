"""2 x n pencils of linear forms in Kronecker-Weierstrass block form.

A :class:`PencilSpec` lists nilpotent, Jordan and scroll blocks.  The module
builds the matrix, predicts the height of its 2-minor ideal and the
torsion-free verdict from the block list, and cross-checks both against the
Groebner machinery.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from gmpy2 import mpq

from .aluffi import AluffiVerdict, aluffi_torsion_free
from .ideals import (
    Ideal,
    SymbolicMatrix,
    codimension,
    colon,
    equals_m_power,
    ideal_sum,
    jacobian_minor_ideal,
    minor_ideal,
)
from .polyring import Polynomial, RingContext

NILPOTENT = "N"
JORDAN = "J"
SCROLL = "S"


@dataclass(frozen=True)
class Block:
    kind: str
    length: int
    eigenvalue: Optional[Fraction] = None

    def __post_init__(self):
        if self.kind not in (NILPOTENT, JORDAN, SCROLL):
            raise ValueError(f"unknown block kind {self.kind!r}")
        if self.length < 1:
            raise ValueError("block lengths are positive")
        if self.kind == JORDAN:
            if self.eigenvalue is None:
                raise ValueError("a Jordan block needs an eigenvalue")
            object.__setattr__(self, "eigenvalue", Fraction(self.eigenvalue))
        elif self.eigenvalue is not None:
            raise ValueError("only Jordan blocks carry an eigenvalue")

    @property
    def columns(self) -> int:
        return self.length + 1 if self.kind == NILPOTENT else self.length

    @property
    def num_vars(self) -> int:
        return self.length + 1 if self.kind == SCROLL else self.length

    def __str__(self):
        if self.kind == JORDAN:
            return f"J({self.length};{self.eigenvalue})"
        return f"{self.kind}({self.length})"


def Nilpotent(n: int) -> Block:
    return Block(NILPOTENT, n)


def Jordan(m: int, eigenvalue=0) -> Block:
    return Block(JORDAN, m, Fraction(eigenvalue))


def Scroll(l: int) -> Block:
    return Block(SCROLL, l)


_BLOCK_RE = re.compile(r"\s*([NJS])\(\s*(\d+)\s*(?:;\s*(-?\d+(?:/\d+)?)\s*)?\)\s*")


@dataclass(frozen=True)
class PencilSpec:
    blocks: tuple

    def __post_init__(self):
        object.__setattr__(self, "blocks", tuple(self.blocks))

    @property
    def columns(self) -> int:
        return sum(b.columns for b in self.blocks)

    @property
    def num_vars(self) -> int:
        return sum(b.num_vars for b in self.blocks)

    def of_kind(self, kind: str) -> list:
        return [b for b in self.blocks if b.kind == kind]

    def __str__(self):
        return " ".join(str(b) for b in self.blocks)

    @classmethod
    def parse(cls, text: str) -> "PencilSpec":
        """Parse ``N(2) J(2;0) S(3)``."""
        pos = 0
        blocks = []
        text = text.strip()
        while pos < len(text):
            m = _BLOCK_RE.match(text, pos)
            if not m:
                raise ValueError(f"cannot parse pencil spec at {text[pos:]!r}")
            kind, length, ev = m.group(1), int(m.group(2)), m.group(3)
            if kind == JORDAN:
                if ev is None:
                    raise ValueError("Jordan blocks need an eigenvalue: J(m;lambda)")
                blocks.append(Jordan(length, Fraction(ev)))
            else:
                if ev is not None:
                    raise ValueError(f"{kind} blocks take no eigenvalue")
                blocks.append(Block(kind, length))
            pos = m.end()
        if not blocks:
            raise ValueError("empty pencil spec")
        return cls(tuple(blocks))


def variable_names(spec: PencilSpec) -> list:
    """x{i}_{j} for nilpotent, y{i}_{j} for Jordan, z{i}_{j} for scroll blocks;
    i is the 1-based block position."""
    names = []
    for i, b in enumerate(spec.blocks, start=1):
        if b.kind == NILPOTENT:
            names += [f"x{i}_{j}" for j in range(1, b.length + 1)]
        elif b.kind == JORDAN:
            names += [f"y{i}_{j}" for j in range(1, b.length + 1)]
        else:
            names += [f"z{i}_{j}" for j in range(0, b.length + 1)]
    return names


def build_matrix(spec: PencilSpec) -> tuple:
    """The 2 x n matrix of the spec and its ring."""
    if not spec.blocks:
        raise ValueError("empty pencil spec")
    ring = RingContext(tuple(variable_names(spec)))
    zero = ring.zero()
    top: list = []
    bottom: list = []
    offset = 0
    for b in spec.blocks:
        v = [ring.var(offset + k) for k in range(b.num_vars)]
        if b.kind == NILPOTENT:
            top += v + [zero]
            bottom += [zero] + v
        elif b.kind == JORDAN:
            lam = mpq(b.eigenvalue.numerator, b.eigenvalue.denominator)
            top += v
            bottom += [v[0] * lam] + [v[k - 1] + v[k] * lam for k in range(1, b.length)]
        else:
            top += v[1:]
            bottom += v[:-1]
        offset += b.num_vars
    return SymbolicMatrix([top, bottom], ring), ring


def two_minor_ideal(M: SymbolicMatrix) -> Ideal:
    if M.rows != 2:
        raise ValueError("two_minor_ideal expects a 2-row matrix")
    if M.cols < 2:
        return Ideal([], M.ring)
    return minor_ideal(M, 2)


def spec_ideal(spec: PencilSpec) -> Ideal:
    M, _ = build_matrix(spec)
    return two_minor_ideal(M)


def gamma(spec: PencilSpec) -> int:
    """Largest number of Jordan blocks sharing one eigenvalue."""
    counts: dict = {}
    for b in spec.of_kind(JORDAN):
        counts[b.eigenvalue] = counts.get(b.eigenvalue, 0) + 1
    return max(counts.values(), default=0)


def predicted_height(spec: PencilSpec) -> int:
    n = sum(b.length for b in spec.of_kind(NILPOTENT))
    m = sum(b.length for b in spec.of_kind(JORDAN))
    l = sum(b.length for b in spec.of_kind(SCROLL))
    if spec.of_kind(JORDAN):
        return n + l + m - gamma(spec)
    if spec.of_kind(SCROLL):
        return n + l - 1
    return n


def predicted_atf(spec: PencilSpec) -> bool:
    """The block criterion: no Jordan block, or nilpotent blocks together
    with length-1 Jordan blocks only."""
    if predicted_height(spec) <= 1:
        raise ValueError("the block criterion needs height at least 2")
    jordan = spec.of_kind(JORDAN)
    if not jordan:
        return True
    return all(b.kind == NILPOTENT or (b.kind == JORDAN and b.length == 1) for b in spec.blocks)


@dataclass
class Theorem24Record:
    a: bool
    b: bool
    c: bool
    verdict: AluffiVerdict
    r: int

    @property
    def consistent(self) -> bool:
        return self.a == self.b == self.c


def verify_theorem24(spec: PencilSpec) -> Theorem24Record:
    """Compute the three conditions of the block theorem independently."""
    J = spec_ideal(spec)
    r = codimension(J)
    if r <= 1:
        raise ValueError("the block theorem needs height at least 2")
    Ir = jacobian_minor_ideal(J, r)
    a = equals_m_power(Ir, r)
    I = ideal_sum(J, Ir)
    verdict = aluffi_torsion_free(J, I, certify=True, min_t=2)
    return Theorem24Record(a=a, b=predicted_atf(spec), c=verdict.is_torsion_free, verdict=verdict, r=r)


# --------------------------------------------------------------------------
# Hankel matrices


def build_generalized_hankel(sizes: Sequence[int]) -> SymbolicMatrix:
    """Concatenate n x n Hankel blocks in disjoint variables.

    Block k uses variables h{k}_1 .. h{k}_{2n-1} with entry (i, j) equal to
    h{k}_{i+j+1} (0-based i, j).  A single block uses plain x1 .. x_{2n-1}.
    """
    sizes = list(sizes)
    if not sizes:
        raise ValueError("no Hankel blocks")
    if any(n < 2 for n in sizes):
        raise ValueError("Hankel blocks need size at least 2")
    if len(set(sizes)) != 1:
        raise ValueError("concatenated Hankel blocks must share the row count")
    n = sizes[0]
    if len(sizes) == 1:
        names = [f"x{i}" for i in range(1, 2 * n)]
    else:
        names = [f"h{k}_{i}" for k in range(1, len(sizes) + 1) for i in range(1, 2 * n)]
    ring = RingContext(tuple(names))
    rows = [[] for _ in range(n)]
    for k in range(len(sizes)):
        base = k * (2 * n - 1)
        for i in range(n):
            for j in range(n):
                rows[i].append(ring.var(base + i + j))
    return SymbolicMatrix(rows, ring)


def scroll_for_hankel(n: int) -> tuple:
    """The 2-row scroll matrix whose 2-minors match one n x n Hankel block
    after x_i -> z_{i-1}: columns (x_{j+1}, x_j) for j = 1 .. 2n-2."""
    ring = RingContext(tuple(f"x{i}" for i in range(1, 2 * n)))
    top = [ring.var(j) for j in range(1, 2 * n - 1)]
    bottom = [ring.var(j) for j in range(0, 2 * n - 2)]
    return SymbolicMatrix([top, bottom], ring), ring


# --------------------------------------------------------------------------
# colon lemma


def second_row_ideal(M: SymbolicMatrix) -> Ideal:
    used = set()
    for e in M.entries[1]:
        used.update(e.variables())
    ring = M.ring
    return Ideal([ring.var(i) for i in sorted(used)], ring)


def colon_variable(spec: PencilSpec) -> str:
    """First variable of the shortest zero-eigenvalue Jordan block."""
    best = None
    for i, b in enumerate(spec.blocks, start=1):
        if b.kind == JORDAN and b.eigenvalue == 0:
            if best is None or b.length < best[1]:
                best = (i, b.length)
    if best is None:
        raise ValueError("no zero-eigenvalue Jordan block")
    return f"y{best[0]}_1"


def check_colon_lemma(spec: PencilSpec) -> bool:
    M, ring = build_matrix(spec)
    y = ring.var(colon_variable(spec))
    return colon(two_minor_ideal(M), y) == second_row_ideal(M)


def check_colon_on_matrix(M: SymbolicMatrix, y: Polynomial) -> bool:
    return colon(two_minor_ideal(M), y) == second_row_ideal(M)


def colon_counterexample() -> tuple:
    """[y1 y2 w1 w2 w3; 0 y1 0 w1 w2] with the colon taken by w1, the first
    variable of the longer block; y2*w1 lies in the minors but y2 is not in
    the second row, so the equality fails."""
    ring = RingContext(("y1", "y2", "w1", "w2", "w3"))
    y1, y2, w1, w2, w3 = ring.gens()
    zero = ring.zero()
    M = SymbolicMatrix([[y1, y2, w1, w2, w3], [zero, y1, zero, w1, w2]], ring)
    return M, w1


# --------------------------------------------------------------------------
# the enumerated family


def block_family(max_columns: int = 6, eigenvalues=(0, 1, 2)) -> list:
    """Every spec with at most ``max_columns`` columns, as a multiset of
    blocks listed nilpotent first, then Jordan, then scroll."""
    kinds = [Nilpotent(n) for n in range(1, max_columns)]
    kinds += [Jordan(m, ev) for m in range(1, max_columns + 1) for ev in eigenvalues]
    kinds += [Scroll(l) for l in range(1, max_columns + 1)]
    out = []

    def rec(start: int, left: int, chosen: list):
        if chosen:
            out.append(PencilSpec(tuple(chosen)))
        for k in range(start, len(kinds)):
            b = kinds[k]
            if b.columns <= left:
                rec(k, left - b.columns, chosen + [b])

    rec(0, max_columns, [])
    return out
