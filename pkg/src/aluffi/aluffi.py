"""The Valabrega-Valla test and the Aluffi torsion-free verdict.

A pair J ⊆ I is Aluffi torsion-free when J ∩ I^t = J·I^(t-1) for every
t >= 2.  :func:`vv_component` decides one t exactly with Groebner bases;
:func:`aluffi_torsion_free` runs t = 2, 3, ... and, when asked to certify,
decides how far it has to go.
"""

from __future__ import annotations

import json
import time
from math import comb
from dataclasses import dataclass, field
from typing import Optional

from . import monomial as mono
from .graded import GradedPair
from .linalg import Span
from .ideals import (
    Ideal,
    codimension,
    equals_m_power,
    ideal_power,
    ideal_product,
    intersect,
    is_m_primary,
    jacobian_minor_ideal,
    relation_type,
)
from .polyring import DegRevLex, Polynomial, format_polynomial

TORSION_FREE = "TorsionFree"
NOT_TORSION_FREE = "NotTorsionFree"
INCONCLUSIVE = "Inconclusive"


class ContainmentError(ValueError):
    """Raised when J is not contained in I."""


@dataclass
class VVComponent:
    """Degree-t piece (J ∩ I^t) / (J·I^(t-1)) of the Valabrega-Valla module."""

    t: int
    witnesses: list = field(default_factory=list)

    @property
    def is_zero(self) -> bool:
        return not self.witnesses


@dataclass
class AluffiVerdict:
    status: str
    t: Optional[int] = None
    witness: Optional[Polynomial] = None
    bound: Optional[int] = None
    method: Optional[str] = None
    timings: dict = field(default_factory=dict)

    @property
    def is_torsion_free(self) -> bool:
        return self.status == TORSION_FREE

    def to_dict(self) -> dict:
        return {
            "status": self.status,
            "t": self.t,
            "witness": format_polynomial(self.witness) if self.witness is not None else None,
            "bound": self.bound,
            "method": self.method,
            "timings": {k: round(v, 6) for k, v in self.timings.items()},
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)

    def __str__(self):
        if self.status == TORSION_FREE:
            return f"TorsionFree(bound={self.bound}, method={self.method})"
        if self.status == NOT_TORSION_FREE:
            return f"NotTorsionFree(t={self.t}, witness={self.witness})"
        return f"Inconclusive(checked up to t={self.bound})"


def check_containment(J: Ideal, I: Ideal):
    if J.ring != I.ring:
        raise ContainmentError("J and I live in different rings")
    # a k-linear combination of I's generators needs no Groebner basis
    span = Span(g.coeffs for g in I.generators)
    for g in J.generators:
        if not span.contains(g.coeffs) and not I.contains(g):
            raise ContainmentError(f"generator {g} of J is not in I")


class PairData:
    """Facts about a pair J ⊆ I shared by the per-t computations."""

    def __init__(self, J: Ideal, I: Ideal):
        self.J = J
        self.I = I
        self._K = None
        self._graded = None
        self._mprimary = None
        self._D = None
        self._cheap_tried = False

    @property
    def homogeneous(self) -> bool:
        return (not self.J.is_zero() and self.J.is_homogeneous() and self.I.is_homogeneous())

    @property
    def K(self) -> list:
        if self._K is None:
            self._K = _k_part(self.J, self.I)
        return self._K

    @property
    def m_primary(self) -> bool:
        if self._mprimary is None and not self.try_cheap_m_primary():
            self._mprimary = is_m_primary(self.I)
        return self._mprimary

    def try_cheap_m_primary(self) -> bool:
        """Settle m-primality by graded linear algebra if possible; return
        True when ``m_primary`` is now known without a Groebner basis."""
        if self._mprimary is not None:
            return True
        if self._cheap_tried or not self.homogeneous:
            return False
        self._cheap_tried = True
        D = self._graded_power_exponent()
        if D is None:
            return False
        self._mprimary, self._D = True, D
        return True

    @property
    def D(self) -> int:
        if self._D is None:
            self._D = _m_power_exponent(self.I)
        return self._D

    def _graded_power_exponent(self) -> Optional[int]:
        """Smallest D up to the top generator degree of I with m^D ⊆ I,
        by comparing dim I_D with the number of degree-D monomials."""
        g = self.graded
        I1 = g.power_I(1)
        n = self.I.ring.num_vars
        for D in range(1, max(f.degree() for f in self.I.generators) + 1):
            mds = g.index.multidegrees(D)
            if sum(len(I1.component(md)) for md in mds) == comb(n + D - 1, D):
                return D
        return None

    @property
    def graded(self) -> GradedPair:
        if self._graded is None:
            self._graded = GradedPair(self.J.generators, self.I.generators, self.K)
        return self._graded

    def degree_window(self, t: int) -> tuple:
        """Degrees [lo, hi) outside which VV_t vanishes; hi is None when
        no upper limit is known."""
        lo = t * min(g.degree() for g in self.K)
        if not self.m_primary:
            return lo, None
        dj = max(g.degree() for g in self.J.generators)
        return lo, dj + self.D * (t - 1)


# degrees above the start of K^t searched before falling back to Groebner
GRADED_SEARCH_SLACK = 2


def vv_component(J: Ideal, I: Ideal, t: int, check: bool = True, strategy: str = "auto",
                 data: Optional[PairData] = None, limit: Optional[int] = None) -> VVComponent:
    """Compute the degree-t Valabrega-Valla piece (J ∩ I^t) / (J·I^(t-1)).

    ``strategy`` is ``"groebner"`` (intersection by elimination, witnesses
    are the intersection generators outside J·I^(t-1), reported as normal
    forms modulo it), ``"graded"`` (homogeneous pairs only: degree-wise rank
    computations over the window where the piece can live; witnesses form a
    basis of the piece in its lowest nonzero degree), or ``"auto"``.
    ``limit`` caps the number of graded witnesses collected, which is
    enough when only vanishing matters.
    """
    if t < 2:
        raise ValueError("the Valabrega-Valla module starts at t = 2")
    if strategy not in ("auto", "groebner", "graded"):
        raise ValueError(f"unknown strategy {strategy!r}")
    if check:
        check_containment(J, I)
    if strategy != "groebner":
        data = data or PairData(J, I)
        monomial = J.is_monomial and I.is_monomial
        if data.homogeneous and not (monomial and strategy == "auto"):
            found = _vv_graded(data, t, limit)
            if found is not None:
                return VVComponent(t, found)
        elif strategy == "graded":
            raise ValueError("the graded strategy needs homogeneous J and I")
    return _vv_groebner(J, I, t)


def _vv_graded(data: PairData, t: int, limit: Optional[int] = None) -> Optional[list]:
    """Witness list, or None when the window is open-ended and the bounded
    search found nothing."""
    if not data.K:
        return []

    def search(degrees) -> list:
        for d in degrees:
            found = data.graded.witnesses_in_degree(t, d, limit)
            if found:
                return [f.monic(DegRevLex()) for f in found]
        return []

    lo = t * min(g.degree() for g in data.K)
    first = lo + GRADED_SEARCH_SLACK + 1
    if data.try_cheap_m_primary():
        _, hi = data.degree_window(t)
        if hi is not None:
            return search(range(lo, hi))
        return search(range(lo, first)) or None
    # the upper end of the window needs a Groebner basis of I: look at the
    # low degrees first, where witnesses usually show up
    found = search(range(lo, first))
    if found:
        return found
    _, hi = data.degree_window(t)
    if hi is None:
        return None
    return search(range(first, hi))


def _vv_groebner(J: Ideal, I: Ideal, t: int) -> VVComponent:
    low = ideal_product(J, ideal_power(I, t - 1))
    inter = intersect(J, ideal_power(I, t))
    out = []
    if low.is_monomial and inter.is_monomial:
        gens = low.monomial_generators()
        for g in inter.generators:
            if not mono.is_member(next(iter(g.coeffs)), gens):
                out.append(g)
        return VVComponent(t, out)
    gb = low.groebner(DegRevLex())
    for g in inter.generators:
        nf = gb.normal_form(g)
        if nf:
            out.append(nf.monic(DegRevLex()))
    return VVComponent(t, out)


# --------------------------------------------------------------------------
# certification bounds


def _k_part(J: Ideal, I: Ideal) -> list:
    """Generators of I that are not already in J."""
    return [g for g in I.generators if not J.contains(g)]


def degree_bound(J: Ideal, I: Ideal, data: Optional[PairData] = None) -> Optional[int]:
    """A bound T such that VV_t = 0 is automatic for every t >= T, or None.

    Uses I = J + K with K the generators outside J, so that
    J ∩ I^t = J·I^(t-1) + (J ∩ K^t).  When m^D ⊆ I, every element of J of
    degree >= max deg(J) + D(t-1) already lies in J·I^(t-1), while K^t starts
    in degree t·min deg(K); once those ranges stop overlapping nothing is left
    to check.  Needs standard-homogeneous J and I with I m-primary.
    """
    data = data or PairData(J, I)
    if not data.homogeneous:
        return None
    K = data.K
    if not K:
        return 2
    if not data.m_primary:
        return None
    D = data.D
    k = min(g.degree() for g in K)
    dj = max(g.degree() for g in J.generators)
    # need t*k >= dj + D*(t-1), i.e. t*(k-D) >= dj - D
    if dj <= D and k >= D:
        return 2
    if k > D:
        t = 2
        while t * (k - D) < dj - D:
            t += 1
        return t
    return None


def _m_power_exponent(I: Ideal) -> int:
    """Smallest D with m^D ⊆ I (I homogeneous and m-primary)."""
    n = I.ring.num_vars
    lead = I.initial_ideal(DegRevLex())
    D = 1
    while True:
        if all(mono.is_member(m, lead) for m in mono.monomials_of_degree(n, D)):
            return D
        D += 1


def squarefree_quadratic_bound(J: Ideal, I: Ideal) -> Optional[int]:
    """Bound 2 for a squarefree quadratic monomial J inside a monomial I.

    For such pairs VV_2 = 0 already forces VV_t = 0 for all t (recorded in
    the project notes); this covers edge ideals of graphs.
    """
    if not (J.is_monomial and I.is_monomial) or J.is_zero():
        return None
    for e in J.monomial_generators():
        if sum(e) != 2 or max(e) != 1:
            return None
    return 2


def certification_bound(J: Ideal, I: Ideal, method: str = "auto", data: Optional[PairData] = None) -> tuple:
    """Return ``(bound, method_used)``: checking t = 2..bound decides the pair.

    A bound below 2 means nothing needs checking.
    """
    if method not in ("auto", "degree", "squarefree-quadratic", "relation-type"):
        raise ValueError(f"unknown certification method {method!r}")
    if method in ("auto", "degree"):
        b = degree_bound(J, I, data)
        if b is not None:
            # t >= b is automatic, so only t = 2..b-1 need a computation
            return b - 1, "degree"
        if method == "degree":
            raise ValueError("degree certification does not apply to this pair")
    if method in ("auto", "squarefree-quadratic"):
        b = squarefree_quadratic_bound(J, I)
        if b is not None:
            return b, "squarefree-quadratic"
        if method == "squarefree-quadratic":
            raise ValueError("J is not a squarefree quadratic monomial ideal")
    return max(2, relation_type(J, I)), "relation-type"


def aluffi_torsion_free(J: Ideal, I: Ideal, max_t: Optional[int] = None, certify: bool = False,
                        method: str = "auto", min_t: int = 2, strategy: str = "auto") -> AluffiVerdict:
    """Decide (or bound) the Aluffi torsion-free property of J ⊆ I.

    Without ``certify`` the test runs t = 2..max_t (default 4) and a clean
    run is Inconclusive.  With ``certify`` the rounds t = 2..min_t (and up to
    ``max_t`` if given) run first, then a bound is derived (see
    :func:`certification_bound`) and the remaining rounds up to it follow.
    """
    timings: dict = {}
    start = time.perf_counter()
    check_containment(J, I)
    timings["containment"] = time.perf_counter() - start
    data = PairData(J, I)
    checked = 1

    def run(upto: int) -> Optional[AluffiVerdict]:
        nonlocal checked
        for t in range(checked + 1, upto + 1):
            s = time.perf_counter()
            comp = vv_component(J, I, t, check=False, strategy=strategy, data=data, limit=1)
            timings[f"vv_{t}"] = time.perf_counter() - s
            checked = t
            if not comp.is_zero:
                return AluffiVerdict(NOT_TORSION_FREE, t=t, witness=comp.witnesses[0], timings=timings)
        return None

    if not certify:
        bound = max_t if max_t is not None else 4
        return run(bound) or AluffiVerdict(INCONCLUSIVE, bound=bound, timings=timings)
    # cheap explicit rounds first: a witness makes the bound irrelevant
    found = run(max(min_t, max_t or 0))
    if found:
        return found
    s = time.perf_counter()
    bound, used = certification_bound(J, I, method, data)
    timings["certification"] = time.perf_counter() - s
    found = run(bound)
    if found:
        return found
    return AluffiVerdict(TORSION_FREE, bound=max(bound, checked, 2), method=used, timings=timings)


# --------------------------------------------------------------------------
# evidence for the quadrics conjecture


@dataclass
class ConjectureEvidence:
    r: int
    m_primary: bool
    equals_power: bool

    @property
    def consistent(self) -> bool:
        return self.m_primary == self.equals_power


def conjecture1_evidence(J: Ideal) -> ConjectureEvidence:
    """Compare "I_r(Θ) = m^r" with "I_r(Θ) is m-primary" for quadrics J."""
    if J.is_zero() or not J.is_homogeneous() or any(g.degree() != 2 for g in J.generators):
        raise ValueError("J must be generated by quadrics")
    r = codimension(J)
    if r < 2:
        raise ValueError("the conjecture concerns height at least 2")
    Ir = jacobian_minor_ideal(J, r)
    return ConjectureEvidence(r, is_m_primary(Ir), equals_m_power(Ir, r))
