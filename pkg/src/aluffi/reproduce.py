"""Worked examples with their published verdicts, run as one report.

Each :class:`CatalogItem` recomputes one stated claim (a verdict, an ideal
equality, a relation type) and compares it to the expected text.
"""

from __future__ import annotations

import json
import signal
import time
from concurrent.futures import ProcessPoolExecutor
from contextlib import contextmanager
from dataclasses import asdict, dataclass, field
from typing import Callable, Optional

from .aluffi import aluffi_torsion_free
from .graphs import (
    complete,
    complete_minus_matching,
    complete_multipartite,
    cycle,
    is_graph_atf,
    path,
    star,
    theorem34_witness,
    vertex_cover_number,
)
from .ideals import (
    Ideal,
    ideal_power,
    ideal_product,
    intersect,
    jacobian_ideal,
    m_power,
    relation_type,
)
from .pencil import (
    PencilSpec,
    check_colon_lemma,
    check_colon_on_matrix,
    colon_counterexample,
    spec_ideal,
    two_minor_ideal,
    verify_theorem24,
)
from .polyring import RingContext

TOPICS = ("pencils", "graphs", "curves", "arrangements")


class ComputationTimeout(Exception):
    """Raised inside :func:`time_limit` when the budget runs out."""


@contextmanager
def time_limit(seconds: Optional[float]):
    """Interrupt the block after ``seconds`` (main thread, POSIX only)."""
    if not seconds or not hasattr(signal, "setitimer"):
        yield
        return

    def on_alarm(signum, frame):
        raise ComputationTimeout(f"gave up after {seconds}s")

    old = signal.signal(signal.SIGALRM, on_alarm)
    signal.setitimer(signal.ITIMER_REAL, seconds)
    try:
        yield
    finally:
        signal.setitimer(signal.ITIMER_REAL, 0)
        signal.signal(signal.SIGALRM, old)


# --------------------------------------------------------------------------
# the examples


def partials_ideal(f) -> Ideal:
    """Ideal of the partial derivatives of f."""
    ring = f.ring
    return Ideal([f.derivative(i) for i in range(ring.num_vars)], ring)


def curve_345_7() -> tuple:
    """Monomial curve (t^3, t^5, t^7): its ideal and the stated Jacobian ideal."""
    R = RingContext(("x", "y", "z"))
    J = Ideal([R.parse(s) for s in ("x^4 - y*z", "y^2 - x*z", "x^3*y - z^2")], R)
    I = Ideal([R.parse(s) for s in ("x^4", "x^3*y", "y^2", "x*z", "y*z", "z^2")], R)
    return J, I


def curve_3457() -> tuple:
    """Monomial curve (t^3, t^4, t^5, t^7): its ideal and the stated Jacobian ideal."""
    R = RingContext(("x", "y", "z", "w"))
    J = Ideal([R.parse(s) for s in ("x^3 - y*z", "y^2 - x*z", "z^2 - x*w", "x^2*z - y*w", "x*y - w")], R)
    I = Ideal([R.parse(s) for s in ("x*w", "z^2", "y*z", "x*z", "y^2", "x*y - w", "x^3")], R)
    return J, I


def arrangement_plane() -> Ideal:
    """Partials of (x - y - z)(y - x - z)(z - x - y)."""
    R = RingContext(("x", "y", "z"))
    return partials_ideal(R.parse("(x - y - z)*(y - x - z)*(z - x - y)"))


def arrangement_space() -> Ideal:
    """Partials of (x1 - x2)(x2 - x3)(x3 - x4)(x4 - x1)."""
    R = RingContext(("x1", "x2", "x3", "x4"))
    return partials_ideal(R.parse("(x1 - x2)*(x2 - x3)*(x3 - x4)*(x4 - x1)"))


def two_scroll_ideal() -> Ideal:
    """2-minors of [x2 x1 x4; x0 x2 x3], the image of a quadratic map P^2 -> P^4."""
    from .ideals import SymbolicMatrix

    R = RingContext(("x0", "x1", "x2", "x3", "x4"))
    x0, x1, x2, x3, x4 = R.gens()
    return two_minor_ideal(SymbolicMatrix([[x2, x1, x4], [x0, x2, x3]], R))


def _status(J: Ideal, I: Optional[Ideal] = None, **kwargs) -> str:
    I = I if I is not None else jacobian_ideal(J)
    kwargs.setdefault("certify", True)
    return aluffi_torsion_free(J, I, **kwargs).status


def _graph_verdict(G) -> str:
    return "ATF" if is_graph_atf(G) else "not ATF"


def _cycle_witness(n: int) -> str:
    G = cycle(n)
    w = theorem34_witness(G)
    return "valid witness" if w is not None and w.check(G) else "no witness"


@dataclass(frozen=True)
class CatalogItem:
    name: str
    topic: str
    expected: str
    compute: Callable[[], str]


def _catalog() -> list:
    items = []

    def add(name, topic, expected, fn):
        items.append(CatalogItem(name, topic, expected, fn))

    # pencils
    add("rational normal scroll S(4) is torsion-free", "pencils", "TorsionFree",
        lambda: _status(spec_ideal(PencilSpec.parse("S(4)"))))
    add("two scroll blocks [x2 x1 x4; x0 x2 x3] give three quadrics", "pencils", "True",
        lambda: str(two_scroll_ideal() == Ideal(
            [two_scroll_ideal().ring.parse(s) for s in ("x2^2 - x0*x1", "x2*x3 - x0*x4", "x2*x4 - x1*x3")],
            two_scroll_ideal().ring)))
    add("two scroll blocks [x2 x1 x4; x0 x2 x3] are torsion-free", "pencils", "TorsionFree",
        lambda: _status(two_scroll_ideal()))
    for text, expected in (("S(3)", "True"), ("J(2;0) N(1)", "False"), ("N(1) J(1;1) J(1;2)", "True"),
                           ("J(2;0) S(2)", "False"), ("S(2) J(1;1)", "False")):
        add(f"block criterion {text}: conditions agree", "pencils", f"consistent {expected}",
            lambda text=text: _theorem24_summary(text))
    for text in ("J(2;0) S(2)", "J(1;0) N(1)"):
        add(f"colon by the shortest zero-eigenvalue Jordan block, {text}", "pencils", "True",
            lambda text=text: str(check_colon_lemma(PencilSpec.parse(text))))
    add("colon by a variable of the longer block fails", "pencils", "False",
        lambda: str(check_colon_on_matrix(*colon_counterexample())))
    # graphs
    for n in range(3, 8):
        add(f"complete graph K{n}", "graphs", "ATF", lambda n=n: _graph_verdict(complete(n)))
    for parts in ((1, 1, 1), (2, 2), (2, 2, 2), (1, 2, 3), (3, 4)):
        add(f"complete multipartite {parts}", "graphs", "ATF",
            lambda parts=parts: _graph_verdict(complete_multipartite(parts)))
    for n, k in ((4, 2), (5, 2), (6, 3), (7, 3)):
        add(f"K{n} minus a {k}-edge matching", "graphs", "ATF",
            lambda n=n, k=k: _graph_verdict(complete_minus_matching(n, k)))
    add("cycle C3", "graphs", "ATF", lambda: _graph_verdict(cycle(3)))
    add("cycle C4", "graphs", "ATF", lambda: _graph_verdict(cycle(4)))
    for n in range(5, 9):
        add(f"cycle C{n}", "graphs", "not ATF", lambda n=n: _graph_verdict(cycle(n)))
        add(f"cycle C{n} witness", "graphs", "valid witness", lambda n=n: _cycle_witness(n))
        add(f"cycle C{n} cover number", "graphs", str((n + 1) // 2), lambda n=n: str(vertex_cover_number(cycle(n))))
    for n in range(3, 9):
        add(f"path P{n}", "graphs", "not ATF", lambda n=n: _graph_verdict(path(n)))
    add("star on 6 vertices", "graphs", "not ATF", lambda: _graph_verdict(star(6)))
    # curves
    add("curve (t^3,t^5,t^7): Jacobian ideal is the stated monomial ideal", "curves", "True",
        lambda: str(jacobian_ideal(curve_345_7()[0]) == curve_345_7()[1]))
    add("curve (t^3,t^5,t^7): pair is torsion-free", "curves", "TorsionFree",
        lambda: _status(*curve_345_7()))
    add("curve (t^3,t^4,t^5,t^7): Jacobian ideal is the stated ideal", "curves", "True",
        lambda: str(jacobian_ideal(curve_3457()[0]) == curve_3457()[1]))
    add("curve (t^3,t^4,t^5,t^7): pair is torsion-free", "curves", "TorsionFree",
        lambda: _status(*curve_3457()))
    # arrangements
    add("plane arrangement: Jacobian ideal of J is (x,y,z)^2", "arrangements", "True",
        lambda: str(jacobian_ideal(arrangement_plane()) == m_power(arrangement_plane().ring, 2)))
    add("plane arrangement: pair is torsion-free", "arrangements", "TorsionFree",
        lambda: _status(arrangement_plane()))
    add("space arrangement: relation type", "arrangements", "2",
        lambda: str(relation_type(arrangement_space(), jacobian_ideal(arrangement_space()))))
    add("space arrangement: J meet I^2 equals JI", "arrangements", "True", lambda: str(_space_vv2()))
    add("space arrangement: pair is torsion-free", "arrangements", "TorsionFree",
        lambda: _status(arrangement_space(), method="relation-type"))
    return items


def _theorem24_summary(text: str) -> str:
    rec = verify_theorem24(PencilSpec.parse(text))
    return f"consistent {rec.a}" if rec.consistent else f"inconsistent a={rec.a} b={rec.b} c={rec.c}"


def _space_vv2() -> bool:
    J = arrangement_space()
    I = jacobian_ideal(J)
    return intersect(J, ideal_power(I, 2)) == ideal_product(J, I)


CATALOG = _catalog()


# --------------------------------------------------------------------------
# reports


@dataclass
class ReportItem:
    name: str
    topic: str
    expected: str
    computed: str
    elapsed: float

    @property
    def agree(self) -> bool:
        return self.expected == self.computed


@dataclass
class RunReport:
    items: list = field(default_factory=list)

    @property
    def summary(self) -> dict:
        agree = sum(1 for it in self.items if it.agree)
        return {"total": len(self.items), "agree": agree, "disagree": len(self.items) - agree}

    @property
    def ok(self) -> bool:
        return all(it.agree for it in self.items)

    def to_dict(self, timings: bool = True) -> dict:
        rows = []
        for it in self.items:
            row = asdict(it)
            row["agree"] = it.agree
            if timings:
                row["elapsed"] = round(it.elapsed, 4)
            else:
                row.pop("elapsed")
            rows.append(row)
        return {"items": rows, "summary": self.summary}

    def to_json(self, timings: bool = True) -> str:
        return json.dumps(self.to_dict(timings), indent=2, sort_keys=True)

    @classmethod
    def from_json(cls, text: str) -> "RunReport":
        data = json.loads(text)
        items = [ReportItem(r["name"], r["topic"], r["expected"], r["computed"], r.get("elapsed", 0.0))
                 for r in data["items"]]
        return cls(items)

    def render(self) -> str:
        lines = []
        for it in self.items:
            mark = "ok  " if it.agree else "FAIL"
            lines.append(f"{mark} [{it.topic}] {it.name}: expected {it.expected}, got {it.computed} "
                         f"({it.elapsed:.2f}s)")
        s = self.summary
        lines.append(f"{s['agree']}/{s['total']} agree")
        return "\n".join(lines)


def _run_item(args) -> ReportItem:
    item, timeout = args
    start = time.perf_counter()
    try:
        with time_limit(timeout):
            computed = item.compute()
    except ComputationTimeout:
        computed = "Inconclusive (timeout)"
    except Exception as exc:  # report, don't abort the whole run
        computed = f"error: {exc}"
    return ReportItem(item.name, item.topic, item.expected, computed, time.perf_counter() - start)


def _run_index(args) -> ReportItem:
    k, timeout = args
    return _run_item((CATALOG[k], timeout))


def reproduce(topics=None, timeout: Optional[float] = None, workers: int = 1) -> RunReport:
    """Run the catalog (optionally only some topics) and collect a report."""
    if topics:
        bad = set(topics) - set(TOPICS)
        if bad:
            raise ValueError(f"unknown topics {sorted(bad)}; choose from {TOPICS}")
    chosen = [k for k, it in enumerate(CATALOG) if not topics or it.topic in topics]
    if workers > 1:
        with ProcessPoolExecutor(workers) as pool:
            return RunReport(list(pool.map(_run_index, [(k, timeout) for k in chosen])))
    return RunReport([_run_item((CATALOG[k], timeout)) for k in chosen])
