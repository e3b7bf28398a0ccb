"""Edge ideals of simple graphs and the combinatorial torsion-free test.

Vertices are numbered 1..n and vertex i corresponds to the variable x{i}.
:func:`theorem34_witness` searches for adjacent x1, x2 and a nonempty set S
with S + {x1} and S + {x2} independent and |N(S)| = r - 1 (r the vertex
cover number); such a triple is what breaks the torsion-free property.
"""

from __future__ import annotations

import os
import re
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Optional, Sequence

from . import monomial as mono
from .aluffi import AluffiVerdict, aluffi_torsion_free
from .ideals import Ideal, jacobian_ideal
from .polyring import Polynomial, RingContext

WORKERS_ENV = "ALUFFI_WORKERS"


class EdgelessGraphError(ValueError):
    """Raised when an operation needs at least one edge."""


class Graph:
    """A finite simple graph on vertices 1..n (immutable)."""

    __slots__ = ("num_vertices", "_adj", "_edges")

    def __init__(self, num_vertices: int, edges: Iterable[Sequence[int]] = ()):
        if num_vertices < 1:
            raise ValueError("a graph needs at least one vertex")
        adj: dict = {v: set() for v in range(1, num_vertices + 1)}
        for e in edges:
            i, j = e
            if i == j:
                raise ValueError(f"loop at vertex {i}")
            if not (1 <= i <= num_vertices and 1 <= j <= num_vertices):
                raise ValueError(f"edge {i} {j} outside 1..{num_vertices}")
            adj[i].add(j)
            adj[j].add(i)
        self.num_vertices = num_vertices
        self._adj = {v: frozenset(s) for v, s in adj.items()}
        self._edges = tuple(sorted((i, j) for i in adj for j in adj[i] if i < j))

    @property
    def vertices(self) -> range:
        return range(1, self.num_vertices + 1)

    @property
    def edges(self) -> tuple:
        return self._edges

    def adjacent(self, v: int) -> frozenset:
        return self._adj[v]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def neighborhood(self, S: Iterable[int]) -> frozenset:
        return neighborhood(self, S)

    def is_independent(self, S: Iterable[int]) -> bool:
        S = set(S)
        return not any(self._adj[v] & S for v in S)

    def is_connected(self) -> bool:
        seen = {1}
        todo = [1]
        while todo:
            v = todo.pop()
            for w in self._adj[v]:
                if w not in seen:
                    seen.add(w)
                    todo.append(w)
        return len(seen) == self.num_vertices

    def __eq__(self, other):
        return isinstance(other, Graph) and self.num_vertices == other.num_vertices and self._edges == other._edges

    def __hash__(self):
        return hash((self.num_vertices, self._edges))

    def __repr__(self):
        return f"Graph({self.num_vertices}, {list(self._edges)})"

    def to_text(self) -> str:
        return "\n".join([str(self.num_vertices)] + [f"{i} {j}" for i, j in self._edges]) + "\n"

    @classmethod
    def from_text(cls, text: str) -> "Graph":
        """First line ``n``, then one ``i j`` edge per line (1-based)."""
        lines = [ln.split("#", 1)[0].strip() for ln in text.splitlines()]
        lines = [ln for ln in lines if ln]
        if not lines:
            raise ValueError("empty graph file")
        try:
            n = int(lines[0])
            edges = [tuple(int(x) for x in ln.split()) for ln in lines[1:]]
        except ValueError as exc:
            raise ValueError(f"cannot parse graph file: {exc}") from None
        if any(len(e) != 2 for e in edges):
            raise ValueError("each edge line needs exactly two vertices")
        return cls(n, edges)

    @classmethod
    def from_networkx(cls, g) -> "Graph":
        nodes = sorted(g.nodes())
        pos = {v: k for k, v in enumerate(nodes, start=1)}
        return cls(len(nodes), [(pos[a], pos[b]) for a, b in g.edges()])


def neighborhood(G: Graph, S: Iterable[int]) -> frozenset:
    """Every vertex adjacent to some vertex of S."""
    out: set = set()
    for v in S:
        if v not in G._adj:
            raise ValueError(f"vertex {v} is not in the graph")
        out |= G._adj[v]
    return frozenset(out)


def graph_ring(G: Graph) -> RingContext:
    return RingContext(tuple(f"x{i}" for i in G.vertices))


def edge_ideal(G: Graph, ring: Optional[RingContext] = None) -> Ideal:
    if not G.edges:
        raise EdgelessGraphError("the edge ideal of an edgeless graph is zero")
    ring = ring or graph_ring(G)
    n = G.num_vertices
    gens = []
    for i, j in G.edges:
        e = [0] * n
        e[i - 1] = e[j - 1] = 1
        gens.append(ring.monomial(tuple(e)))
    return Ideal(gens, ring)


def vertex_cover_number(G: Graph) -> int:
    if not G.edges:
        raise EdgelessGraphError("an edgeless graph has no vertex cover number")
    size, _ = mono.min_cover([frozenset((i - 1, j - 1)) for i, j in G.edges], G.num_vertices)
    return size


# --------------------------------------------------------------------------
# transversals of the Jacobian of an edge ideal


def _exponents(G: Graph, g) -> tuple:
    if isinstance(g, Polynomial):
        if not g.is_monomial():
            raise ValueError("g must be a monomial")
        g = next(iter(g.coeffs))
    g = tuple(g)
    if len(g) != G.num_vertices or any(a < 0 for a in g):
        raise ValueError("exponent vector does not match the graph")
    return g


def transversal_edges(G: Graph, g, r: int) -> Optional[list]:
    """Edges realizing g as an r-transversal, or None.

    An r-transversal is a product of r Jacobian entries from distinct rows
    and columns; the entry in row x_a and column {a, b} is x_b.  So we need
    r distinct edges {a_k, b_k} with distinct a_k and g = prod x_{b_k}.  Each
    copy of x_b in g is matched to a partner a adjacent to b; partners must be
    distinct and no edge may be used from both ends.  Returned as (a, b) pairs.
    """
    g = _exponents(G, g)
    if sum(g) != r:
        raise ValueError(f"g has degree {sum(g)}, expected {r}")
    copies = [b for b in G.vertices for _ in range(g[b - 1])]
    if any(g[b - 1] > G.degree(b) for b in G.vertices):
        return None
    # most constrained copies first
    copies.sort(key=lambda b: (G.degree(b), b))
    used_rows: set = set()
    used_edges: set = set()
    chosen: list = []

    def extend(k: int) -> bool:
        if k == len(copies):
            return True
        b = copies[k]
        for a in sorted(G.adjacent(b)):
            e = (min(a, b), max(a, b))
            if a in used_rows or e in used_edges:
                continue
            used_rows.add(a)
            used_edges.add(e)
            chosen.append((a, b))
            if extend(k + 1):
                return True
            chosen.pop()
            used_rows.discard(a)
            used_edges.discard(e)
        return False

    return list(chosen) if extend(0) else None


def is_r_transversal(G: Graph, g, r: int) -> bool:
    return transversal_edges(G, g, r) is not None


# --------------------------------------------------------------------------
# the combinatorial decider


@dataclass(frozen=True)
class Witness34:
    x1: int
    x2: int
    S: tuple

    def check(self, G: Graph) -> bool:
        """Re-verify both conditions directly."""
        if not self.S or self.x2 not in G.adjacent(self.x1):
            return False
        S = set(self.S)
        if self.x1 in S or self.x2 in S:
            return False
        if not (G.is_independent(S | {self.x1}) and G.is_independent(S | {self.x2})):
            return False
        return len(neighborhood(G, S)) == vertex_cover_number(G) - 1

    def __str__(self):
        inner = ", ".join(f"v{v}" for v in self.S)
        return f"(v{self.x1}, v{self.x2}, {{{inner}}})"


def theorem34_witness(G: Graph) -> Optional[Witness34]:
    """Search adjacent x1, x2 and independent S avoiding both closed
    neighborhoods with |N(S)| = r - 1.

    Candidates S grow one vertex at a time in increasing order; since N(.)
    only grows under inclusion, any S with |N(S)| > r - 1 is dropped together
    with its supersets.  Both conditions are symmetric in x1 and x2, so one
    orientation per edge covers both.
    """
    r = vertex_cover_number(G)
    if r <= 1:
        raise ValueError("the combinatorial criterion needs cover number at least 2")
    target = r - 1
    for x1, x2 in G.edges:
        blocked = {x1, x2} | G.adjacent(x1) | G.adjacent(x2)
        cand = [v for v in G.vertices if v not in blocked]
        # breadth-first by size so the smallest S is reported
        level = [((), frozenset())]
        while level:
            nxt = []
            for S, NS in level:
                start = cand.index(S[-1]) + 1 if S else 0
                for v in cand[start:]:
                    if any(v in G.adjacent(u) for u in S):
                        continue
                    N2 = NS | G.adjacent(v)
                    if len(N2) > target:
                        continue
                    S2 = S + (v,)
                    if len(N2) == target:
                        return Witness34(x1, x2, S2)
                    nxt.append((S2, N2))
            level = nxt
    return None


def is_graph_atf(G: Graph) -> bool:
    """Combinatorial verdict; a star (cover number 1) is never torsion-free."""
    r = vertex_cover_number(G)
    if r == 1:
        return False
    return theorem34_witness(G) is None


def graph_oracle(G: Graph, **kwargs) -> AluffiVerdict:
    """The algebraic verdict for I(G) inside its Jacobian ideal."""
    J = edge_ideal(G)
    kwargs.setdefault("certify", True)
    return aluffi_torsion_free(J, jacobian_ideal(J), **kwargs)


# --------------------------------------------------------------------------
# families


def complete(n: int) -> Graph:
    if n < 1:
        raise ValueError("complete graphs need n >= 1")
    return Graph(n, combinations(range(1, n + 1), 2))


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycles need n >= 3")
    return Graph(n, [(i, i % n + 1) for i in range(1, n + 1)])


def path(n: int) -> Graph:
    """The path on n vertices."""
    if n < 2:
        raise ValueError("paths need n >= 2")
    return Graph(n, [(i, i + 1) for i in range(1, n)])


def star(n: int) -> Graph:
    """Vertex 1 joined to n - 1 leaves."""
    if n < 2:
        raise ValueError("stars need n >= 2")
    return Graph(n, [(1, i) for i in range(2, n + 1)])


def complete_multipartite(parts: Sequence[int]) -> Graph:
    parts = list(parts)
    if len(parts) < 2 or any(p < 1 for p in parts):
        raise ValueError("complete multipartite graphs need at least two nonempty parts")
    label = []
    for k, p in enumerate(parts):
        label += [k] * p
    n = len(label)
    return Graph(n, [(i + 1, j + 1) for i, j in combinations(range(n), 2) if label[i] != label[j]])


def complete_minus_matching(n: int, matching_size: int) -> Graph:
    """K_n without the edges {1,2}, {3,4}, ... (matching_size of them)."""
    if n < 2 or matching_size < 0 or 2 * matching_size > n:
        raise ValueError("need 0 <= matching_size <= n/2")
    drop = {(2 * k + 1, 2 * k + 2) for k in range(matching_size)}
    return Graph(n, [e for e in combinations(range(1, n + 1), 2) if e not in drop])


_FAMILIES = {
    "complete": complete,
    "cycle": cycle,
    "path": path,
    "star": star,
    "complete_multipartite": complete_multipartite,
    "multipartite": complete_multipartite,
    "complete_minus_matching": complete_minus_matching,
    "kmm": complete_minus_matching,
}


def family_generator(kind: str, *params) -> Graph:
    """Build a named graph: ``family_generator("cycle", 5)``,
    ``family_generator("complete_multipartite", [2, 2, 2])``."""
    fn = _FAMILIES.get(kind)
    if fn is None:
        raise ValueError(f"unknown graph family {kind!r}")
    if fn is complete_multipartite:
        return fn(params[0] if len(params) == 1 and not isinstance(params[0], int) else params)
    return fn(*params)


_FAMILY_RE = re.compile(r"^\s*([a-z_]+)\s*:\s*([0-9,\s]+)$")


def parse_family(text: str) -> Graph:
    """``cycle:5``, ``kmm:6,3``, ``complete_multipartite:2,2,2``."""
    m = _FAMILY_RE.match(text)
    if not m:
        raise ValueError(f"cannot parse graph family {text!r}")
    kind = m.group(1)
    nums = [int(x) for x in m.group(2).split(",") if x.strip()]
    if kind in ("complete_multipartite", "multipartite"):
        return complete_multipartite(nums)
    return family_generator(kind, *nums)


# --------------------------------------------------------------------------
# small-graph sweep


def small_connected_graphs(max_vertices: int = 7) -> list:
    """Connected graphs with 2..max_vertices vertices, one per isomorphism
    class (from the networkx graph atlas, which stops at 7 vertices)."""
    import networkx as nx

    if max_vertices > 7:
        raise ValueError("the graph atlas covers at most 7 vertices")
    out = []
    for g in nx.graph_atlas_g():
        k = g.number_of_nodes()
        if 2 <= k <= max_vertices and nx.is_connected(g):
            out.append(Graph.from_networkx(g))
    return out


@dataclass
class SweepItem:
    graph: Graph
    r: int
    combinatorial: bool
    algebraic: AluffiVerdict

    @property
    def agree(self) -> bool:
        return self.combinatorial == self.algebraic.is_torsion_free


def _sweep_one(G: Graph) -> SweepItem:
    return SweepItem(G, vertex_cover_number(G), is_graph_atf(G), graph_oracle(G))


def worker_count(default: int = 1) -> int:
    try:
        return max(1, int(os.environ.get(WORKERS_ENV, default)))
    except ValueError:
        return default


def oracle_sweep(graphs: Sequence[Graph], workers: Optional[int] = None) -> list:
    """Compare the combinatorial and algebraic verdicts on each graph with
    cover number above 1."""
    todo = [G for G in graphs if G.edges and vertex_cover_number(G) > 1]
    workers = workers or worker_count()
    if workers <= 1:
        return [_sweep_one(G) for G in todo]
    with ProcessPoolExecutor(workers) as pool:
        return list(pool.map(_sweep_one, todo, chunksize=8))
