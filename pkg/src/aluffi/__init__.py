"""Aluffi torsion-free pairs of ideals.

Exact polynomial arithmetic over Q, Groebner bases, ideal operations, the
Valabrega-Valla test, and the combinatorial criteria for 2 x n pencils of
linear forms and for edge ideals of graphs.
"""

from .aluffi import (
    INCONCLUSIVE,
    NOT_TORSION_FREE,
    TORSION_FREE,
    AluffiVerdict,
    ContainmentError,
    aluffi_torsion_free,
    certification_bound,
    vv_component,
)
from .graphs import Graph, edge_ideal, is_graph_atf, theorem34_witness, vertex_cover_number
from .groebner import GroebnerBasis, buchberger
from .ideals import (
    HilbertSeries,
    Ideal,
    SymbolicMatrix,
    codimension,
    colon,
    equals_m_power,
    hilbert_series,
    intersect,
    jacobian_ideal,
    jacobian_matrix,
    minor_ideal,
    minors,
    relation_type,
)
from .pencil import Block, Jordan, Nilpotent, PencilSpec, Scroll, build_matrix, verify_theorem24
from .polyring import DegRevLex, Elimination, Lex, Polynomial, RingContext

__version__ = "0.1.0"
