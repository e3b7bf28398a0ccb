import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from aluffi.groebner import ideal_member
from aluffi.ideals import (
    HilbertSeries,
    Ideal,
    SymbolicMatrix,
    UnitIdealError,
    codimension,
    colon,
    eliminate,
    equals_m_power,
    graded_dimensions,
    hilbert_series,
    ideal_power,
    ideal_product,
    ideal_sum,
    intersect,
    is_m_primary,
    iter_minors,
    jacobian_ideal,
    jacobian_matrix,
    jacobian_minor_ideal,
    m_power,
    minor_ideal,
    rees_ideal,
    relation_type,
)
from aluffi.pencil import PencilSpec, block_family, build_matrix, colon_variable, spec_ideal
from aluffi.polyring import Polynomial, RingContext
from aluffi.reproduce import curve_345_7, curve_3457
from oracles import brute_force_dimensions

R = RingContext(("x", "y", "z"))
x, y, z = R.gens()


def ideal(*texts, ring=R):
    return Ideal([ring.parse(s) for s in texts], ring)


def test_equality_is_ideal_equality():
    assert ideal("x", "y") == ideal("x + y", "x - y")
    assert ideal("x^2", "y") != ideal("x", "y")
    assert Ideal([], R).is_zero()


def test_intersect_examples():
    assert intersect(ideal("x"), ideal("y")) == ideal("x*y")
    assert intersect(ideal("x^2", "y"), ideal("x", "y^2")) == ideal("x^2", "x*y", "y^2")
    assert intersect(ideal("x"), Ideal([], R)).is_zero()


def test_colon_examples():
    assert colon(ideal("x*y"), x) == ideal("y")
    assert colon(ideal("x^2", "x*y"), x) == ideal("x", "y")
    assert colon(ideal("x"), x).is_unit()


def test_colon_lemma_example():
    # [x1 x2 0 y1; 0 x1 x2 0]: colon by y1 is the second-row ideal (x1, x2)
    spec = PencilSpec.parse("N(2) J(1;0)")
    M, S = build_matrix(spec)
    I = spec_ideal(spec)
    got = colon(I, S.var(colon_variable(spec)))
    assert got == Ideal([S.var("x1_1"), S.var("x1_2")], S)


def test_eliminate_examples():
    E = eliminate(ideal("x^2 - y", "x^3 - z"), 1)
    assert E.ring.var_names == ("y", "z")
    assert E == Ideal([E.ring.parse("y^3 - z^2")], E.ring)
    assert eliminate(ideal("x - y"), 1).is_zero()


def test_codimension_examples():
    assert codimension(ideal("x*y")) == 1
    assert codimension(ideal("x", "y")) == 2
    assert codimension(ideal("x*y", "y*z", "x*z")) == 2
    with pytest.raises(UnitIdealError):
        codimension(ideal("1"))


@pytest.mark.parametrize("r", [1, 2, 3, 4])
def test_codimension_of_m_powers(r):
    assert codimension(m_power(R, r)) == 3
    assert is_m_primary(m_power(R, r))
    assert equals_m_power(m_power(R, r), r)


def test_m_primary_and_powers():
    assert not is_m_primary(ideal("x", "y"))
    assert is_m_primary(ideal("x^3", "y^2", "z"))
    assert not equals_m_power(ideal("x^2", "y^2", "z^2"), 2)
    assert equals_m_power(ideal("x^2", "x*y", "y^2", "x*z", "y*z", "z^2"), 2)


def test_jacobian_of_squares_is_m_squared():
    S = RingContext(("x", "y"))
    assert jacobian_ideal(ideal("x^2", "y^2", ring=S)) == m_power(S, 2)


def test_jacobian_of_hypersurface():
    # height 1: (f, df/dx, df/dy, df/dz)
    J = ideal("x^2 + y^2 + z^2")
    assert jacobian_ideal(J) == ideal("x", "y", "z")


def test_jacobian_matrix_shape():
    th = jacobian_matrix([x * y, y * z])
    assert (th.rows, th.cols) == (3, 2)
    assert th[1, 0] == x and th[2, 1] == y


def test_minors():
    M = SymbolicMatrix([[x, y, z], [y, z, x]], R)
    got = minor_ideal(M, 2)
    assert got == ideal("x*z - y^2", "x^2 - y*z", "y*x - z^2")
    assert len(list(iter_minors(M, 2))) == 3


def test_graded_minors_match_determinants():
    for text in ("S(4)", "J(2;0) S(2)", "N(1) J(1;1) J(1;2)", "J(1;0) J(1;0) J(2;1)"):
        J = spec_ideal(PencilSpec.parse(text))
        r = codimension(J)
        assert jacobian_minor_ideal(J, r) == minor_ideal(jacobian_matrix(J.generators), r)


def test_curve_jacobian_ideal():
    J, I = curve_345_7()
    assert jacobian_ideal(J) == I
    # weighted homogeneous generator xy - w is accepted
    J2, I2 = curve_3457()
    assert jacobian_ideal(J2) == I2


def test_products_and_powers():
    assert ideal_product(ideal("x"), ideal("y", "z")) == ideal("x*y", "x*z")
    assert ideal_power(ideal("x", "y"), 3) == ideal("x^3", "x^2*y", "x*y^2", "y^3")
    assert ideal_sum(ideal("x"), ideal("y")) == ideal("x", "y")


def test_hilbert_series_examples():
    assert str(hilbert_series(Ideal([], R))) == "(1)/(1-v)^3"
    assert hilbert_series(ideal("x")) == HilbertSeries((1,), 2)
    # twisted cubic: (1 + 2v)/(1 - v)^2
    tc = minor_ideal(SymbolicMatrix([[x, y, z], [y, z, x]], R), 2)
    S = RingContext(("a", "b", "c", "d"))
    a, b, c, d = S.gens()
    cubic = minor_ideal(SymbolicMatrix([[a, b, c], [b, c, d]], S), 2)
    assert hilbert_series(cubic) == HilbertSeries((1, 2), 2)
    assert hilbert_series(tc).coefficients(3) == [1, 3, 3, 3]


def test_hilbert_series_parse_round_trip():
    hs = HilbertSeries((1, 3, -1), 2)
    assert HilbertSeries.parse(str(hs)) == hs
    assert HilbertSeries((1, -1), 3) == HilbertSeries((1,), 2)


TEST_IDEALS = [
    ("x*y", "y*z"),
    ("x^2", "y^3", "x*z"),
    ("x^2 - y*z", "y^2 - x*z"),
    ("x*y - z^2",),
    ("x^3", "x*y*z", "y^2 - z^2"),
    ("x", "y^2", "z^3"),
    ("x^2 + y^2 + z^2", "x*y"),
]


@pytest.mark.parametrize("gens", TEST_IDEALS)
def test_hilbert_series_matches_brute_force(gens):
    A = ideal(*gens)
    expected = brute_force_dimensions(list(A.generators), R, 8)
    assert hilbert_series(A).coefficients(8) == expected
    assert graded_dimensions(A, 8) == expected


def test_hilbert_series_of_pencils_matches_brute_force():
    for text in ("S(3)", "J(2;0) N(1)", "S(1) S(2)", "N(2) J(1;1)"):
        J = spec_ideal(PencilSpec.parse(text))
        assert hilbert_series(J).coefficients(8) == brute_force_dimensions(list(J.generators), J.ring, 8)


def test_rees_ideal_examples():
    P = rees_ideal(ideal("x"))
    assert P.is_zero()
    P = rees_ideal(ideal("x", "y"))
    assert P == Ideal([P.ring.parse("y*T1 - x*T2")], P.ring)


def test_rees_ideal_of_space_curve():
    J, I = curve_3457()
    P = rees_ideal(I, modulo=J)
    assert P.contains(P.ring.parse("T2*T5 - T7^2"))
    assert P.contains(P.ring.parse("x*T5*T7 - T2^2"))


def test_relation_type_examples():
    assert relation_type(Ideal([], R), ideal("x", "y")) == 1
    assert relation_type(ideal("x"), ideal("x", "y", "z")) == 1
    with pytest.raises(ValueError):
        relation_type(ideal("x"), ideal("y"))


def test_ideal_text_round_trip():
    A = ideal("x^2 - 1/2*y", "z")
    B = Ideal.from_text(A.to_text())
    assert B == A
    assert B.ring.var_names == R.var_names


# --------------------------------------------------------------------------
# properties

expo = st.tuples(*[st.integers(0, 2)] * 3)
small = st.dictionaries(expo, st.integers(-2, 2).filter(bool), min_size=1, max_size=2).map(
    lambda d: Polynomial(R, d))
ideals = st.lists(small, min_size=1, max_size=2).map(lambda g: Ideal(g, R))


@settings(max_examples=20, deadline=None)
@given(ideals, ideals, small, small)
def test_intersect_soundness(A, B, f, g):
    C = intersect(A, B)
    for h in C.generators:
        assert A.contains(h) and B.contains(h)
    assert ideal_product(A, B).issubset(C)
    a, b = A.generators[0], B.generators[0]
    assert C.contains(f * a * b)


@settings(max_examples=20, deadline=None)
@given(ideals, small, small)
def test_colon_soundness(A, f, g):
    C = colon(A, f)
    assert C.contains(g) == A.contains(g * f)
    assert A.issubset(C)


LEMMA_GENS = [
    ("x^2", "y^2"),
    ("x*y", "x*z"),
    ("x^2 - y*z", "x*y"),
    ("x^2 + y^2", "y*z - z^2", "x*z"),
]


@pytest.mark.parametrize("gens", LEMMA_GENS)
@pytest.mark.parametrize("t", [2, 3])
def test_same_degree_forms_meet_m_powers(gens, t):
    # J generated by forms of degree d, r >= d: J meet m^{rt} lies in J m^{r(t-1)}
    J = ideal(*gens)
    d = J.generators[0].degree()
    for r in (d, d + 1):
        lhs = intersect(J, m_power(R, r * t))
        assert lhs.issubset(ideal_product(J, m_power(R, r * (t - 1))))


def _colon_instances():
    fam = block_family(5, (0, 1))
    return [s for s in fam if any(b.kind == "J" and b.eigenvalue == 0 for b in s.blocks)]


@settings(max_examples=25, deadline=None)
@given(st.sampled_from(_colon_instances()))
def test_colon_sequence_hilbert_difference(spec):
    # HS(S/I) - HS(S/(I, y1)) = v/(1-v)^(t + l1)
    M, S = build_matrix(spec)
    I = spec_ideal(spec)
    y1 = S.var(colon_variable(spec))
    t = sum(1 for b in spec.blocks if b.kind == "S")
    l1 = sum(1 for b in spec.blocks if b.kind == "J" and b.eigenvalue == 0)
    diff = hilbert_series(I) - hilbert_series(ideal_sum(I, Ideal([y1], S)))
    assert diff == HilbertSeries((0, 1), t + l1)


@settings(max_examples=15, deadline=None)
@given(st.sampled_from([s for s in block_family(5) if len(s.blocks) > 1]))
def test_quadric_minors_have_degree_r(spec):
    J = spec_ideal(spec)
    if J.is_zero():
        return
    r = codimension(J)
    for g in jacobian_minor_ideal(J, r).generators:
        assert all(sum(e) == r for e in g.coeffs)
