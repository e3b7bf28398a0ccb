import random

from hypothesis import given, settings
from hypothesis import strategies as st

from aluffi.groebner import (
    buchberger,
    ideal_member,
    is_groebner_basis,
    leading_term_ideal,
    reduce,
    s_polynomial,
)
from aluffi.polyring import DegRevLex, Lex, Polynomial, RingContext
from oracles import sympy_groebner

R = RingContext(("x", "y", "z"))
x, y, z = R.gens()


def test_reduce_examples():
    nf, q = reduce(x**2 * y, [x], DegRevLex())
    assert nf.is_zero() and q == [x * y]
    nf, q = reduce(y, [x], DegRevLex())
    assert nf == y and q == [R.zero()]
    nf, q = reduce(x**2 - y, [x**2 - y], DegRevLex())
    assert nf.is_zero() and q == [R.one()]


def test_buchberger_examples():
    assert set(buchberger([x, y], DegRevLex())) == {x, y}
    gb = buchberger([x**2 - y, x**3 - z], Lex())
    assert y**3 - z**2 in set(gb)
    assert set(gb) == sympy_groebner([x**2 - y, x**3 - z], R, "lex")


def test_two_scroll_quadrics():
    S = RingContext(("x0", "x1", "x2", "x3", "x4"))
    gens = [S.parse(s) for s in ("x2^2 - x0*x1", "x2*x3 - x0*x4", "x2*x4 - x1*x3")]
    gb = buchberger(gens, DegRevLex())
    assert gb.normal_form(S.parse("x2^2 - x0*x1")).is_zero()
    assert set(gb) == sympy_groebner(gens, S, "grevlex")


def test_membership():
    gb = buchberger([x], DegRevLex())
    assert ideal_member(x**2, gb)
    assert not ideal_member(y, gb)
    I = [R.parse(s) for s in ("x^4", "x^3*y", "y^2", "x*z", "y*z", "z^2")]
    assert ideal_member(y * z, buchberger(I, DegRevLex()))


def test_leading_terms():
    assert sorted(leading_term_ideal(buchberger([x, y], DegRevLex()))) == [(0, 1, 0), (1, 0, 0)]
    assert leading_term_ideal(buchberger([x**2 - y], Lex())) == [(2, 0, 0)]
    m2 = [a * b for i, a in enumerate(R.gens()) for b in R.gens()[i:]]
    assert len(leading_term_ideal(buchberger(m2, DegRevLex()))) == 6


def test_unit_ideal():
    gb = buchberger([x * y - 1, x], DegRevLex())
    assert gb.is_unit()


def test_cofactors_reassemble():
    gens = [x**2 - y, x * y - z, y**2 - x * z]
    f = x**3 * y + 2 * z**2 - y
    nf, q = reduce(f, gens, DegRevLex())
    total = nf
    for a, g in zip(q, gens):
        total = total + a * g
    assert total == f


# --------------------------------------------------------------------------
# properties

expo = st.tuples(*[st.integers(0, 2)] * 3)
small = st.dictionaries(expo, st.integers(-3, 3).filter(bool), min_size=1, max_size=3).map(
    lambda d: Polynomial(R, d))


@settings(max_examples=25, deadline=None)
@given(st.lists(small, min_size=1, max_size=3), st.sampled_from([("grevlex", DegRevLex()), ("lex", Lex())]))
def test_matches_sympy(gens, order):
    name, o = order
    assert set(buchberger(gens, o)) == sympy_groebner(gens, R, name)


@settings(max_examples=25, deadline=None)
@given(st.lists(small, min_size=1, max_size=3), st.randoms(use_true_random=False))
def test_unique_under_permutation(gens, rnd):
    gb = buchberger(gens, DegRevLex())
    shuffled = list(gens)
    rnd.shuffle(shuffled)
    assert set(buchberger(shuffled, DegRevLex())) == set(gb)
    assert is_groebner_basis(list(gb), DegRevLex())
    for i, f in enumerate(gb):
        for g in list(gb)[i + 1:]:
            assert gb.normal_form(s_polynomial(f, g, DegRevLex())).is_zero()


@settings(max_examples=25, deadline=None)
@given(st.lists(small, min_size=1, max_size=3), small, small)
def test_membership_monotone(gens, f, g):
    gb = buchberger(gens, DegRevLex())
    assert ideal_member(f * gens[0], gb)
    if ideal_member(f, gb):
        assert ideal_member(g * f, gb)


def test_reduced_and_monic():
    rnd = random.Random(3)
    for _ in range(10):
        gens = [Polynomial(R, {tuple(rnd.randint(0, 2) for _ in range(3)): rnd.randint(-2, 2) or 1
                               for _ in range(3)}) for _ in range(2)]
        gb = list(buchberger(gens, DegRevLex()))
        lms = [g.leading_monomial(DegRevLex()) for g in gb]
        for g in gb:
            assert g.leading_coefficient(DegRevLex()) == 1
            for m in g.coeffs:
                for lm in lms:
                    if lm != g.leading_monomial(DegRevLex()):
                        assert not all(a >= b for a, b in zip(m, lm))
