import random

import pytest
import sympy
from sympy.polys.subresultants_qq_zz import sylvester
from hypothesis import given, settings
from hypothesis import strategies as st

from cycpres import presentations as pres
from cycpres.alexander import (
    IntPolynomial,
    PolynomialError,
    branched_cover_order,
    format_polynomial,
    resultant,
    t_power_minus_one,
    torus_alexander,
    word_polynomial,
)
from cycpres.homology import INFINITE, abelianization, determinant, relation_matrix
from cycpres.words import cyclic_reduce, free_reduce, parse_word, rotate

t = sympy.symbols("t")


def to_sympy(f: IntPolynomial):
    return sum(c * t**k for k, c in enumerate(f.coeffs))


def sympy_sylvester_det(f, g):
    return int(sylvester(to_sympy(f), to_sympy(g), t).det())


def sympy_resultant(f, g):
    return int(sympy.resultant(to_sympy(f), to_sympy(g), t))


def root_product(f, g):
    # a^deg(g) * prod g(alpha) over the roots of f, evaluated exactly
    a = f.coeffs[-1]
    roots = sympy.Poly(to_sympy(f), t).all_roots()
    value = a ** g.degree * sympy.prod([to_sympy(g).subs(t, r) for r in roots])
    return int(sympy.nsimplify(sympy.simplify(value)))


def test_word_polynomial_examples():
    assert word_polynomial(pres.figure_eight(3).w) == IntPolynomial([-1, 3, -1])
    assert str(word_polynomial(pres.figure_eight(3).w)) == "-1 + 3*t - t^2"
    assert word_polynomial(parse_word("x0 x1^2 x2 x1^-1", 3)) == IntPolynomial([1, 1, 1])
    assert word_polynomial(parse_word("", 3)).is_zero()


def test_torus_alexander_against_long_division():
    for p, q in [(3, 2), (5, 2), (7, 2), (4, 3), (5, 3), (7, 5)]:
        num = (t ** (p * q) - 1) * (t - 1)
        den = (t**p - 1) * (t**q - 1)
        quo, rem = sympy.div(num, den, t)
        assert rem == 0
        assert sympy.expand(to_sympy(torus_alexander(p, q)) - quo) == 0
    assert torus_alexander(3, 2) == IntPolynomial([1, -1, 1])
    assert torus_alexander(5, 2) == IntPolynomial([1, -1, 1, -1, 1])
    assert torus_alexander(2, 3) == torus_alexander(3, 2)
    with pytest.raises(PolynomialError):
        torus_alexander(4, 2)


def test_resultant_examples():
    assert abs(resultant(IntPolynomial([-1, 1]), IntPolynomial([-2, 1]))) == 1
    assert resultant(IntPolynomial([3, 0, 5, 1]), IntPolynomial([1])) == 1
    assert resultant(IntPolynomial([1, -1, 1]), t_power_minus_one(6)) == 0
    with pytest.raises(PolynomialError):
        resultant(IntPolynomial(), IntPolynomial())


def random_poly(rng, deg):
    c = [rng.randint(-4, 4) for _ in range(deg)] + [rng.choice([-3, -2, -1, 1, 2, 3])]
    return IntPolynomial(c)


def test_resultant_against_sympy():
    rng = random.Random(5)
    for _ in range(60):
        f, g = random_poly(rng, rng.randint(1, 5)), random_poly(rng, rng.randint(1, 5))
        assert resultant(f, g) == sympy_sylvester_det(f, g)
        # sympy.resultant can differ in sign; only magnitudes are compared
        assert abs(resultant(f, g)) == abs(sympy_resultant(f, g))


def test_resultant_sign_by_roots():
    f = IntPolynomial([-1, -1])
    g = IntPolynomial([1, -2, 1, 0, 4, -3])
    assert resultant(f, g) == root_product(f, g) == -11


def test_resultant_multiplicative_and_swap():
    rng = random.Random(9)
    for _ in range(40):
        f, g, h = (random_poly(rng, rng.randint(1, 4)) for _ in range(3))
        assert resultant(f, g * h) == resultant(f, g) * resultant(f, h)
        sign = (-1) ** (f.degree * g.degree)
        assert resultant(f, g) == sign * resultant(g, f)


def test_branched_cover_examples():
    d = torus_alexander(3, 2)
    assert branched_cover_order(d, 5) == 1
    assert branched_cover_order(d, 4) == 3
    assert branched_cover_order(d, 6) == INFINITE
    assert branched_cover_order(torus_alexander(5, 2), 2) == 5
    assert torus_alexander(5, 2)(-1) == 5
    for p, q in [(3, 2), (5, 2), (4, 3), (5, 3)]:
        assert branched_cover_order(torus_alexander(p, q), 1) == 1


@pytest.mark.parametrize("m", range(2, 13))
@pytest.mark.parametrize("d", range(1, 4))
def test_sieradski_order_equals_cover_order(m, d):
    assert abelianization(pres.sieradski_q2(m, d)).order() == branched_cover_order(torus_alexander(2 * d + 1, 2), m)


@pytest.mark.parametrize("n", range(2, 9))
def test_halved_presentations_cover_orders(n):
    assert abelianization(pres.half_q3(n)).order() == branched_cover_order(torus_alexander(3, 2), 2 * n)
    if n <= 6:
        assert abelianization(pres.half_q5(n)).order() == branched_cover_order(torus_alexander(5, 2), 2 * n)


def test_format_polynomial():
    assert format_polynomial(IntPolynomial([])) == "0"
    assert format_polynomial(IntPolynomial([0, -2, 0, 1])) == "-2*t + t^3"
    assert format_polynomial(IntPolynomial([5])) == "5"


@st.composite
def cyclic_words(draw):
    n = draw(st.integers(1, 8))
    letters = draw(st.lists(st.tuples(st.integers(0, n - 1), st.sampled_from([1, -1])), min_size=1, max_size=10))
    return n, cyclic_reduce(free_reduce(letters, n))


@settings(max_examples=200, deadline=None)
@given(cyclic_words())
def test_circulant_bridge(data):
    n, w = data
    if not w.letters:
        return
    P = pres.CyclicPresentation(n, w)
    det = abs(determinant(relation_matrix(P)))
    f = word_polynomial(w)
    res = 0 if f.is_zero() else abs(resultant(f, t_power_minus_one(n)))
    assert det == res


@settings(max_examples=200, deadline=None)
@given(cyclic_words(), st.integers(0, 12), st.integers(1, 9))
def test_rotation_invariance_of_cover_order(data, k, m):
    n, w = data
    f, g = word_polynomial(w), word_polynomial(rotate(w, k))
    if f.is_zero():
        assert g.is_zero()
        return
    assert abs(resultant(f, t_power_minus_one(m))) == abs(resultant(g, t_power_minus_one(m)))
