from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gsbasis.freealg import Alphabet, AlphabetMismatch, Poly, all_words, leading_word, make_monic, occurrences, poly_arith
from gsbasis.orders import DegLex

XY = Alphabet(["x", "y"])
ORD = DegLex(2)


def P(text, alpha=XY):
    from gsbasis.io import parse_poly

    return parse_poly(text, alpha)


def test_add_cancels_to_zero():
    assert poly_arith(P("x - 1"), P("1 - x"), "add").is_zero()


def test_left_multiplication_by_word():
    assert poly_arith(P("y - 1"), None, "lmul", XY.parse_word("x")) == P("x y - x")


def test_scale():
    assert poly_arith(P("3 x y"), None, "scale", Fraction(2, 3)) == P("2 x y")


def test_leading_word_deglex():
    w, c = leading_word(P("2 x y + y x - 1"), ORD)
    assert XY.format_word(w) == "y x" and c == 1


def test_leading_word_hnn(z4):
    f = Poly(z4.alphabet, {z4.parse("a3 t"): 1, z4.parse("a t a2"): -1})
    w, c = leading_word(f, z4.order)
    assert z4.format(w) == "a3 t" and c == 1


def test_make_monic():
    assert make_monic(P("2 x y - 4"), ORD) == P("x y - 2")
    assert make_monic(P("-1/3 y + x"), ORD) == P("y - 3 x")


def test_zero_has_no_leading_word():
    with pytest.raises(ValueError):
        leading_word(Poly.zero(XY), ORD)


def test_alphabet_mismatch():
    other = Alphabet(["x", "z"])
    with pytest.raises(AlphabetMismatch):
        Poly.word(XY, (0,)) + Poly.word(other, (0,))


def test_float_coefficients_rejected():
    with pytest.raises(TypeError):
        Poly(XY, {(0,): 0.5})


@pytest.mark.parametrize("bad", ["1", "x y", "+", "="])
def test_reserved_letter_names(bad):
    with pytest.raises(ValueError):
        Alphabet(["a", bad])


def test_word_round_trip():
    for w in all_words(2, 3):
        assert XY.parse_word(XY.format_word(w)) == w
    assert XY.format_word(()) == "1"


def test_format():
    assert P("2/3 x y - y + 1").format(ORD) == "2/3 x y - y + 1"


def test_occurrences_overlapping():
    assert list(occurrences((0, 0, 0), (0, 0))) == [0, 1]


def test_all_words_count():
    assert len(list(all_words(3, 2))) == 1 + 3 + 9
    assert len(list(all_words(3, 2, minlen=2))) == 9


# ring axioms

words = st.lists(st.integers(0, 1), max_size=3).map(tuple)
coeffs = st.fractions(min_value=-5, max_value=5, max_denominator=6)
polys = st.dictionaries(words, coeffs, max_size=4).map(lambda d: Poly(XY, d))


@settings(max_examples=60, deadline=None)
@given(polys, polys, polys)
def test_ring_axioms(f, g, h):
    zero = Poly.zero(XY)
    one = Poly.word(XY, ())
    assert f + g == g + f
    assert (f + g) + h == f + (g + h)
    assert f + zero == f and f - f == zero
    assert (f * g) * h == f * (g * h)
    assert f * (g + h) == f * g + f * h
    assert (f + g) * h == f * h + g * h
    assert one * f == f == f * one


@settings(max_examples=60, deadline=None)
@given(polys, words, words, coeffs)
def test_sandwich_and_scale(f, a, b, c):
    wa, wb = Poly.word(XY, a), Poly.word(XY, b)
    assert f.sandwich(a, b) == wa * f * wb
    assert f.scale(c) == Poly.word(XY, (), c) * f


@settings(max_examples=60, deadline=None)
@given(polys)
def test_monic_and_leading_invariants(f):
    if f.is_zero():
        return
    w, c = f.leading(ORD)
    assert c != 0 and all(not ORD.less(w, u) for u in f)
    m = f.monic(ORD)
    assert m.leading(ORD) == (w, 1)
    assert m.scale(c) == f
