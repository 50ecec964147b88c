from fractions import Fraction

from sl3cycles.control.rational_format import (
    rational_matrix_to_strings,
    rational_to_string,
    string_to_rational,
    strings_to_rational_matrix,
)


def test_integers_keep_their_denominator():
    assert rational_to_string(-2) == "-2/1"
    assert rational_to_string(Fraction(0)) == "0/1"


def test_fractions_are_reduced():
    assert rational_to_string(Fraction(4, -6)) == "-2/3"


def test_parse_with_and_without_denominator():
    assert string_to_rational("-2/1") == -2
    assert string_to_rational(" 3 ") == 3
    assert string_to_rational("6/4") == Fraction(3, 2)


def test_matrix_text_form():
    rows = ((Fraction(-2), Fraction(0)), (Fraction(0), Fraction(1, 2)))
    text = rational_matrix_to_strings(rows)
    assert text == [["-2/1", "0/1"], ["0/1", "1/2"]]
    assert strings_to_rational_matrix(text) == rows
