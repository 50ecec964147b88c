from fractions import Fraction


def rational_to_string(value) -> str:
    """
    Exact text form of a rational number, always with a denominator:
    -2 becomes "-2/1", one half "1/2".
    """
    value = Fraction(value)
    return f"{value.numerator}/{value.denominator}"


def string_to_rational(text: str) -> Fraction:
    numerator, _, denominator = text.strip().partition("/")
    if not denominator:
        return Fraction(int(numerator))
    return Fraction(int(numerator), int(denominator))


def rational_matrix_to_strings(rows) -> list[list[str]]:
    return [[rational_to_string(value) for value in row] for row in rows]


def strings_to_rational_matrix(rows) -> tuple[tuple[Fraction, ...], ...]:
    return tuple(tuple(string_to_rational(text) for text in row) for row in rows)
