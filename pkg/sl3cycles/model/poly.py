import logging
from fractions import Fraction
from functools import total_ordering
from typing import Iterable, Union

log = logging.getLogger("poly")

Rat = Fraction
Scalar = Union[int, Fraction]


class NegativeTruncation(Exception):
    pass


@total_ordering
class _MinusInfinity:
    """Degree of the zero polynomial. Compares below every integer."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __lt__(self, other) -> bool:
        return not isinstance(other, _MinusInfinity)

    def __eq__(self, other) -> bool:
        return isinstance(other, _MinusInfinity)

    def __hash__(self) -> int:
        return hash("-inf")

    def __add__(self, other):
        return self

    __radd__ = __add__

    def __repr__(self) -> str:
        return "-inf"


MINUS_INFINITY = _MinusInfinity()

Degree = Union[int, _MinusInfinity]


def _canonical(value) -> Scalar:
    # integral coefficients are kept as int so integer matrices stay on fast arithmetic
    if isinstance(value, bool):
        return int(value)
    if isinstance(value, int):
        return value
    if not isinstance(value, Fraction):
        value = Fraction(value)
    if value.denominator == 1:
        return value.numerator
    return value


class Poly:
    """
    Immutable polynomial in Q[t] with dense coefficients.
    Index k of the coefficient tuple holds the coefficient of t^k and the
    highest stored coefficient is never zero.
    """

    __slots__ = ("_coeffs", "_hash")

    def __init__(self, coeffs: Iterable = ()):
        values = [_canonical(c) for c in coeffs]
        while values and values[-1] == 0:
            values.pop()
        self._coeffs: tuple[Scalar, ...] = tuple(values)
        self._hash = None

    @classmethod
    def _trusted(cls, values: list) -> "Poly":
        poly = cls.__new__(cls)
        while values and values[-1] == 0:
            values.pop()
        poly._coeffs = tuple(_canonical(c) for c in values)
        poly._hash = None
        return poly

    @classmethod
    def constant(cls, value) -> "Poly":
        return cls((value,))

    @classmethod
    def monomial(cls, value, exponent: int) -> "Poly":
        if exponent < 0:
            raise NegativeTruncation(f"negative exponent {exponent}")
        return cls([0] * exponent + [value])

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(c) for c in self._coeffs)

    @property
    def degree(self) -> Degree:
        if not self._coeffs:
            return MINUS_INFINITY
        return len(self._coeffs) - 1

    def is_zero(self) -> bool:
        return not self._coeffs

    def coeff(self, k: int) -> Fraction:
        if k < 0:
            raise NegativeTruncation(f"negative exponent {k}")
        if k >= len(self._coeffs):
            return Fraction(0)
        return Fraction(self._coeffs[k])

    def split(self, n: int) -> tuple["Poly", "Poly"]:
        """
        Write p = p' + p'' where every term of p' has exponent >= n + 1 and deg(p'') <= n.
        """
        if n < 0:
            raise NegativeTruncation(f"cannot split at {n}")
        high = [0] * (n + 1) + list(self._coeffs[n + 1:])
        return Poly._trusted(high), Poly._trusted(list(self._coeffs[:n + 1]))

    def mod(self, n: int) -> "Poly":
        """Canonical representative modulo (t^(n+1))."""
        if n < 0:
            raise NegativeTruncation(f"cannot truncate at {n}")
        return Poly._trusted(list(self._coeffs[:n + 1]))

    def is_integral(self) -> bool:
        return all(isinstance(c, int) for c in self._coeffs)

    def terms(self) -> list[tuple[int, Fraction]]:
        return [(k, Fraction(c)) for k, c in enumerate(self._coeffs) if c]

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented

        left, right = self._coeffs, other._coeffs
        if len(left) < len(right):
            left, right = right, left
        values = list(left)
        for k, c in enumerate(right):
            values[k] += c
        return Poly._trusted(values)

    __radd__ = __add__

    def __neg__(self) -> "Poly":
        return Poly._trusted([-c for c in self._coeffs])

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if not self._coeffs or not other._coeffs:
            return ZERO

        right = [(k, c) for k, c in enumerate(other._coeffs) if c]
        values = [0] * (len(self._coeffs) + len(other._coeffs) - 1)
        for i, a in enumerate(self._coeffs):
            if not a:
                continue
            for j, b in right:
                values[i + j] += a * b
        return Poly._trusted(values)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "Poly":
        if exponent < 0:
            raise ValueError("polynomials have no negative powers")
        result = ONE
        for _ in range(exponent):
            result = result * self
        return result

    def __bool__(self) -> bool:
        return bool(self._coeffs)

    def __eq__(self, other) -> bool:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(self._coeffs)
        return self._hash

    def __repr__(self) -> str:
        return f"Poly({str(self)!r})"

    def __str__(self) -> str:
        if not self._coeffs:
            return "0"

        parts = []
        for k in range(len(self._coeffs) - 1, -1, -1):
            c = self._coeffs[k]
            if not c:
                continue
            sign = "-" if c < 0 else "+"
            magnitude = abs(c)
            if k == 0:
                body = str(magnitude)
            else:
                power = "t" if k == 1 else f"t^{k}"
                body = power if magnitude == 1 else f"{magnitude}*{power}"
            parts.append((sign, body))

        first_sign, first_body = parts[0]
        text = ("-" if first_sign == "-" else "") + first_body
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text


def _coerce(value):
    if isinstance(value, Poly):
        return value
    if isinstance(value, (int, Fraction)):
        return Poly.constant(value)
    return NotImplemented


ZERO = Poly()
ONE = Poly.constant(1)
T = Poly.monomial(1, 1)


def as_poly(value) -> Poly:
    poly = _coerce(value)
    if poly is NotImplemented:
        raise TypeError(f"cannot use {value!r} as a polynomial")
    return poly
