from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from sl3cycles.model.matrix import Mat3
from sl3cycles.model.poly import ONE, ZERO, NegativeTruncation, Poly, as_poly


@dataclass(frozen=True)
class Unipotent:
    """
    Upper unitriangular matrix [[1, x, z], [0, 1, y], [0, 0, 1]] over Q[t].
    """

    x: Poly = ZERO
    y: Poly = ZERO
    z: Poly = ZERO

    def __post_init__(self):
        for name in ("x", "y", "z"):
            object.__setattr__(self, name, as_poly(getattr(self, name)))

    @classmethod
    def identity(cls) -> Unipotent:
        return cls()

    @classmethod
    def e12(cls, a) -> Unipotent:
        return cls(x=as_poly(a))

    @classmethod
    def e23(cls, a) -> Unipotent:
        return cls(y=as_poly(a))

    @classmethod
    def e13(cls, a) -> Unipotent:
        return cls(z=as_poly(a))

    def __mul__(self, other: Unipotent) -> Unipotent:
        return Unipotent(self.x + other.x, self.y + other.y, self.z + other.z + self.x * other.y)

    def inverse(self) -> Unipotent:
        return Unipotent(-self.x, -self.y, self.x * self.y - self.z)

    def commutator(self, other: Unipotent) -> Unipotent:
        """[a, b] = a^-1 b^-1 a b"""
        return self.inverse() * other.inverse() * self * other

    def is_identity(self) -> bool:
        return not (self.x or self.y or self.z)

    def to_matrix(self) -> Mat3:
        return Mat3.of(((ONE, self.x, self.z), (ZERO, ONE, self.y), (ZERO, ZERO, ONE)))

    def mod(self, n: int) -> UnipotentModN:
        return UnipotentModN(n, self.x.mod(n), self.y.mod(n), self.z.mod(n))

    def label(self, n: int) -> tuple[Fraction, Fraction]:
        return self.x.coeff(n), self.y.coeff(n)

    def in_congruence_subgroup(self, n: int) -> bool:
        return self.mod(n).is_identity()

    def congruence_split(self, n: int) -> tuple[Unipotent, Unipotent]:
        """
        Factor self = u1 * u2 with u1 congruent to the identity modulo t^(n+1)
        and every entry of u2 of degree at most n.
        """
        x_high, x_low = self.x.split(n)
        y_high, y_low = self.y.split(n)
        z_high, z_low = (self.z - x_high * y_low).split(n)
        return Unipotent(x_high, y_high, z_high), Unipotent(x_low, y_low, z_low)

    def __str__(self) -> str:
        return f"u(x={self.x}, y={self.y}, z={self.z})"


@dataclass(frozen=True)
class UnipotentModN:
    """Element of the quotient U_n\\U, stored by entries truncated to degree n."""

    n: int
    x: Poly = ZERO
    y: Poly = ZERO
    z: Poly = ZERO

    def __post_init__(self):
        if self.n < 0:
            raise NegativeTruncation(f"no congruence quotient at level {self.n}")
        for name in ("x", "y", "z"):
            value = as_poly(getattr(self, name))
            object.__setattr__(self, name, value.mod(self.n) if value.degree > self.n else value)

    def _check_level(self, other: UnipotentModN):
        if other.n != self.n:
            raise ValueError(f"cannot combine levels {self.n} and {other.n}")

    def __mul__(self, other: UnipotentModN) -> UnipotentModN:
        self._check_level(other)
        z = self.z + other.z + self.x * other.y
        return UnipotentModN(self.n, self.x + other.x, self.y + other.y, z)

    def inverse(self) -> UnipotentModN:
        return UnipotentModN(self.n, -self.x, -self.y, self.x * self.y - self.z)

    def commutator(self, other: UnipotentModN) -> UnipotentModN:
        return self.inverse() * other.inverse() * self * other

    def is_identity(self) -> bool:
        return not (self.x or self.y or self.z)

    def lift(self) -> Unipotent:
        return Unipotent(self.x, self.y, self.z)

    def label(self) -> tuple[Fraction, Fraction]:
        return self.x.coeff(self.n), self.y.coeff(self.n)
