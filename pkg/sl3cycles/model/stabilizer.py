from __future__ import annotations

import logging
import random
from dataclasses import dataclass
from typing import Optional

from sl3cycles.enums import BoundaryClass
from sl3cycles.model.apartment import (
    ApartmentVertex,
    Cell,
    NotInSector,
    boundary_class,
    sector_contains,
)
from sl3cycles.model.matrix import SIGN_DIAGONALS, Mat3, diagonal, elementary
from sl3cycles.model.poly import T, Poly

log = logging.getLogger("stabilizer")

OFF_DIAGONAL = tuple((k, l) for k in range(3) for l in range(3) if k != l)


@dataclass(frozen=True)
class StabilizerProfile:
    """
    Degree bounds B[k][l]: an integral determinant-one matrix stabilizes the cell
    iff deg(gamma_kl) <= B[k][l] for every entry.
    """

    bounds: tuple[tuple[int, int, int], ...]

    def bound(self, k: int, l: int) -> int:
        return self.bounds[k][l]

    def upper(self) -> tuple[int, int, int]:
        """Bounds of the (1,2), (2,3) and (1,3) entries."""
        return self.bounds[0][1], self.bounds[1][2], self.bounds[0][2]

    def meet(self, other: StabilizerProfile) -> StabilizerProfile:
        rows = zip(self.bounds, other.bounds)
        return StabilizerProfile(
            tuple(tuple(min(a, b) for a, b in zip(mine, theirs)) for mine, theirs in rows)
        )


def vertex_profile(vertex: ApartmentVertex) -> StabilizerProfile:
    if not sector_contains(vertex):
        raise NotInSector(f"{vertex} is not in the sector")

    d = vertex.exponents
    return StabilizerProfile(tuple(tuple(d[k] - d[l] for l in range(3)) for k in range(3)))


def edge_profile(cell: Cell) -> StabilizerProfile:
    """Pointwise stabilizer of a cell: entrywise minimum over its apartment vertices."""
    profiles = [vertex_profile(vertex) for vertex in cell.original_vertices]
    result = profiles[0]
    for profile in profiles[1:]:
        result = result.meet(profile)
    return result


def membership(gamma: Mat3, profile: StabilizerProfile) -> bool:
    if not gamma.is_integral() or gamma.det() != 1:
        return False

    return all(gamma.entry(k, l).degree <= profile.bound(k, l) for k in range(3) for l in range(3))


def oracle_stabilizes(gamma: Mat3, vertex: ApartmentVertex) -> bool:
    """
    Stabilization decided from g^-1 gamma g having entries in Q[[t^-1]], g = diag(t^i, t^j, 1).
    The denominator t^-i is cleared first so the product stays polynomial.
    """
    if not sector_contains(vertex):
        raise NotInSector(f"{vertex} is not in the sector")
    if not gamma.is_integral() or gamma.det() != 1:
        return False

    i, j = vertex.i, vertex.j
    left = diagonal(1, T ** (i - j), T ** i)
    right = diagonal(T ** i, T ** j, 1)
    scaled = left @ gamma @ right
    return all(scaled.entry(k, l).degree <= i for k in range(3) for l in range(3))


def enumerate_generators(profile: StabilizerProfile) -> list[Mat3]:
    generators = []
    for k, l in OFF_DIAGONAL:
        for exponent in range(profile.bound(k, l) + 1):
            generators.append(elementary(k + 1, l + 1, Poly.monomial(1, exponent)))
    generators.extend(SIGN_DIAGONALS[1:])
    return generators


def form_parameters(vertex: ApartmentVertex) -> Optional[tuple[int, int]]:
    """(k, m) of the block form of the stabilizer; None at the standard vertex."""
    kind = boundary_class(vertex)
    if kind == BoundaryClass.STANDARD:
        return None
    if kind == BoundaryClass.INTERIOR:
        return vertex.i - vertex.j, vertex.j
    return vertex.i, 0


def sample_member(rng: random.Random, profile: StabilizerProfile, factors: int = 6) -> Mat3:
    allowed = [(k, l) for k, l in OFF_DIAGONAL if profile.bound(k, l) >= 0]
    gamma = rng.choice(SIGN_DIAGONALS)
    for _ in range(rng.randint(1, factors)):
        k, l = rng.choice(allowed)
        exponent = rng.randint(0, profile.bound(k, l))
        coefficient = rng.choice((-2, -1, 1, 2, 3))
        gamma = gamma @ elementary(k + 1, l + 1, Poly.monomial(coefficient, exponent))
    return gamma


def sample_violation(rng: random.Random, profile: StabilizerProfile, factors: int = 6) -> Mat3:
    """A member times one elementary matrix whose entry breaks its degree bound."""
    member = sample_member(rng, profile, max(factors - 1, 1))
    k, l = rng.choice(OFF_DIAGONAL)
    exponent = max(profile.bound(k, l) + 1, 0)
    planted = elementary(k + 1, l + 1, Poly.monomial(rng.choice((-1, 1, 2)), exponent))
    return member @ planted if rng.randint(0, 1) else planted @ member
