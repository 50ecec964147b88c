from __future__ import annotations

import logging
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from multiprocessing.pool import ThreadPool as Pool

import sympy

from sl3cycles.architecture.profiler import timing
from sl3cycles.control.cocycle import boundary, phi, sigma_hat
from sl3cycles.control.links import descending_link
from sl3cycles.control.morse import MorseTable
from sl3cycles.model.apartment import Vertex, base_chamber, z
from sl3cycles.settings import require_capacity

log = logging.getLogger("pairing")


class PairingUncertified(Exception):
    pass


class CertificateKind(Enum):
    DIAGONAL = "diagonal"
    HEIGHT_SEPARATION = "height-separation"
    DISJOINT_SUPPORT = "disjoint-support"


@dataclass(frozen=True)
class PairingCertificate:
    m: int
    n: int
    kind: CertificateKind
    value: Fraction
    detail: str
    extrapolated: bool = False


def cycle_support(n: int) -> frozenset[Vertex]:
    """Vertices of the chamber whose translates carry the n-th cycle."""
    return frozenset(base_chamber(n).vertices)


def certify_pairing(m: int, n: int, table: MorseTable) -> PairingCertificate:
    if m < 0 or n < 0:
        raise ValueError(f"negative pairing index ({m}, {n})")

    if m == n:
        chain = sigma_hat(n)
        if not boundary(chain).is_zero():
            raise PairingUncertified(f"projected cycle for n = {n} has nonzero boundary")
        detail = f"phi evaluated on the projected cycle {chain}"
        return PairingCertificate(m, n, CertificateKind.DIAGONAL, phi(chain), detail)

    if m > n:
        support_height = max(table.h(v) for v in cycle_support(n))
        lowest = min((table.h(v) for v in descending_link(z(m), table).vertices), default=None)
        if lowest is None or lowest <= support_height:
            raise PairingUncertified(f"cycle {n} reaches the descending link of z_{m}")
        return PairingCertificate(
            m,
            n,
            CertificateKind.HEIGHT_SEPARATION,
            Fraction(0),
            f"cycle heights stay at or below {support_height}, "
            f"descending link of z_{m} starts at {lowest}",
        )

    if z(m) in cycle_support(n):
        raise PairingUncertified(f"z_{m} lies in the support of cycle {n}")
    return PairingCertificate(
        m,
        n,
        CertificateKind.DISJOINT_SUPPORT,
        Fraction(0),
        f"z_{m} is not a vertex of the chamber carrying cycle {n}; "
        "the sector meets each orbit once",
        extrapolated=True,
    )


def local_pairing(m: int, n: int, table: MorseTable) -> Fraction:
    return certify_pairing(m, n, table).value


@dataclass(frozen=True)
class PairingMatrix:
    """Rows are indexed by the cocycle m, columns by the cycle n."""

    n_max: int
    entries: tuple[tuple[Fraction, ...], ...]
    certificates: tuple[PairingCertificate, ...]

    @property
    def diagonal(self) -> tuple[Fraction, ...]:
        return tuple(self.entries[k][k] for k in range(self.n_max + 1))

    def is_upper_triangular(self) -> bool:
        return all(self.entries[m][n] == 0 for m in range(self.n_max + 1) for n in range(m))

    def rank(self) -> int:
        matrix = sympy.Matrix(
            [
                [sympy.Rational(value.numerator, value.denominator) for value in row]
                for row in self.entries
            ]
        )
        return matrix.rank()


@timing
def pairing_matrix(n_max: int, table: MorseTable, workers: int = 4) -> PairingMatrix:
    require_capacity(table.i_max, n_max)

    indexes = [(m, n) for m in range(n_max + 1) for n in range(n_max + 1)]
    with Pool(workers) as pool:
        certificates = pool.starmap(certify_pairing, [(m, n, table) for m, n in indexes])

    size = n_max + 1
    entries = tuple(
        tuple(certificates[m * size + n].value for n in range(size)) for m in range(size)
    )
    log.info("Pairing matrix for n <= %d assembled", n_max)
    return PairingMatrix(n_max, entries, tuple(certificates))
