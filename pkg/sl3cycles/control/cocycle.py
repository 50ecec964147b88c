from __future__ import annotations

import logging
import random
from fractions import Fraction

from sl3cycles.model.chains import (
    ChamberChain,
    LinkChain,
    LinkFamily,
    QuotientLinkEdge,
    VertexChain,
)
from sl3cycles.model.poly import Poly
from sl3cycles.model.unipotent import Unipotent

log = logging.getLogger("cocycle")

WORD_SIGNS = (1, -1, 1, -1, 1, -1, 1, -1)


def phi(chain: LinkChain) -> Fraction:
    """The local cocycle: eta(q, r) evaluates to q * r."""
    return sum((coefficient * edge.q * edge.r for edge, coefficient in chain.items()), Fraction(0))


def shift_chain(chain: LinkChain, a, b) -> LinkChain:
    a, b = Fraction(a), Fraction(b)
    return LinkChain((QuotientLinkEdge(edge.q + a, edge.r + b), c) for edge, c in chain.items())


def boundary(chain: LinkChain) -> VertexChain:
    """d eta(q, r) = R_r - Q_q."""
    terms = []
    for edge, coefficient in chain.items():
        terms.append(((LinkFamily.R.value, edge.r), coefficient))
        terms.append(((LinkFamily.Q.value, edge.q), -coefficient))
    return VertexChain(terms)


def four_loop(q1, r1, q2, r2) -> LinkChain:
    """The square Q_q1 - R_r1 - Q_q2 - R_r2 - Q_q1 as a cycle."""
    return (
        LinkChain.edge(q1, r1)
        - LinkChain.edge(q2, r1)
        + LinkChain.edge(q2, r2)
        - LinkChain.edge(q1, r2)
    )


def sigma_words(n: int) -> tuple[tuple[int, Unipotent], ...]:
    """
    The eight signed words in u1 = e12(t^n), u2 = e23(t^n) tracing the boundary
    of the commutator relation; the fifth word is [u1^-1, u2].
    """
    if n < 0:
        raise ValueError(f"no cycle with index {n}")

    u1 = Unipotent.e12(Poly.monomial(1, n))
    u2 = Unipotent.e23(Poly.monomial(1, n))
    u1_inv, u2_inv = u1.inverse(), u2.inverse()

    words = (
        Unipotent.identity(),
        u1_inv,
        u1_inv * u2,
        u1_inv * u2 * u1,
        u1_inv.commutator(u2),
        u1 * u2_inv * u1_inv,
        u1 * u2_inv,
        u1,
    )
    return tuple(zip(WORD_SIGNS, words))


def sigma(n: int) -> ChamberChain:
    return ChamberChain(tuple((Fraction(sign), word) for sign, word in sigma_words(n)))


def project(n: int, chain: ChamberChain) -> LinkChain:
    """Image in the quotient descending link at z_n: u * C goes to the edge labelled by u."""
    return LinkChain((QuotientLinkEdge(*word.label(n)), coefficient) for coefficient, word in chain)


def sigma_hat(n: int) -> LinkChain:
    return project(n, sigma(n))


def displayed_sigma_hat() -> LinkChain:
    """The seven-term chain with +eta(-1, 0). It evaluates to -2 but its boundary is not zero."""
    return (
        LinkChain.edge(0, 0, 2)
        + LinkChain.edge(-1, 0)
        + LinkChain.edge(-1, 1)
        - LinkChain.edge(0, 1)
        - LinkChain.edge(0, -1)
        + LinkChain.edge(1, -1)
        - LinkChain.edge(1, 0)
    )


def random_rational(rng: random.Random, bound: int = 9) -> Fraction:
    return Fraction(rng.randint(-bound, bound), rng.randint(1, 6))


def random_cycle(rng: random.Random, loops: int = 3) -> LinkChain:
    """Random rational combination of 4-loops, so a cycle of the quotient link."""
    cycle = LinkChain()
    for _ in range(loops):
        loop = four_loop(*(random_rational(rng) for _ in range(4)))
        cycle = cycle + random_rational(rng) * loop
    return cycle
