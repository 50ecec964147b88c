from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Iterable, Iterator, Mapping

from sl3cycles.model.unipotent import Unipotent


@dataclass(frozen=True, order=True)
class QuotientLinkEdge:
    """Edge eta(q, r) of the quotient descending link at z_n."""

    q: Fraction
    r: Fraction

    def __str__(self) -> str:
        return f"eta({self.q},{self.r})"


class LinkFamily(Enum):
    Q = "Q"
    R = "R"


def _clean(terms: Iterable[tuple[object, Fraction]]) -> dict:
    collected: dict = {}
    for key, coefficient in terms:
        collected[key] = collected.get(key, Fraction(0)) + Fraction(coefficient)
    return {key: value for key, value in collected.items() if value}


class _SparseChain:
    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping | Iterable = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        self._terms = _clean(items)

    def coefficient(self, key) -> Fraction:
        return self._terms.get(key, Fraction(0))

    def items(self) -> list[tuple[object, Fraction]]:
        return sorted(self._terms.items())

    def is_zero(self) -> bool:
        return not self._terms

    def mass(self) -> Fraction:
        return sum((abs(c) for c in self._terms.values()), Fraction(0))

    def __iter__(self) -> Iterator:
        return iter(sorted(self._terms))

    def __len__(self) -> int:
        return len(self._terms)

    def __add__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        return type(self)(list(self._terms.items()) + list(other._terms.items()))

    def __neg__(self):
        return type(self)({key: -value for key, value in self._terms.items()})

    def __sub__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        return self + (-other)

    def __rmul__(self, scalar):
        if not isinstance(scalar, (int, Fraction)):
            return NotImplemented
        return type(self)({key: scalar * value for key, value in self._terms.items()})

    def __eq__(self, other) -> bool:
        if type(other) is not type(self):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))


class LinkChain(_SparseChain):
    """Finite Q-combination of quotient link edges."""

    @classmethod
    def edge(cls, q, r, coefficient=1) -> LinkChain:
        return cls({QuotientLinkEdge(Fraction(q), Fraction(r)): Fraction(coefficient)})

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        return " + ".join(f"{c}*{edge}" for edge, c in self.items())


class VertexChain(_SparseChain):
    """Finite Q-combination of link vertices Q_q and R_r, keyed by (family, label)."""

    @classmethod
    def vertex(cls, family: LinkFamily, label, coefficient=1) -> VertexChain:
        return cls({(family.value, Fraction(label)): Fraction(coefficient)})

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        return " + ".join(f"{c}*{family}_{label}" for (family, label), c in self.items())


@dataclass(frozen=True)
class ChamberChain:
    """Signed sum of translates u * C of the base chamber, one term per group word."""

    terms: tuple[tuple[Fraction, Unipotent], ...]

    def __len__(self) -> int:
        return len(self.terms)

    def __iter__(self):
        return iter(self.terms)
