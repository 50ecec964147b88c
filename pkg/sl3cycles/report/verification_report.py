from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Optional

from sl3cycles.control.rational_format import rational_matrix_to_strings, strings_to_rational_matrix
from sl3cycles.report.status import CheckStatus


@dataclass(frozen=True)
class LemmaResult:
    id: str
    title: str
    checks: int
    status: CheckStatus
    detail: str = ""

    def to_dict(self) -> dict[str, Any]:
        return {
            "id": self.id,
            "title": self.title,
            "checks": self.checks,
            "status": self.status.value,
            "detail": self.detail,
        }

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> LemmaResult:
        status = CheckStatus(data["status"])
        return cls(data["id"], data["title"], int(data["checks"]), status, data.get("detail", ""))


@dataclass(frozen=True)
class VerificationReport:
    parameters: dict[str, int]
    lemmas: tuple[LemmaResult, ...]
    pairing_matrix: Optional[tuple[tuple[Fraction, ...], ...]]
    flags: tuple[str, ...] = ()
    environment: dict[str, str] = field(default_factory=dict)
    timing: dict[str, int] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(lemma.status != CheckStatus.FAIL for lemma in self.lemmas)

    def lemma(self, lemma_id: str) -> LemmaResult:
        return next(lemma for lemma in self.lemmas if lemma.id == lemma_id)

    def outcome(self) -> VerificationReport:
        """The run-independent part: no environment block, no timings."""
        return VerificationReport(self.parameters, self.lemmas, self.pairing_matrix, self.flags)

    def to_dict(self) -> dict[str, Any]:
        return {
            "parameters": dict(self.parameters),
            "lemmas": [lemma.to_dict() for lemma in self.lemmas],
            "pairing_matrix": (
                rational_matrix_to_strings(self.pairing_matrix)
                if self.pairing_matrix is not None
                else None
            ),
            "flags": list(self.flags),
            "environment": dict(self.environment),
            "timing": dict(self.timing),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> VerificationReport:
        matrix = data.get("pairing_matrix")
        return cls(
            parameters={key: int(value) for key, value in data["parameters"].items()},
            lemmas=tuple(LemmaResult.from_dict(lemma) for lemma in data["lemmas"]),
            pairing_matrix=strings_to_rational_matrix(matrix) if matrix is not None else None,
            flags=tuple(data.get("flags", ())),
            environment=dict(data.get("environment", {})),
            timing={key: int(value) for key, value in data.get("timing", {}).items()},
        )

    @classmethod
    def from_json(cls, text: str) -> VerificationReport:
        return cls.from_dict(json.loads(text))
