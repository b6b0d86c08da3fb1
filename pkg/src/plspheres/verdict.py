"""Three-valued verdicts and the node-expansion budget shared by all searches."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Any

DEFAULT_BUDGET = 10**6


class Verdict(str, Enum):
    YES = "yes"
    NO = "no"
    UNKNOWN = "unknown"


class BudgetExhausted(Exception):
    pass


class Budget:
    """Counts backtracking node expansions; raises once ``limit`` is used up."""

    def __init__(self, limit: int = DEFAULT_BUDGET):
        self.limit = limit
        self.spent = 0

    def tick(self, n: int = 1) -> None:
        if self.spent + n > self.limit:
            self.spent = self.limit
            raise BudgetExhausted
        self.spent += n

    @classmethod
    def coerce(cls, budget: "int | Budget") -> "Budget":
        return budget if isinstance(budget, Budget) else cls(budget)


@dataclass(frozen=True)
class TriState:
    verdict: Verdict
    certificate: Any = None
    obstruction: str | None = None
    budget_spent: int = 0

    @property
    def yes(self) -> bool:
        return self.verdict is Verdict.YES

    @property
    def no(self) -> bool:
        return self.verdict is Verdict.NO

    @property
    def unknown(self) -> bool:
        return self.verdict is Verdict.UNKNOWN

    @property
    def decided(self) -> bool:
        return self.verdict is not Verdict.UNKNOWN

    def to_json(self) -> dict:
        out: dict = {"verdict": self.verdict.value, "budget_spent": self.budget_spent}
        if self.certificate is not None:
            out["certificate"] = self.certificate.to_json()
        if self.obstruction is not None:
            out["obstruction"] = self.obstruction
        return out


def yes(cert=None, budget: Budget | None = None) -> TriState:
    return TriState(Verdict.YES, certificate=cert, budget_spent=budget.spent if budget else 0)


def no(reason: str, budget: Budget | None = None) -> TriState:
    return TriState(Verdict.NO, obstruction=reason, budget_spent=budget.spent if budget else 0)


def unknown(budget: Budget, reason: str | None = None) -> TriState:
    return TriState(Verdict.UNKNOWN, obstruction=reason, budget_spent=budget.spent)
