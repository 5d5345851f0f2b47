"""Report models for rule verification and script application"""
from typing import List, Optional

from pydantic import BaseModel, Field


class RuleResult(BaseModel):
    """Outcome of one rule over a space"""
    rule: str
    instantiations: int = Field(..., ge=0)
    failures: int = Field(..., ge=0)
    examples: List[str] = Field(default_factory=list, description="First failing instantiations")

    @property
    def covered(self) -> bool:
        return self.instantiations > 0

    @property
    def passed(self) -> bool:
        return self.covered and self.failures == 0

    def render(self) -> str:
        return f"RULE {self.rule} instantiations={self.instantiations} failures={self.failures}"


class RuleReport(BaseModel):
    """Rule verification report model"""
    space: str = Field(..., description="Human readable description of the verification space")
    results: List[RuleResult]

    @property
    def ok(self) -> bool:
        return all(result.passed for result in self.results)

    def result(self, rule: str) -> Optional[RuleResult]:
        return next((r for r in self.results if r.rule == rule), None)

    def not_covered(self) -> List[str]:
        return [r.rule for r in self.results if not r.covered]

    def failed(self) -> List[str]:
        return [r.rule for r in self.results if r.failures]

    def render(self) -> str:
        """One `RULE <id> instantiations=<n> failures=<m>` line per rule"""
        return "".join(result.render() + "\n" for result in self.results)


class ApplyReport(BaseModel):
    """Script application report model"""
    directory: str
    dry_run: bool = False
    planned: int = Field(0, ge=0, description="Commands in the script")
    completed: List[str] = Field(default_factory=list, description="Commands carried out, in order")

    @property
    def done(self) -> bool:
        return self.dry_run or len(self.completed) == self.planned
