"""
Pydantic models for configuration, verification reports and CSV rows
"""
from __future__ import annotations

from enum import Enum
from pathlib import Path
from typing import Any, Dict, List, Optional

from pydantic import BaseModel, Field

from src.config import settings


def format_real(value: Optional[float]) -> str:
    """17 significant digits, empty cell for missing values."""
    if value is None:
        return ""
    return f"{value:.17g}"


class QuasiOrder(str, Enum):
    """Outcome of comparing two b-sequences coefficient-wise"""
    EQUAL = "equal"
    LESS = "strictly-less"
    GREATER = "strictly-greater"
    INCOMPARABLE = "incomparable"


class Verdict(str, Enum):
    """Direction of an energy change"""
    INCREASE = "increase"
    DECREASE = "decrease"
    INDETERMINATE = "indeterminate"


class CheckStatus(str, Enum):
    PASS = "pass"
    FAIL = "fail"
    INDETERMINATE = "indeterminate"


# ================== Configuration Models ==================

class QuadratureConfig(BaseModel):
    """Adaptive Simpson settings for the Coulson-type vertex integral"""
    rel_tol: float = Field(default_factory=lambda: settings.quad_rel_tol, gt=0)
    max_depth: int = Field(default_factory=lambda: settings.quad_max_depth, ge=1)
    initial_panels: int = Field(default_factory=lambda: settings.quad_initial_panels, ge=1)
    # x = tan(theta) maps the real line onto (-pi/2, pi/2)
    transform: str = Field(default="tan", frozen=True)


class RunConfig(BaseModel):
    """One harness or CLI run"""
    seed: int = Field(ge=0, lt=2**64)
    epsilon: float = Field(gt=0)
    quad_rel_tol: float = Field(gt=0)
    output_path: Optional[Path] = None
    max_tree: int = Field(ge=2)
    max_bip: int = Field(ge=2)
    trials: Optional[int] = Field(default=None, ge=1)

    @classmethod
    def from_settings(cls, **overrides: Any) -> "RunConfig":
        """Build from global settings; None-valued overrides are ignored."""
        values: Dict[str, Any] = {
            "seed": settings.seed,
            "epsilon": settings.epsilon,
            "quad_rel_tol": settings.quad_rel_tol,
            "max_tree": settings.max_tree,
            "max_bip": settings.max_bip,
        }
        values.update({k: v for k, v in overrides.items() if v is not None})
        return cls(**values)

    def quadrature(self) -> QuadratureConfig:
        return QuadratureConfig(rel_tol=self.quad_rel_tol)


# ================== Report Models ==================

class CheckRecord(BaseModel):
    """A single evaluated statement: observed value against its reference"""
    check: str
    subject: str
    observed: Optional[float] = None
    reference: Optional[float] = None
    status: CheckStatus
    detail: str = ""


class ReportBase(BaseModel):
    """Shared counters for every report type"""
    statement: str
    metadata: Dict[str, Any] = {}

    def records(self) -> List[CheckRecord]:
        raise NotImplementedError

    @property
    def checked(self) -> int:
        return len(self.records())

    @property
    def violations(self) -> int:
        return sum(1 for r in self.records() if r.status == CheckStatus.FAIL)

    @property
    def indeterminate(self) -> int:
        return sum(1 for r in self.records() if r.status == CheckStatus.INDETERMINATE)

    @property
    def passed(self) -> bool:
        return self.violations == 0


class VerificationReport(ReportBase):
    """Generic pass/fail record list tying a run to one statement"""
    items: List[CheckRecord] = []

    def records(self) -> List[CheckRecord]:
        return self.items


class VertexDelta(BaseModel):
    """Energy of one vertex before and after a construction"""
    vertex: int
    mapped_vertex: int
    distance: int
    before: float
    after: float
    delta: float
    verdict: Verdict
    expected: Verdict

    @property
    def parity(self) -> str:
        return "odd" if self.distance % 2 else "even"

    @property
    def status(self) -> CheckStatus:
        if self.verdict == Verdict.INDETERMINATE:
            return CheckStatus.INDETERMINATE
        return CheckStatus.PASS if self.verdict == self.expected else CheckStatus.FAIL


class AlternationReport(ReportBase):
    """Per-vertex energy deltas with parity-predicted directions"""
    epsilon: float
    vertices: List[VertexDelta] = []

    def records(self) -> List[CheckRecord]:
        return [
            CheckRecord(
                check="alternation",
                subject=f"w={d.vertex} d={d.distance} {d.parity}",
                observed=d.after,
                reference=d.before,
                status=d.status,
                detail=f"expected {d.expected.value}, got {d.verdict.value}",
            )
            for d in self.vertices
        ]


class TrajectoryRecord(BaseModel):
    """Energy of one tree vertex across successive coalescences"""
    vertex: int
    distance: int
    energies: List[float]
    bound: Optional[float] = None
    monotone: CheckStatus
    bound_ok: CheckStatus


class TrajectoryReport(ReportBase):
    steps: int
    trajectories: List[TrajectoryRecord] = []

    def records(self) -> List[CheckRecord]:
        rows: List[CheckRecord] = []
        for t in self.trajectories:
            direction = "increasing" if t.distance % 2 == 0 else "decreasing"
            rows.append(CheckRecord(
                check="monotone",
                subject=f"w={t.vertex} d={t.distance}",
                observed=t.energies[-1],
                reference=t.energies[0],
                status=t.monotone,
                detail=direction,
            ))
            if t.bound is not None:
                rows.append(CheckRecord(
                    check="bound",
                    subject=f"w={t.vertex} d={t.distance}",
                    observed=t.energies[-1],
                    reference=t.bound,
                    status=t.bound_ok,
                    detail="upper" if t.distance % 2 == 0 else "lower",
                ))
        return rows


# ================== Suite / CLI Output Models ==================

SUITE_CSV_COLUMNS = ["suite", "instance", "check", "subject", "observed", "reference", "status", "detail"]
ENERGY_CSV_COLUMNS = ["vertex", "spectral", "coulson", "difference"]


class SuiteRow(BaseModel):
    instance: int
    record: CheckRecord

    def as_csv(self, suite: str) -> List[str]:
        r = self.record
        return [
            suite, str(self.instance), r.check, r.subject,
            format_real(r.observed), format_real(r.reference), r.status.value, r.detail,
        ]


class SuiteReport(BaseModel):
    """All records emitted by one suite run, in canonical instance order"""
    name: str
    seed: int
    rows: List[SuiteRow] = []

    def extend(self, instance: int, report: ReportBase) -> None:
        self.rows.extend(SuiteRow(instance=instance, record=r) for r in report.records())

    @property
    def checked(self) -> int:
        return len(self.rows)

    @property
    def violations(self) -> int:
        return sum(1 for r in self.rows if r.record.status == CheckStatus.FAIL)

    @property
    def indeterminate(self) -> int:
        return sum(1 for r in self.rows if r.record.status == CheckStatus.INDETERMINATE)

    @property
    def passed(self) -> bool:
        return self.violations == 0

    def summary_line(self) -> str:
        verdict = "PASS" if self.passed else "FAIL"
        return (
            f"SUITE {self.name} {verdict} checked={self.checked} "
            f"violations={self.violations} indeterminate={self.indeterminate}"
        )


class EnergyRow(BaseModel):
    """One vertex of the energy command output"""
    vertex: int
    spectral: float
    coulson: float

    @property
    def difference(self) -> float:
        return abs(self.spectral - self.coulson)

    def as_csv(self) -> List[str]:
        return [str(self.vertex), format_real(self.spectral), format_real(self.coulson), format_real(self.difference)]
