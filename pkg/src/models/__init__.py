# Pydantic Models Package
# Configuration, report and CSV row schemas

from .schemas import (
    # Enums
    QuasiOrder,
    Verdict,
    CheckStatus,
    # Config Models
    QuadratureConfig,
    RunConfig,
    # Report Models
    CheckRecord,
    ReportBase,
    VerificationReport,
    VertexDelta,
    AlternationReport,
    TrajectoryRecord,
    TrajectoryReport,
    # Output Models
    SuiteRow,
    SuiteReport,
    EnergyRow,
    SUITE_CSV_COLUMNS,
    ENERGY_CSV_COLUMNS,
    format_real,
)

__all__ = [
    "QuasiOrder",
    "Verdict",
    "CheckStatus",
    "QuadratureConfig",
    "RunConfig",
    "CheckRecord",
    "ReportBase",
    "VerificationReport",
    "VertexDelta",
    "AlternationReport",
    "TrajectoryRecord",
    "TrajectoryReport",
    "SuiteRow",
    "SuiteReport",
    "EnergyRow",
    "SUITE_CSV_COLUMNS",
    "ENERGY_CSV_COLUMNS",
    "format_real",
]
