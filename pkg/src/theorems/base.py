"""
Shared helpers for turning real-valued comparisons into check records.

Every strict inequality is tested with a margin epsilon: differences of
at most epsilon are reported as indeterminate rather than passed.
"""
from typing import Optional

from src.config import settings
from src.errors import GraphError, NotATreeError, NotBipartiteError
from src.graphs.core import Graph, is_bipartite, is_tree
from src.models.schemas import CheckRecord, CheckStatus, Verdict


def resolve_epsilon(epsilon: Optional[float]) -> float:
    return epsilon or settings.epsilon


def classify(delta: float, epsilon: float) -> Verdict:
    if delta > epsilon:
        return Verdict.INCREASE
    if delta < -epsilon:
        return Verdict.DECREASE
    return Verdict.INDETERMINATE


def parity_direction(distance: int) -> Verdict:
    """Even distance: energy goes up. Odd distance: energy goes down."""
    return Verdict.DECREASE if distance % 2 else Verdict.INCREASE


def inverse(verdict: Verdict) -> Verdict:
    if verdict == Verdict.INCREASE:
        return Verdict.DECREASE
    if verdict == Verdict.DECREASE:
        return Verdict.INCREASE
    return verdict


def at_most(
    check: str,
    subject: str,
    observed: float,
    reference: float,
    epsilon: float,
    detail: str = "",
) -> CheckRecord:
    """observed <= reference up to epsilon."""
    ok = observed <= reference + epsilon
    return CheckRecord(
        check=check,
        subject=subject,
        observed=observed,
        reference=reference,
        status=CheckStatus.PASS if ok else CheckStatus.FAIL,
        detail=detail,
    )


def at_least(
    check: str,
    subject: str,
    observed: float,
    reference: float,
    epsilon: float,
    detail: str = "",
) -> CheckRecord:
    ok = observed >= reference - epsilon
    return CheckRecord(
        check=check,
        subject=subject,
        observed=observed,
        reference=reference,
        status=CheckStatus.PASS if ok else CheckStatus.FAIL,
        detail=detail,
    )


def close_to(
    check: str,
    subject: str,
    observed: float,
    reference: float,
    tol: float,
    detail: str = "",
) -> CheckRecord:
    ok = abs(observed - reference) <= tol
    return CheckRecord(
        check=check,
        subject=subject,
        observed=observed,
        reference=reference,
        status=CheckStatus.PASS if ok else CheckStatus.FAIL,
        detail=detail,
    )


def strictly(
    check: str,
    subject: str,
    smaller: float,
    larger: float,
    epsilon: float,
    detail: str = "",
) -> CheckRecord:
    """smaller < larger with margin; a gap inside the margin is indeterminate."""
    gap = larger - smaller
    if gap > epsilon:
        status = CheckStatus.PASS
    elif gap >= -epsilon:
        status = CheckStatus.INDETERMINATE
    else:
        status = CheckStatus.FAIL
    return CheckRecord(
        check=check,
        subject=subject,
        observed=smaller,
        reference=larger,
        status=status,
        detail=detail,
    )


def exact(check: str, subject: str, ok: bool, detail: str = "") -> CheckRecord:
    """Integer or polynomial comparison; never indeterminate."""
    return CheckRecord(
        check=check,
        subject=subject,
        status=CheckStatus.PASS if ok else CheckStatus.FAIL,
        detail=detail,
    )


# ================== Preconditions ==================

def require_tree(t: Graph, name: str = "T") -> None:
    if not is_tree(t):
        raise NotATreeError(f"{name} must be a tree, got {t}")


def require_bipartite(b: Graph, name: str = "B") -> None:
    if not is_bipartite(b):
        raise NotBipartiteError(f"{name} must be bipartite, got {b}")


def require_merge_degree(b: Graph, u: int, name: str = "B") -> None:
    if b.degree(u) < 1:
        raise GraphError(f"merge vertex {u} of {name} must have a neighbour")
