"""
Prometheus metrics for verification runs.
Counts checks by suite and status, eigensolver calls by backend and cache
traffic, and times each suite. A CLI run can dump them to a textfile for
the node-exporter textfile collector.
"""
import logging
import time
from contextlib import contextmanager
from pathlib import Path
from typing import Iterator, Optional, Union

logger = logging.getLogger(__name__)

# Try to import prometheus_client, provide fallback if not available
try:
    from prometheus_client import CollectorRegistry, Counter, Histogram, generate_latest, write_to_textfile
    PROMETHEUS_AVAILABLE = True
except ImportError:
    PROMETHEUS_AVAILABLE = False
    logger.warning("prometheus_client not installed. Metrics disabled. Run: pip install prometheus-client")


# ================== Metrics Definitions ==================

if PROMETHEUS_AVAILABLE:
    # Private registry: the process-global one also carries python/gc collectors
    REGISTRY = CollectorRegistry()

    checks_total = Counter(
        'venergy_checks_total',
        'Evaluated statements',
        ['suite', 'status'],
        registry=REGISTRY,
    )

    suite_duration = Histogram(
        'venergy_suite_duration_seconds',
        'Wall time of one verification suite',
        ['suite'],
        buckets=(0.1, 0.5, 1.0, 5.0, 15.0, 60.0, 300.0),
        registry=REGISTRY,
    )

    eigensolves_total = Counter(
        'venergy_eigensolves_total',
        'Symmetric eigendecompositions computed',
        ['backend'],  # jacobi / lapack
        registry=REGISTRY,
    )

    quadratures_total = Counter(
        'venergy_quadratures_total',
        'Coulson-type vertex integrals evaluated',
        ['status'],
        registry=REGISTRY,
    )

    cache_access_total = Counter(
        'venergy_cache_access_total',
        'Computation cache lookups',
        ['kind', 'result'],  # result: hit/miss
        registry=REGISTRY,
    )


# ================== Recording Helpers ==================

def record_check(suite: str, status: str, count: int = 1):
    """Record evaluated statements for a suite"""
    if not PROMETHEUS_AVAILABLE or count <= 0:
        return
    checks_total.labels(suite=suite, status=status).inc(count)


def record_eigensolve(backend: str):
    if not PROMETHEUS_AVAILABLE:
        return
    eigensolves_total.labels(backend=backend).inc()


def record_quadrature(status: str = "success"):
    if not PROMETHEUS_AVAILABLE:
        return
    quadratures_total.labels(status=status).inc()


def record_cache_access(kind: str, hit: bool):
    """Record cache hit/miss"""
    if not PROMETHEUS_AVAILABLE:
        return
    cache_access_total.labels(kind=kind, result="hit" if hit else "miss").inc()


@contextmanager
def track_suite(suite: str) -> Iterator[None]:
    """Time a suite run"""
    if not PROMETHEUS_AVAILABLE:
        yield
        return

    start_time = time.time()
    try:
        yield
    finally:
        suite_duration.labels(suite=suite).observe(time.time() - start_time)


# ================== Export ==================

def get_metrics() -> bytes:
    """Prometheus exposition text for the run so far"""
    if not PROMETHEUS_AVAILABLE:
        return b"# Prometheus metrics disabled - install prometheus-client\n"
    return generate_latest(REGISTRY)


def write_metrics(path: Optional[Union[str, Path]]) -> bool:
    """
    Write metrics to a textfile; returns False when disabled or no path given.
    """
    if path is None:
        return False
    if not PROMETHEUS_AVAILABLE:
        logger.warning(f"Metrics file {path} requested but prometheus_client is not installed")
        return False
    write_to_textfile(str(path), REGISTRY)
    logger.info(f"Wrote metrics to {path}")
    return True
