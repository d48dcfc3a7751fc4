# Run metrics: Prometheus counters with a textfile export

from .metrics import (
    get_metrics,
    write_metrics,
    track_suite,
    record_check,
    record_eigensolve,
    record_quadrature,
    record_cache_access,
    PROMETHEUS_AVAILABLE
)

__all__ = [
    'get_metrics',
    'write_metrics',
    'track_suite',
    'record_check',
    'record_eigensolve',
    'record_quadrature',
    'record_cache_access',
    'PROMETHEUS_AVAILABLE'
]
