# Utilities Package
# Thread-safe memoisation of per-graph computations

from .cache import ComputationCache, get_computation_cache

__all__ = ["ComputationCache", "get_computation_cache"]
