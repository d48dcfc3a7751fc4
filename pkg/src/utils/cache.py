"""
Caching utilities for repeated spectral and polynomial computations.
Graphs are immutable values, so a graph is its own cache key.
"""
from typing import Any, Callable, Dict, Hashable, List, Optional, Tuple, TypeVar
import threading

from src.config import settings
from src.monitoring.metrics import record_cache_access

T = TypeVar("T")


class ComputationCache:
    """
    Thread-safe LRU cache keyed by (kind, graph).
    Avoids re-decomposing the same graph across checks of one instance.
    """

    def __init__(self, maxsize: int = 512):
        self.maxsize = maxsize
        self._cache: Dict[Tuple[str, Hashable], Any] = {}
        self._lock = threading.Lock()
        self._access_order: List[Tuple[str, Hashable]] = []
        self._hits = 0
        self._misses = 0

    def get(self, kind: str, key: Hashable) -> Optional[Any]:
        """Get cached value if present"""
        k = (kind, key)
        with self._lock:
            if k in self._cache:
                # Move to end of access order (most recently used)
                self._access_order.remove(k)
                self._access_order.append(k)
                self._hits += 1
                record_cache_access(kind, hit=True)
                return self._cache[k]
            self._misses += 1
        record_cache_access(kind, hit=False)
        return None

    def set(self, kind: str, key: Hashable, value: Any) -> None:
        k = (kind, key)
        with self._lock:
            if k in self._cache:
                self._access_order.remove(k)
            # Evict oldest if at capacity
            while len(self._cache) >= self.maxsize and self._access_order:
                oldest = self._access_order.pop(0)
                self._cache.pop(oldest, None)
            self._cache[k] = value
            self._access_order.append(k)

    def get_or_compute(self, kind: str, key: Hashable, compute: Callable[[], T]) -> T:
        cached = self.get(kind, key)
        if cached is not None:
            return cached
        value = compute()
        self.set(kind, key, value)
        return value

    def clear(self) -> None:
        with self._lock:
            self._cache.clear()
            self._access_order.clear()
            self._hits = 0
            self._misses = 0

    def stats(self) -> Dict[str, Any]:
        with self._lock:
            return {
                "size": len(self._cache),
                "maxsize": self.maxsize,
                "hits": self._hits,
                "misses": self._misses,
            }


_computation_cache: Optional[ComputationCache] = None


def get_computation_cache() -> ComputationCache:
    """Get or create computation cache singleton"""
    global _computation_cache
    if _computation_cache is None:
        _computation_cache = ComputationCache(maxsize=settings.cache_size)
    return _computation_cache
