"""
Cache management for finite fields and enumerated point sets.
"""

from typing import Any, Callable, Dict, Hashable

from cachetools import LRUCache
from loguru import logger

from ..config.settings import CACHE_CONFIG


class CacheManager:
    """
    Named in-memory LRU caches.

    Values stored here must be immutable (field handles, frozensets of points)
    because every caller receives the same object.
    """

    def __init__(self):
        self._caches: Dict[str, LRUCache] = {
            "fields": LRUCache(maxsize=CACHE_CONFIG["field_cache_size"]),
            "points": LRUCache(maxsize=CACHE_CONFIG["points_cache_size"]),
        }
        self._hits: Dict[str, int] = {name: 0 for name in self._caches}
        self._misses: Dict[str, int] = {name: 0 for name in self._caches}

    def get_or_compute(self, cache_name: str, key: Hashable, compute: Callable[[], Any]) -> Any:
        """
        Return the cached value for key, computing and storing it on a miss.

        Args:
            cache_name: "fields" or "points"
            key: Hashable cache key
            compute: Zero-argument function producing the value

        Returns:
            Cached or freshly computed value
        """
        cache = self._caches[cache_name]
        if key in cache:
            self._hits[cache_name] += 1
            return cache[key]
        self._misses[cache_name] += 1
        value = compute()
        cache[key] = value
        logger.debug("cached {} entry {}", cache_name, key)
        return value

    def clear_all_cache(self) -> None:
        for name, cache in self._caches.items():
            cache.clear()
            self._hits[name] = 0
            self._misses[name] = 0
        logger.info("All caches cleared")

    def get_cache_stats(self) -> Dict[str, Dict[str, int]]:
        return {
            name: {
                "entries": len(cache),
                "maxsize": int(cache.maxsize),
                "hits": self._hits[name],
                "misses": self._misses[name],
            }
            for name, cache in self._caches.items()
        }


_cache_manager = None


def get_cache_manager() -> CacheManager:
    """Get the process-wide CacheManager instance."""
    global _cache_manager
    if _cache_manager is None:
        _cache_manager = CacheManager()
    return _cache_manager
