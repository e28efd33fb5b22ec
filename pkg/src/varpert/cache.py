"""Persistent JSON cache for helium radial integrals.

Values are keyed by (kind, n, n', l, z_star) with the charge rounded to 12
significant digits. The file carries a version stamp; an unreadable or
mismatched file is discarded with a warning and rebuilt, never trusted.
A single lock makes concurrent readers and the exclusive writer safe.
"""
from __future__ import annotations

import json
import sys
import threading
from typing import Callable

CACHE_VERSION = 1


class IntegralCache:
    """Lazy, thread-safe map from integral labels to float values.

    With ``path`` None the cache is memory only. ``hits`` and ``misses``
    count lookups since construction and back the observability checks.
    """

    def __init__(self, path: str | None = None) -> None:
        self.path = path
        self.hits = 0
        self.misses = 0
        self._entries: dict[str, float] | None = None
        self._dirty = False
        self._lock = threading.Lock()

    @staticmethod
    def _key(kind: str, n: int, n_prime: int, l: int, z_star: float) -> str:
        return f"{kind}|{n}|{n_prime}|{l}|{z_star:.12g}"

    def _load_locked(self) -> dict[str, float]:
        if self._entries is not None:
            return self._entries
        entries: dict[str, float] = {}
        if self.path is not None:
            try:
                with open(self.path, encoding="utf-8") as fh:
                    raw = json.load(fh)
                if raw.get("version") != CACHE_VERSION:
                    print(f"warning: integral cache {self.path} has version "
                          f"{raw.get('version')!r}, expected {CACHE_VERSION}; "
                          "rebuilding", file=sys.stderr)
                else:
                    entries = {str(k): float(v)
                               for k, v in raw["entries"].items()}
            except FileNotFoundError:
                pass
            except (OSError, ValueError, KeyError, AttributeError, TypeError) as exc:
                print(f"warning: integral cache {self.path} unreadable "
                      f"({exc}); rebuilding", file=sys.stderr)
        self._entries = entries
        return entries

    def get_or_compute(self, kind: str, n: int, n_prime: int, l: int,
                       z_star: float, compute: Callable[[], float]) -> float:
        key = self._key(kind, n, n_prime, l, z_star)
        with self._lock:
            entries = self._load_locked()
            if key in entries:
                self.hits += 1
                return entries[key]
            self.misses += 1
            value = float(compute())
            entries[key] = value
            self._dirty = True
            return value

    def save(self) -> None:
        """Write back to ``path`` if anything changed; sorted and stable."""
        with self._lock:
            if self.path is None or not self._dirty or self._entries is None:
                return
            payload = {"version": CACHE_VERSION,
                       "entries": dict(sorted(self._entries.items()))}
            with open(self.path, "w", encoding="utf-8") as fh:
                json.dump(payload, fh, indent=1, sort_keys=True)
                fh.write("\n")
            self._dirty = False


Label = tuple[str, int, int, int, float]


def cache_integrals(path: str, entries: dict[Label, float]) -> IntegralCache:
    """Persist integral values under their (kind, n, n', l, z_star) labels.

    Merges ``entries`` over whatever the version-stamped file at ``path``
    already holds (new values win) and returns the saved cache.
    """
    cache = IntegralCache(path)
    with cache._lock:
        store = cache._load_locked()
        for (kind, n, n_prime, l, z_star), value in entries.items():
            store[IntegralCache._key(kind, n, n_prime, l, z_star)] = float(value)
        cache._dirty = True
    cache.save()
    return cache
