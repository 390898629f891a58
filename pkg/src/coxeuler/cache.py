"""JSON-lines table records and the on-disk table cache."""

from __future__ import annotations

import json
import logging
import os
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable

from .algebra import Polynomial

log = logging.getLogger(__name__)

CACHE_ENV = "COXEULER_CACHE"

CacheKey = tuple[str, str, int, str]  # family, statistic, n, source


@dataclass(frozen=True)
class TableRecord:
    """One table row. Coefficients are decimal strings, ascending in degree."""

    family: str
    statistic: str
    n: int
    coefficients: tuple[str, ...]

    @classmethod
    def from_polynomial(cls, family: str, statistic: str, n: int, p: Polynomial) -> "TableRecord":
        if not p.is_integral():
            raise ValueError("table rows have integer coefficients")
        return cls(family, statistic, n, tuple(str(c) for c in p.coeffs))

    def polynomial(self) -> Polynomial:
        return Polynomial(int(c) for c in self.coefficients)

    def to_dict(self) -> dict:
        return {
            "family": self.family,
            "statistic": self.statistic,
            "n": self.n,
            "coefficients": list(self.coefficients),
        }

    @classmethod
    def from_dict(cls, d: dict) -> "TableRecord":
        cs = d["coefficients"]
        if not isinstance(cs, list) or not all(isinstance(c, str) for c in cs):
            raise ValueError("coefficients must be a list of decimal strings")
        for c in cs:
            int(c)  # rejects non-numeric strings
        n = d["n"]
        if not isinstance(n, int) or isinstance(n, bool):
            raise ValueError("n must be an integer")
        return cls(str(d["family"]), str(d["statistic"]), n, tuple(cs))


def dumps(obj: dict) -> str:
    return json.dumps(obj, sort_keys=True)


def default_cache_path() -> Path | None:
    p = os.environ.get(CACHE_ENV)
    return Path(p) if p else None


def load_cache(path: str | os.PathLike) -> tuple[dict[CacheKey, TableRecord], list[str]]:
    """Read a cache file; corrupt lines are skipped and returned as diagnostics."""
    path = Path(path)
    cache: dict[CacheKey, TableRecord] = {}
    problems: list[str] = []
    if not path.exists():
        return cache, problems
    with path.open(encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, 1):
            if not line.strip():
                continue
            try:
                d = json.loads(line)
                rec = TableRecord.from_dict(d)
                source = d["source"]
                if source not in ("oracle", "recurrence"):
                    raise ValueError(f"unknown source {source!r}")
            except (ValueError, KeyError, TypeError) as exc:
                msg = f"{path}:{lineno}: skipped corrupt cache line ({exc})"
                log.warning(msg)
                problems.append(msg)
                continue
            cache[rec.family, rec.statistic, rec.n, source] = rec
    return cache, problems


def save_cache(path: str | os.PathLike, cache: dict[CacheKey, TableRecord]) -> None:
    """Rewrite the cache file, sorted by key, atomically."""
    path = Path(path)
    tmp = path.with_name(path.name + ".tmp")
    with tmp.open("w", encoding="utf-8") as fh:
        for key in sorted(cache):
            d = cache[key].to_dict()
            d["source"] = key[3]
            fh.write(dumps(d) + "\n")
    os.replace(tmp, path)


def write_records(path: str | os.PathLike, records: Iterable[tuple[TableRecord, str]]) -> None:
    """Merge ``(record, source)`` pairs into the cache at ``path``."""
    cache, _ = load_cache(path)
    for rec, source in records:
        cache[rec.family, rec.statistic, rec.n, source] = rec
    save_cache(path, cache)
