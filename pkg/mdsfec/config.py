from __future__ import annotations

import os
from dataclasses import dataclass


@dataclass
class Config:
    log_level: str = "WARNING"
    oracle_limit: int = 10**7
    prime_limit: int = 0
    field_limit: int = 10

    @classmethod
    def load(cls) -> Config:
        cfg = cls()
        cfg.log_level = os.environ.get("MDSFEC_LOG_LEVEL", cfg.log_level).upper()
        cfg.oracle_limit = _env_int("MDSFEC_ORACLE_LIMIT", cfg.oracle_limit)
        cfg.prime_limit = _env_int("MDSFEC_PRIME_LIMIT", cfg.prime_limit)
        cfg.field_limit = _env_int("MDSFEC_FIELD_LIMIT", cfg.field_limit)
        return cfg

    def prime_bound(self, n: int) -> int:
        """Largest characteristic scanned when listing fields for length n."""
        if self.prime_limit > 0:
            return self.prime_limit
        return max(2 * n + 2, 64)


def _env_int(name: str, default: int) -> int:
    raw = os.environ.get(name, "")
    if not raw:
        return default
    try:
        return int(raw)
    except ValueError:
        return default
