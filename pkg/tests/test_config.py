from __future__ import annotations

from mdsfec.config import Config


def test_defaults(monkeypatch):
    for name in ("MDSFEC_LOG_LEVEL", "MDSFEC_ORACLE_LIMIT", "MDSFEC_PRIME_LIMIT", "MDSFEC_FIELD_LIMIT"):
        monkeypatch.delenv(name, raising=False)
    cfg = Config.load()
    assert cfg == Config()
    assert cfg.log_level == "WARNING"
    assert cfg.prime_bound(12) == 64
    assert cfg.prime_bound(400) == 802


def test_environment_overrides(monkeypatch):
    monkeypatch.setenv("MDSFEC_LOG_LEVEL", "debug")
    monkeypatch.setenv("MDSFEC_PRIME_LIMIT", "500")
    monkeypatch.setenv("MDSFEC_FIELD_LIMIT", "not-a-number")
    cfg = Config.load()
    assert cfg.log_level == "DEBUG"
    assert cfg.prime_bound(400) == 500
    assert cfg.field_limit == 10
