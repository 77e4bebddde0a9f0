"""Tests for QRK_* settings."""

from qrk.config import Settings, get_settings


class TestSettings:
    def test_defaults(self, monkeypatch):
        for name in ("QRK_DEFAULT_ORDER", "QRK_DEFAULT_Q_ORDER", "QRK_SEED"):
            monkeypatch.delenv(name, raising=False)
        settings = Settings(_env_file=None)
        assert settings.default_order == 24
        assert settings.default_q_order == 24
        assert settings.default_range == 20
        assert settings.inf_cap_factor == 10
        assert settings.verify_workers == 1
        assert settings.report_timings is False

    def test_environment_override(self, monkeypatch):
        monkeypatch.setenv("QRK_DEFAULT_ORDER", "12")
        monkeypatch.setenv("QRK_SEED", "5")
        settings = get_settings()
        assert settings.default_order == 12
        assert settings.seed == 5

    def test_cached(self):
        assert get_settings() is get_settings()

    def test_timings_reported_when_enabled(self, monkeypatch):
        from qrk.catalog.registry import verify

        monkeypatch.setenv("QRK_REPORT_TIMINGS", "true")
        assert verify("eq19", {"N": 2}).elapsed_ms is not None
