"""Tests for settings."""

import pytest
from pydantic import ValidationError

from nakayama_ar.config import Settings
from nakayama_ar.core.algebra import create_algebra


class TestSettings:
    def test_defaults(self, monkeypatch: pytest.MonkeyPatch) -> None:
        monkeypatch.delenv("ARQ_SEED", raising=False)
        settings = Settings(_env_file=None)
        assert settings.seed == 20240531
        assert settings.knit_budget == 200
        assert settings.shift_window == 2
        assert settings.log_level == "warning"

    def test_environment_override(self, monkeypatch: pytest.MonkeyPatch) -> None:
        monkeypatch.setenv("ARQ_SEED", "7")
        monkeypatch.setenv("ARQ_KNIT_BUDGET", "50")
        settings = Settings(_env_file=None)
        assert settings.seed == 7
        assert settings.knit_budget == 50

    def test_env_file(self, tmp_path, monkeypatch: pytest.MonkeyPatch) -> None:
        monkeypatch.delenv("ARQ_ISO_TRIALS", raising=False)
        env = tmp_path / ".env"
        env.write_text("ARQ_ISO_TRIALS=0\n", encoding="utf-8")
        assert Settings(_env_file=env).iso_trials == 0

    def test_bounds(self) -> None:
        with pytest.raises(ValidationError):
            Settings(_env_file=None, knit_budget=0)


class TestLogging:
    def test_debug_events_stay_quiet(self, capsys: pytest.CaptureFixture[str]) -> None:
        # create_algebra logs algebra.created at debug level
        create_algebra(5, [(1, 3)])
        assert capsys.readouterr() == ("", "")
