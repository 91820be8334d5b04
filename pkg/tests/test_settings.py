"""Tests for TOML settings persistence."""

import pytest
from pydantic import ValidationError

from settings import Settings, load_settings, save_settings, settings_toml, update_setting


class TestSettings:
    """Tests for the Settings model."""

    def test_defaults(self):
        """Defaults match the documented values."""
        s = Settings()
        assert s.output_format == "text"
        assert s.report_limit == 10
        assert s.search_max_dim == 24
        assert s.log_level == "WARNING"
        assert s.catalog_params == {"alpha": "1", "beta": "1", "s": "1", "t": "0", "u": "0"}

    def test_partial_params_are_filled(self):
        """Missing catalog parameters take their defaults."""
        s = Settings(catalog_params={"alpha": "2/3"})
        assert s.catalog_params["alpha"] == "2/3"
        assert s.catalog_params["beta"] == "1"

    @pytest.mark.parametrize(
        "kwargs",
        [
            {"report_limit": 0},
            {"search_max_dim": 25},
            {"output_format": "json"},
            {"log_level": "TRACE"},
            {"catalog_params": {"gamma": "1"}},
            {"catalog_params": {"alpha": "0.5"}},
        ],
    )
    def test_rejects(self, kwargs):
        """Out-of-range and unknown values fail validation."""
        with pytest.raises(ValidationError):
            Settings(**kwargs)


class TestPersistence:
    """Tests for loading and saving."""

    def test_missing_file_gives_defaults(self, settings_path):
        """No file means default settings."""
        assert not settings_path.exists()
        assert load_settings() == Settings()

    def test_save_then_load(self, settings_path):
        """Saved values come back."""
        s = Settings(report_limit=3, catalog_params={"beta": "-1/2"})
        assert save_settings(s) == settings_path
        assert load_settings() == s

    def test_explicit_path(self, tmp_path):
        """An explicit path wins over the environment."""
        path = tmp_path / "nested" / "custom.toml"
        save_settings(Settings(log_level="INFO"), path)
        assert load_settings(path).log_level == "INFO"

    def test_settings_toml(self):
        """The TOML text carries a catalog_params table."""
        text = settings_toml(Settings())
        assert "report_limit = 10" in text
        assert "[catalog_params]" in text


class TestUpdateSetting:
    """Tests for update_setting."""

    def test_plain_key(self):
        """Values are validated and coerced."""
        assert update_setting(Settings(), "report_limit", "7").report_limit == 7

    def test_catalog_param(self):
        """Dotted keys address one catalog parameter."""
        s = update_setting(Settings(), "catalog_params.t", "1/4")
        assert s.catalog_params["t"] == "1/4"
        assert s.catalog_params["s"] == "1"

    def test_unknown_key(self):
        """Unknown names raise KeyError."""
        with pytest.raises(KeyError):
            update_setting(Settings(), "colour", "red")
        with pytest.raises(KeyError):
            update_setting(Settings(), "catalog_params", "x")

    def test_invalid_value(self):
        """Invalid values raise ValidationError."""
        with pytest.raises(ValidationError):
            update_setting(Settings(), "search_max_dim", "0")
        with pytest.raises(ValidationError):
            update_setting(Settings(), "catalog_params.gamma", "1")
