"""TOML-based settings persistence for the lie3 toolkit."""

import os
import sys
try:
    import tomllib
except ModuleNotFoundError:  # Python < 3.11
    import tomli as tomllib
from pathlib import Path
from typing import Literal

import tomli_w
from pydantic import BaseModel, Field, field_validator

from catalog.fixtures import DEFAULT_PARAMS
from lie3.scalars import parse_scalar


class Settings(BaseModel):
    """Toolkit settings with validation."""

    # Report settings
    output_format: Literal["text", "records"] = "text"
    report_limit: int = Field(default=10, ge=1, le=1000)
    # violations or nonzero coordinates listed per failed check

    # Search settings
    search_max_dim: int = Field(default=24, ge=1, le=24)

    # Logging
    log_level: Literal["DEBUG", "INFO", "WARNING", "ERROR"] = "WARNING"

    # Catalog defaults, kept as text so `1/3` survives a TOML round trip
    catalog_params: dict[str, str] = Field(default_factory=lambda: {k: str(v) for k, v in DEFAULT_PARAMS.items()})

    @field_validator("catalog_params")
    @classmethod
    def _check_params(cls, value: dict[str, str]) -> dict[str, str]:
        for name, text in value.items():
            if name not in DEFAULT_PARAMS:
                raise ValueError(f"unknown catalog parameter {name!r}")
            try:
                parse_scalar(text)
            except ValueError as e:
                raise ValueError(f"catalog parameter {name}: {e}") from None
        return {k: value.get(k, str(v)) for k, v in DEFAULT_PARAMS.items()}


def _get_app_data_dir() -> Path:
    """Get the application data directory for storing settings."""
    if sys.platform == "darwin":
        app_dir = Path.home() / "Library" / "Application Support" / "Lie3Bialgebra"
    elif sys.platform == "win32":
        app_dir = Path(os.environ.get("APPDATA", Path.home())) / "Lie3Bialgebra"
    else:
        app_dir = Path.home() / ".config" / "lie3bialgebra"
    return app_dir


def _get_settings_path() -> Path:
    """Get the path to settings.toml: $LIE3_SETTINGS, then ./settings.toml, then the app data dir."""
    override = os.environ.get("LIE3_SETTINGS")
    if override:
        return Path(override)
    local_path = Path.cwd() / "settings.toml"
    if local_path.exists():
        return local_path
    return _get_app_data_dir() / "settings.toml"


def load_settings(path: Path | None = None) -> Settings:
    """Load settings from settings.toml, return defaults if not found."""
    settings_path = path or _get_settings_path()
    if settings_path.exists():
        with open(settings_path, "rb") as f:
            return Settings.model_validate(tomllib.load(f))
    return Settings()


def save_settings(settings: Settings, path: Path | None = None) -> Path:
    """Save settings to settings.toml and return where they went."""
    settings_path = path or _get_settings_path()
    settings_path.parent.mkdir(parents=True, exist_ok=True)
    with open(settings_path, "wb") as f:
        tomli_w.dump(settings.model_dump(exclude_none=True), f)
    return settings_path


def settings_toml(settings: Settings) -> str:
    """The effective settings as TOML text."""
    return tomli_w.dumps(settings.model_dump(exclude_none=True))


def update_setting(settings: Settings, key: str, value: str) -> Settings:
    """A validated copy of settings with one key replaced.

    `catalog_params.alpha` addresses one catalog parameter.
    """
    data = settings.model_dump()
    if key.startswith("catalog_params."):
        data["catalog_params"] = {**data["catalog_params"], key.split(".", 1)[1]: value}
    elif key in Settings.model_fields and key != "catalog_params":
        data[key] = value
    else:
        raise KeyError(key)
    return Settings.model_validate(data)
