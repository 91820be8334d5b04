"""Settings management for the lie3 toolkit."""

from settings.config import Settings, load_settings, save_settings, settings_toml, update_setting

__all__ = ["Settings", "load_settings", "save_settings", "settings_toml", "update_setting"]
