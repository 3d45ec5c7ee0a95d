"""
Configuration Manager

Workbench configuration from YAML files:
- base.yaml, then {env}.yaml, then an optional untracked local.yaml
- ${VAR} and ${VAR:-default} environment substitution
- dot-path access
"""

import os
import re
from pathlib import Path
from typing import Any, Dict, Optional

import yaml

from core.errors import ConfigurationError
from core.logger import get_logger

DEFAULT_CONFIG_DIR = Path(__file__).resolve().parent.parent / "config"

_PLACEHOLDER = re.compile(r'\$\{([A-Za-z_][A-Za-z0-9_]*)(?::-([^}]*))?\}')


class ConfigManager:
    """Manage workbench configuration from YAML files"""

    def __init__(self, config_dir: Optional[str] = None):
        """
        Initialize configuration manager

        Args:
            config_dir: Directory containing configuration files
        """
        self.config_dir = Path(config_dir) if config_dir else DEFAULT_CONFIG_DIR
        self.config: Dict[str, Any] = {}
        self.env: Optional[str] = None
        self.logger = get_logger('ConfigManager')

    def load(self, env: str = "production") -> bool:
        """
        Load configuration files

        Later files override earlier ones:
        1. base.yaml (required)
        2. {env}.yaml
        3. local.yaml (optional, untracked)

        Args:
            env: Environment name (development, production)

        Returns:
            True if configuration loaded successfully

        Raises:
            ConfigurationError: base.yaml missing or malformed
        """
        base_config = self._load_yaml("base.yaml")
        if not base_config:
            raise ConfigurationError(f"Missing or empty base.yaml in {self.config_dir}")

        env_config = self._load_yaml(f"{env}.yaml")
        if env_config is None:
            self.logger.warning(f"No configuration for environment: {env}")
        local = self._load_yaml("local.yaml") or {}

        self.config = self._deep_merge(base_config, env_config or {})
        self.config = self._deep_merge(self.config, local)
        self.config = self._substitute_env_vars(self.config)
        self.env = env
        self.logger.debug(f"Configuration loaded for environment: {env}")
        return True

    def _load_yaml(self, filename: str) -> Optional[Dict[str, Any]]:
        filepath = self.config_dir / filename
        if not filepath.exists():
            return None
        try:
            with open(filepath, 'r', encoding='utf-8') as f:
                data = yaml.safe_load(f)
        except yaml.YAMLError as e:
            raise ConfigurationError(f"Error parsing YAML file {filepath}: {e}") from e
        self.logger.debug(f"Loaded configuration from {filepath}")
        return data or {}

    def _deep_merge(self, base: Dict[str, Any], override: Dict[str, Any]) -> Dict[str, Any]:
        result = base.copy()
        for key, value in override.items():
            if key in result and isinstance(result[key], dict) and isinstance(value, dict):
                result[key] = self._deep_merge(result[key], value)
            else:
                result[key] = value
        return result

    def _substitute_env_vars(self, value: Any) -> Any:
        """
        Replace ${VAR} and ${VAR:-default} placeholders

        An unset variable without a default keeps its placeholder. A string
        that is exactly one placeholder is read back as YAML, so
        ``${WORKBENCH_SEED:-0}`` yields an int.
        """
        if isinstance(value, dict):
            return {k: self._substitute_env_vars(v) for k, v in value.items()}
        if isinstance(value, list):
            return [self._substitute_env_vars(item) for item in value]
        if not isinstance(value, str):
            return value

        def replace(match: re.Match) -> str:
            name, default = match.group(1), match.group(2)
            env_value = os.getenv(name)
            if env_value is not None:
                return env_value
            if default is not None:
                return default
            self.logger.warning(f"Environment variable {name} not found")
            return match.group(0)

        substituted = _PLACEHOLDER.sub(replace, value)
        if substituted != value and _PLACEHOLDER.fullmatch(value):
            try:
                return yaml.safe_load(substituted)
            except yaml.YAMLError:
                return substituted
        return substituted

    def get(self, key_path: str, default: Any = None) -> Any:
        """
        Get config value using dot notation

        Examples:
            config.get("rewrite.fuel", 1000000)
            config.get("models.tree.bound")

        Args:
            key_path: Dot-separated path to configuration value
            default: Default value if key doesn't exist

        Returns:
            Configuration value or default
        """
        value: Any = self.config
        for key in key_path.split('.'):
            if not isinstance(value, dict):
                return default
            value = value.get(key)
            if value is None:
                return default
        return value

    def set(self, key_path: str, value: Any):
        """Override a value (command-line flags)"""
        keys = key_path.split('.')
        node = self.config
        for key in keys[:-1]:
            node = node.setdefault(key, {})
        node[keys[-1]] = value

    def get_plugin_config(self, plugin_name: str) -> Dict[str, Any]:
        """Configuration block of a plugin (empty if not found)"""
        return self.get(f"plugins.{plugin_name}", {})

    def get_all(self) -> Dict[str, Any]:
        return self.config.copy()
