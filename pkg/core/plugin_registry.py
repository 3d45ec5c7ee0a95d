"""
Plugin Registry

Owns the plugin instances behind the command line. Every command a plugin
declares becomes one subcommand, so a command may belong to one plugin only.
"""

import logging
from typing import Any, Dict, List, Optional, Type

from core.plugin_base import BasePlugin, PluginMetadata, PluginStatus


class PluginRegistry:
    """Plugins by name and commands by owner"""

    def __init__(self, logger: logging.Logger):
        self.logger = logger
        self._plugins: Dict[str, BasePlugin] = {}
        self._owners: Dict[str, str] = {}  # command -> plugin name

    def register(self, plugin_class: Type[BasePlugin], config: Dict[str, Any]) -> bool:
        """
        Instantiate, validate and initialize a plugin, then route its commands

        A plugin is refused when its name is taken, when one of its commands
        already belongs to another plugin, or when its configuration or
        initialization fails.

        Args:
            plugin_class: BasePlugin subclass
            config: the plugin's block from plugins.<name>

        Returns:
            True if the plugin now serves its commands
        """
        try:
            plugin = plugin_class(config, logging.getLogger(f"plugins.{plugin_class.__name__}"))
            metadata = plugin.get_metadata()
        except Exception as e:
            self.logger.error(f"Cannot instantiate {plugin_class.__name__}: {e}", exc_info=True)
            return False

        if metadata.name in self._plugins:
            self.logger.error(f"Plugin {metadata.name} already registered")
            return False
        clashes = {cmd: self._owners[cmd] for cmd in metadata.commands if cmd in self._owners}
        if clashes:
            owned = ", ".join(f"{cmd} ({owner})" for cmd, owner in clashes.items())
            self.logger.error(f"Plugin {metadata.name} refused, commands already taken: {owned}")
            return False

        self.logger.debug(f"Registering plugin: {metadata.name} v{metadata.version}")
        if not plugin.validate_config():
            self.logger.error(f"Plugin {metadata.name} config validation failed")
            plugin.status = PluginStatus.FAILED
            return False
        plugin.status = PluginStatus.LOADED
        try:
            ready = plugin.initialize()
        except Exception as e:
            self.logger.error(f"Plugin {metadata.name} raised during initialization: {e}", exc_info=True)
            ready = False
        if not ready:
            self.logger.error(f"Plugin {metadata.name} initialization failed")
            plugin.status = PluginStatus.FAILED
            return False

        plugin.status = PluginStatus.INITIALIZED
        self._plugins[metadata.name] = plugin
        self._owners.update({cmd: metadata.name for cmd in metadata.commands})
        self.logger.info(f"Plugin {metadata.name} registered: {', '.join(metadata.commands)}")
        return True

    def get_plugin_for_command(self, command: str) -> Optional[BasePlugin]:
        owner = self._owners.get(command)
        if owner is None:
            self.logger.warning(f"No plugin serves command: {command}")
            return None
        return self._plugins[owner]

    def get_plugin(self, name: str) -> Optional[BasePlugin]:
        return self._plugins.get(name)

    def list_plugins(self) -> List[PluginMetadata]:
        return [p.get_metadata() for p in self._plugins.values()]

    def list_commands(self) -> Dict[str, str]:
        """Command -> plugin name, in registration order"""
        return dict(self._owners)

    def get_plugin_status(self, name: str) -> Optional[PluginStatus]:
        plugin = self._plugins.get(name)
        return plugin.status if plugin else None

    def health_check(self, name: Optional[str] = None) -> Dict[str, bool]:
        """Plugin name -> healthy, for one plugin or all of them"""
        if name is None:
            return {plugin_name: p.health_check() for plugin_name, p in self._plugins.items()}
        plugin = self._plugins.get(name)
        if plugin is None:
            self.logger.warning(f"Plugin {name} not found for health check")
            return {}
        return {name: plugin.health_check()}

    def unload_plugin(self, name: str) -> bool:
        plugin = self._plugins.pop(name, None)
        if plugin is None:
            self.logger.warning(f"Plugin {name} not found for unloading")
            return False
        self._owners = {cmd: owner for cmd, owner in self._owners.items() if owner != name}
        try:
            plugin.cleanup()
        except Exception as e:
            self.logger.error(f"Error cleaning up plugin {name}: {e}", exc_info=True)
        plugin.status = PluginStatus.UNLOADED
        self.logger.debug(f"Plugin {name} unloaded")
        return True

    def cleanup_all(self):
        for name in list(self._plugins):
            self.unload_plugin(name)

    def __len__(self) -> int:
        return len(self._plugins)

    def __repr__(self):
        return f"PluginRegistry(plugins={len(self._plugins)}, commands={len(self._owners)})"
