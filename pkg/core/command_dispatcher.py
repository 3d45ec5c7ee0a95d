"""
Command Dispatcher

Routes a parsed command line to the plugin that owns the verb, times the
execution and wraps the outcome in a Report.
"""

import logging
import time
from typing import Any, Dict

from core.errors import WorkbenchError
from core.plugin_base import CommandContext, PluginResult
from core.plugin_registry import PluginRegistry
from core.report import Report

# Argument names that configure the CLI rather than the command
PRESENTATION_FLAGS = ("json", "verbose", "timing", "env", "command")


class CommandDispatcher:
    """Routes commands to appropriate plugins"""

    def __init__(self, registry: PluginRegistry, settings: Any, logger: logging.Logger):
        """
        Initialize command dispatcher

        Args:
            registry: Plugin registry for command routing
            settings: Merged configuration (ConfigManager)
            logger: Logger instance
        """
        self.registry = registry
        self.settings = settings
        self.logger = logger

    def dispatch(self, command: str, args: Dict[str, Any]) -> Report:
        """
        Execute one command and build its report

        Args:
            command: Verb, e.g. 'normalize'
            args: Parsed arguments of the verb and the common flags

        Returns:
            Report; plugin errors become ERROR verdicts
        """
        inputs = {k: v for k, v in sorted(args.items()) if k not in PRESENTATION_FLAGS}
        context = CommandContext(command, args, self.settings, self.logger)
        start_time = time.time()
        result = self._execute_command(context)
        execution_time = int((time.time() - start_time) * 1000)

        try:
            seed = context.seed
        except (TypeError, ValueError):
            seed = 0
        bounds = result.data.pop("bounds", {})
        report = Report.from_result(command, inputs, result, seed, bounds, execution_time)
        self.logger.info(f"Command {command}: {report.verdict.value} ({execution_time}ms)")
        return report

    def _execute_command(self, context: CommandContext) -> PluginResult:
        plugin = self.registry.get_plugin_for_command(context.command)
        if not plugin:
            return PluginResult.error(f"Unsupported command: {context.command}",
                                      available_commands=sorted(self.registry.list_commands()))

        plugin_name = plugin.get_metadata().name
        if not plugin.health_check():
            self.logger.error(f"Plugin {plugin_name} health check failed")
            return PluginResult.error(f"Plugin {plugin_name} is not available")

        try:
            result = plugin.execute(context)
        except WorkbenchError as e:
            self.logger.debug(f"{context.command} rejected its input: {e}")
            return PluginResult.error(str(e), error=type(e).__name__)
        except Exception as e:
            self.logger.error(f"Plugin execution error: {e}", exc_info=True)
            return PluginResult.error(f"Internal error: {e}", error=type(e).__name__)
        result.data['plugin_name'] = plugin_name
        result.data['action'] = context.command
        return result

    def get_available_commands(self) -> Dict[str, str]:
        """Command -> one-line help"""
        result = {}
        for command, plugin_name in self.registry.list_commands().items():
            plugin = self.registry.get_plugin(plugin_name)
            if plugin:
                result[command] = plugin.get_metadata().commands.get(command, "")
        return result

    def get_stats(self) -> Dict[str, Any]:
        plugins = self.registry.list_plugins()
        health_status = self.registry.health_check()
        return {
            "total_plugins": len(plugins),
            "total_commands": len(self.registry.list_commands()),
            "healthy_plugins": sum(1 for status in health_status.values() if status),
            "plugins": [
                {"name": p.name, "version": p.version, "commands": sorted(p.commands),
                 "healthy": health_status.get(p.name, False)}
                for p in plugins
            ],
        }
