"""
Substructural Workbench

Command-line workbench for substructural lambda calculi, bracket
abstraction, applicative structures and their assemblies.

Features:
- planar, linear, bi-planar and tensor calculi with normalization
- bracket abstraction over every combinator basis, with oracle checks
- axiom checking and classification of term, tree and magma models
- assemblies, realizer recipes and applicative morphisms
- CPS translation, left inverses and a separation refutation suite

Every command prints a report and exits with 0 (pass), 1 (fail),
2 (unknown) or 3 (error).

Version: 1.0.0
"""

import argparse
import logging
import os
import sys
from pathlib import Path
from typing import Dict, List, NoReturn, Optional, Type

# Set UTF-8 encoding for Windows console
if sys.platform == 'win32':
    for stream in (sys.stdout, sys.stderr):
        if hasattr(stream, 'reconfigure'):
            stream.reconfigure(encoding='utf-8')

# Add project root to Python path
sys.path.insert(0, str(Path(__file__).parent))

# Core imports
from core.command_dispatcher import CommandDispatcher
from core.config_manager import ConfigManager
from core.errors import UsageError, WorkbenchError
from core.logger import setup_logging
from core.plugin_base import BasePlugin, Verdict
from core.plugin_registry import PluginRegistry
from core.report import Report

# Plugin imports
from plugins.classification.plugin import ClassificationPlugin
from plugins.realizability.plugin import RealizabilityPlugin
from plugins.separation.plugin import SeparationPlugin
from plugins.terms.plugin import TermsPlugin
from plugins.translation.plugin import TranslationPlugin
from plugins.tree_models.plugin import TreeModelsPlugin

PLUGIN_CLASSES: Dict[str, Type[BasePlugin]] = {
    "terms": TermsPlugin,
    "translation": TranslationPlugin,
    "classification": ClassificationPlugin,
    "tree_models": TreeModelsPlugin,
    "realizability": RealizabilityPlugin,
    "separation": SeparationPlugin,
}

DISCIPLINES = ["ordinary", "linear", "planar", "planar-tensor", "biplanar"]
BASES = ["sk", "bci", "bidot", "biidot", "biilp", "bibdi", "biidotcirc"]
STRATEGIES = ["leftmost-outermost", "rightmost-innermost", "random"]


class WorkbenchArgumentParser(argparse.ArgumentParser):
    """Usage errors raise instead of exiting with status 2"""

    def error(self, message: str) -> NoReturn:
        raise UsageError(f"{self.prog}: {message}")


def _constant_list(text: str) -> List[str]:
    return [c.strip().lstrip("#") for c in text.split(",") if c.strip()]


def common_options() -> argparse.ArgumentParser:
    """Flags every command accepts"""
    parent = WorkbenchArgumentParser(add_help=False)
    group = parent.add_argument_group("common options")
    group.add_argument("--discipline", choices=DISCIPLINES, help="Calculus (default: planar)")
    group.add_argument("--constants", type=_constant_list, metavar="C1,C2",
                       help="Declared constants, comma separated")
    group.add_argument("--eta", action=argparse.BooleanOptionalAction, default=None,
                       help="Enable eta (default: discipline preset)")
    group.add_argument("--fuel", type=int, help="Reduction step limit")
    group.add_argument("--seed", type=int, help="Random seed (default: $WORKBENCH_SEED or 0)")
    group.add_argument("--bound", type=int, help="Tree-model leaf bound")
    group.add_argument("--basis", choices=BASES, help="Combinator basis")
    group.add_argument("--strategy", choices=STRATEGIES, help="Reduction strategy")
    group.add_argument("--json", action="store_true", help="Emit the report as JSON")
    group.add_argument("--verbose", action="store_true", help="Debug logging on stderr")
    group.add_argument("--trace", action="store_true", help="Print reduction steps")
    group.add_argument("--timing", action="store_true", help="Include wall time in the report")
    group.add_argument("--env", default=None, help="Configuration environment (default: production)")
    return parent


class Workbench:
    """Main application class for the workbench"""

    def __init__(self, env: str = "production", verbose: bool = False):
        """
        Initialize the workbench application

        Args:
            env: Environment name (development, production)
            verbose: Force DEBUG logging
        """
        self.env = env
        self.verbose = verbose

        # Components (initialized in initialize())
        self.config: Optional[ConfigManager] = None
        self.logger: Optional[logging.Logger] = None
        self.plugin_registry: Optional[PluginRegistry] = None
        self.dispatcher: Optional[CommandDispatcher] = None
        self.parser: Optional[argparse.ArgumentParser] = None
        self.options: Dict[str, object] = {}

    def initialize(self) -> bool:
        """
        Load configuration, set up logging and register plugins

        Returns:
            True if initialization successful

        Raises:
            ConfigurationError: base configuration missing or malformed
        """
        self.config = ConfigManager()
        self.config.load(env=self.env)

        level = "DEBUG" if self.verbose else self.config.get('system.log_level', 'WARNING')
        self.logger = setup_logging(
            log_dir=self.config.get('system.log_dir'),
            log_level=level,
            app_name=self.config.get('system.app_name', 'workbench'),
        )
        app_name = self.config.get('system.app_name')
        app_version = self.config.get('system.version')
        self.logger.info(f"Starting {app_name} v{app_version} ({self.env})")

        self.plugin_registry = PluginRegistry(self.logger)
        enabled_plugins = self.config.get('plugins.enabled', list(PLUGIN_CLASSES))
        registered_count = 0
        for plugin_name in enabled_plugins:
            plugin_class = PLUGIN_CLASSES.get(plugin_name)
            if plugin_class is None:
                self.logger.warning(f"Unknown plugin in configuration: {plugin_name}")
                continue
            if self.plugin_registry.register(plugin_class, self.config.get_plugin_config(plugin_name)):
                registered_count += 1
            else:
                self.logger.warning(f"Failed to register plugin: {plugin_name}")
        self.logger.info(f"Registered {registered_count}/{len(enabled_plugins)} plugins")

        self.dispatcher = CommandDispatcher(self.plugin_registry, self.config, self.logger)
        self.parser = self.build_parser()
        return registered_count > 0

    def build_parser(self) -> argparse.ArgumentParser:
        """Top-level parser with one subcommand per registered command"""
        parent = common_options()
        parser = WorkbenchArgumentParser(
            prog="workbench",
            description="Substructural lambda calculi, combinatory algebras and assemblies",
            epilog="Exit status: 0 pass, 1 fail, 2 unknown, 3 error.",
        )
        subparsers = parser.add_subparsers(dest="command", metavar="COMMAND")
        subparsers.required = True
        for metadata in self.plugin_registry.list_plugins():
            plugin = self.plugin_registry.get_plugin(metadata.name)
            for command, help_text in metadata.commands.items():
                sub = subparsers.add_parser(command, help=help_text, description=help_text,
                                            parents=[parent])
                plugin.add_arguments(command, sub)
        return parser

    def run(self, argv: List[str]) -> Report:
        """
        Parse one command line and execute it

        Raises:
            UsageError: the command line does not parse
        """
        args = vars(self.parser.parse_args(argv))
        self.options = args
        if args.get("verbose"):
            logging.getLogger().setLevel(logging.DEBUG)
        command = args["command"]
        return self.dispatcher.dispatch(command, args)

    def shutdown(self):
        """Release plugin resources"""
        if self.plugin_registry:
            self.plugin_registry.cleanup_all()
        if self.logger:
            self.logger.info("Shutdown complete")


def _preparse(argv: List[str]) -> argparse.Namespace:
    """--env and --verbose are needed before the full parser exists"""
    pre = argparse.ArgumentParser(add_help=False)
    pre.add_argument("--env", default=None)
    pre.add_argument("--verbose", action="store_true")
    known, _ = pre.parse_known_args(argv)
    return known


def main(argv: Optional[List[str]] = None) -> int:
    """Application entry point; returns the exit status"""
    argv = list(sys.argv[1:] if argv is None else argv)
    early = _preparse(argv)
    app = Workbench(env=early.env or os.environ.get("WORKBENCH_ENV", "production"),
                    verbose=early.verbose)

    try:
        if not app.initialize():
            print("workbench: no plugins registered, check plugins.enabled", file=sys.stderr)
            return Verdict.ERROR.exit_code
        report = app.run(argv)
    except UsageError as e:
        print(f"usage error: {e}", file=sys.stderr)
        return Verdict.ERROR.exit_code
    except WorkbenchError as e:
        print(f"error: {e}", file=sys.stderr)
        return Verdict.ERROR.exit_code
    except KeyboardInterrupt:
        print("interrupted", file=sys.stderr)
        return Verdict.ERROR.exit_code
    finally:
        app.shutdown()

    timing = bool(app.options.get("timing"))
    print(report.to_json(timing) if app.options.get("json") else report.to_text(timing))
    return report.exit_code


if __name__ == "__main__":
    sys.exit(main())
