"""
Tests for the framework components

This module tests:
1. Configuration loading and placeholder substitution
2. Logger setup
3. Plugin registration and command routing
4. Command dispatch and reports
5. Verdicts and exit codes
6. Workbench initialization with every enabled plugin
"""

import json
import logging
import sys
from pathlib import Path

import pytest

# Add project root to path
sys.path.insert(0, str(Path(__file__).parent))

from core.command_dispatcher import CommandDispatcher
from core.config_manager import ConfigManager
from core.errors import ConfigurationError, DisciplineError
from core.logger import ColoredFormatter, get_logger, setup_logging
from core.plugin_base import (
    BasePlugin, CommandContext, PluginMetadata, PluginResult, PluginStatus, Verdict,
)
from core.plugin_registry import PluginRegistry
from core.report import Report, inputs_digest
from main import Workbench
from plugins.terms.plugin import TermsPlugin

CONFIG_DIR = Path(__file__).parent / "config"


@pytest.fixture
def logger():
    return logging.getLogger("test")


@pytest.fixture
def config():
    manager = ConfigManager(config_dir=str(CONFIG_DIR))
    manager.load(env="production")
    return manager


class EchoPlugin(BasePlugin):
    """Minimal plugin exercising the framework"""

    def get_metadata(self) -> PluginMetadata:
        return PluginMetadata(
            name="echo",
            version="0.1.0",
            description="Echo",
            commands={"echo": "Echo a word", "boom": "Raise"},
            config_schema={"greeting": {"type": "string", "required": True}},
        )

    def add_arguments(self, command, parser):
        parser.add_argument("word")

    def execute(self, context: CommandContext) -> PluginResult:
        if context.command == "boom":
            raise DisciplineError("not planar")
        word = context.args["word"]
        verdict = Verdict.PASS if word == "yes" else Verdict.FAIL
        return PluginResult(verdict is Verdict.PASS, f"{self.config['greeting']} {word}",
                            {"bounds": {"fuel": context.fuel}}, verdict, [word])


# ----------------------------------------------------------------------------
# Configuration
# ----------------------------------------------------------------------------

def test_config_defaults(config):
    assert config.get("system.app_name") == "workbench"
    assert config.get("rewrite.fuel") == 1000000
    assert config.get("models.tree.bound") == 7
    assert config.get("algebra.sample_size") == 200
    assert config.get("assemblies.universe_cap") == 500
    assert "separation" in config.get("plugins.enabled")
    assert config.get("missing.key", "fallback") == "fallback"


def test_config_environment_overrides():
    manager = ConfigManager(config_dir=str(CONFIG_DIR))
    manager.load(env="development")
    assert manager.get("system.log_level") == "DEBUG"
    assert manager.get("rewrite.fuel") == 100000
    # untouched keys still come from base.yaml
    assert manager.get("models.tree.group") == "integers"


def test_seed_placeholder_reads_environment(monkeypatch):
    monkeypatch.delenv("WORKBENCH_SEED", raising=False)
    manager = ConfigManager(config_dir=str(CONFIG_DIR))
    manager.load()
    assert manager.get("workbench.seed") == 0

    monkeypatch.setenv("WORKBENCH_SEED", "42")
    manager = ConfigManager(config_dir=str(CONFIG_DIR))
    manager.load()
    assert manager.get("workbench.seed") == 42


def test_config_missing_base(tmp_path):
    manager = ConfigManager(config_dir=str(tmp_path))
    with pytest.raises(ConfigurationError):
        manager.load()


def test_config_set_and_plugin_block(config):
    config.set("rewrite.fuel", 10)
    assert config.get("rewrite.fuel") == 10
    assert config.get_plugin_config("separation")["candidates_file"] == "data/candidates.yaml"
    assert config.get_plugin_config("nonexistent") == {}


# ----------------------------------------------------------------------------
# Logging
# ----------------------------------------------------------------------------

def test_setup_logging_console_only():
    logger = setup_logging(log_level="INFO", app_name="workbench-test")
    root = logging.getLogger()
    assert root.level == logging.INFO
    assert len(root.handlers) == 1
    assert isinstance(root.handlers[0].formatter, ColoredFormatter)
    assert logger.name == "workbench-test"
    assert get_logger("core.x").name == "core.x"


def test_setup_logging_file(tmp_path):
    setup_logging(log_dir=str(tmp_path / "logs"), log_level="DEBUG", app_name="wb")
    assert any(p.name.startswith("wb_") for p in (tmp_path / "logs").iterdir())
    setup_logging()


def test_colored_formatter_restores_levelname():
    formatter = ColoredFormatter(use_color=True)
    record = logging.LogRecord("x", logging.WARNING, __file__, 1, "careful", None, None)
    formatter.format(record)
    assert record.levelname == "WARNING"


# ----------------------------------------------------------------------------
# Registry and dispatch
# ----------------------------------------------------------------------------

def test_register_and_route(logger):
    registry = PluginRegistry(logger)
    assert registry.register(EchoPlugin, {"greeting": "hi"})
    assert registry.get_plugin_for_command("echo").get_metadata().name == "echo"
    assert registry.get_plugin_status("echo") is PluginStatus.INITIALIZED
    assert registry.health_check() == {"echo": True}
    # same name twice is refused
    assert not registry.register(EchoPlugin, {"greeting": "hi"})


class ShadowPlugin(EchoPlugin):
    """Claims a command EchoPlugin already serves"""

    def get_metadata(self) -> PluginMetadata:
        return PluginMetadata(name="shadow", version="0.1.0", description="Shadow",
                              commands={"echo": "Echo again"})


def test_register_refuses_command_clash(logger):
    registry = PluginRegistry(logger)
    assert registry.register(EchoPlugin, {"greeting": "hi"})
    assert not registry.register(ShadowPlugin, {"greeting": "hi"})
    assert registry.list_commands()["echo"] == "echo"
    assert len(registry) == 1


def test_register_rejects_missing_config(logger):
    registry = PluginRegistry(logger)
    assert not registry.register(EchoPlugin, {})
    assert registry.get_plugin_for_command("echo") is None


def test_unload_removes_commands(logger):
    registry = PluginRegistry(logger)
    registry.register(EchoPlugin, {"greeting": "hi"})
    assert registry.unload_plugin("echo")
    assert registry.list_commands() == {}


def test_dispatch_builds_report(logger, config):
    registry = PluginRegistry(logger)
    registry.register(EchoPlugin, {"greeting": "hi"})
    dispatcher = CommandDispatcher(registry, config, logger)

    report = dispatcher.dispatch("echo", {"word": "yes", "json": True})
    assert report.verdict is Verdict.PASS
    assert report.exit_code == 0
    assert report.message == "hi yes"
    assert report.bounds == {"fuel": 1000000}
    assert "json" not in report.inputs

    assert dispatcher.dispatch("echo", {"word": "no"}).exit_code == 1


def test_dispatch_errors_become_error_verdicts(logger, config):
    registry = PluginRegistry(logger)
    registry.register(EchoPlugin, {"greeting": "hi"})
    dispatcher = CommandDispatcher(registry, config, logger)

    report = dispatcher.dispatch("boom", {"word": "x"})
    assert report.verdict is Verdict.ERROR
    assert report.exit_code == 3
    assert "not planar" in report.message

    assert dispatcher.dispatch("nothing", {}).exit_code == 3


def test_available_commands(logger, config):
    registry = PluginRegistry(logger)
    registry.register(TermsPlugin, {})
    dispatcher = CommandDispatcher(registry, config, logger)
    assert set(dispatcher.get_available_commands()) == {"parse", "normalize", "eq"}
    assert dispatcher.get_stats()["healthy_plugins"] == 1


# ----------------------------------------------------------------------------
# Reports and verdicts
# ----------------------------------------------------------------------------

def test_verdict_exit_codes():
    assert [v.exit_code for v in Verdict] == [0, 1, 2, 3]
    assert Verdict.combine([]) is Verdict.PASS
    assert Verdict.combine([Verdict.PASS, Verdict.UNKNOWN]) is Verdict.UNKNOWN
    assert Verdict.combine([Verdict.UNKNOWN, Verdict.FAIL]) is Verdict.FAIL
    assert Verdict.combine([Verdict.FAIL, Verdict.ERROR]) is Verdict.ERROR


def test_inputs_digest_is_order_independent():
    assert inputs_digest({"a": 1, "b": [1, 2]}) == inputs_digest({"b": [1, 2], "a": 1})
    assert inputs_digest({"a": 1}) != inputs_digest({"a": 2})


def test_report_timing_only_on_request():
    result = PluginResult(True, "ok", {"plugin_name": "p", "extra": 1}, lines=["line"])
    report = Report.from_result("cmd", {"x": 1}, result, seed=3, bounds={"fuel": 5}, wall_time_ms=17)

    plain = json.loads(report.to_json())
    assert "wall_time_ms" not in plain
    assert plain["data"] == {"extra": 1}
    assert plain["seed"] == 3
    assert json.loads(report.to_json(timing=True))["wall_time_ms"] == 17

    text = report.to_text()
    assert text.splitlines()[0] == "line"
    assert "cmd: PASS - ok" in text
    assert "wall_time" not in text
    assert "wall_time=17ms" in report.to_text(timing=True)


def test_context_options_prefer_flags(config):
    context = CommandContext("normalize", {"fuel": 12, "seed": None}, config, logging.getLogger("t"))
    assert context.fuel == 12
    assert context.seed == 0
    assert context.bound == 7
    assert context.discipline().name == "planar"


# ----------------------------------------------------------------------------
# Initialization
# ----------------------------------------------------------------------------

def test_workbench_initializes(monkeypatch):
    monkeypatch.delenv("WORKBENCH_ENV", raising=False)
    app = Workbench(env="production")
    assert app.initialize()

    stats = app.dispatcher.get_stats()
    assert [p["name"] for p in stats["plugins"]] == [
        "terms", "translation", "classification", "tree_models", "realizability", "separation",
    ]
    assert stats["healthy_plugins"] == stats["total_plugins"] == 6
    assert {"parse", "abstract", "axioms", "tree-eval", "assembly-suite", "separation-suite"} <= set(
        app.dispatcher.get_available_commands())

    app.shutdown()
    assert len(app.plugin_registry) == 0
