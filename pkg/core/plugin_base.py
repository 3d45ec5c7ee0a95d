"""
Plugin Base Classes and Interfaces

Every group of workbench commands is a plugin. A plugin declares its
commands and their arguments, and turns a CommandContext into a
PluginResult carrying a verdict.
"""

import argparse
import logging
from abc import ABC, abstractmethod
from dataclasses import dataclass, field
from datetime import datetime
from enum import Enum
from typing import Any, Dict, List, Optional

from core.calculus.rewrite import EqVerdict, Strategy
from core.calculus.syntax import Discipline
from core.compile.combterm import Basis
from core.errors import UsageError


class PluginStatus(Enum):
    """Plugin lifecycle status"""
    UNLOADED = "unloaded"
    LOADED = "loaded"
    INITIALIZED = "initialized"
    FAILED = "failed"


class Verdict(Enum):
    """Outcome of a command, mapped onto the exit status"""
    PASS = "pass"
    FAIL = "fail"
    UNKNOWN = "unknown"
    ERROR = "error"

    @property
    def exit_code(self) -> int:
        return {"pass": 0, "fail": 1, "unknown": 2, "error": 3}[self.value]

    @classmethod
    def of_eq(cls, verdict: EqVerdict) -> "Verdict":
        return {EqVerdict.EQUAL: cls.PASS, EqVerdict.NOT_EQUAL: cls.FAIL,
                EqVerdict.UNKNOWN: cls.UNKNOWN}[verdict]

    @classmethod
    def combine(cls, verdicts: List["Verdict"]) -> "Verdict":
        """Worst verdict wins: error, then fail, then unknown"""
        for worst in (cls.ERROR, cls.FAIL, cls.UNKNOWN):
            if worst in verdicts:
                return worst
        return cls.PASS


@dataclass
class PluginMetadata:
    """Plugin metadata descriptor"""
    name: str
    version: str
    description: str
    commands: Dict[str, str]  # command -> one-line help
    dependencies: List[str] = field(default_factory=list)
    config_schema: Dict[str, Any] = field(default_factory=dict)
    priority: int = 100


@dataclass
class CommandContext:
    """
    Context passed to a plugin when executing a command

    ``args`` holds the parsed command line; ``settings`` is the merged
    configuration. Flags override settings through ``option``.
    """
    command: str
    args: Dict[str, Any]
    settings: Any
    logger: logging.Logger
    timestamp: datetime = field(default_factory=datetime.now)

    def option(self, name: str, key: str, default: Any = None) -> Any:
        value = self.args.get(name)
        if value is not None:
            return value
        return self.settings.get(key, default) if self.settings is not None else default

    @property
    def seed(self) -> int:
        return int(self.option("seed", "workbench.seed", 0))

    @property
    def fuel(self) -> int:
        return int(self.option("fuel", "rewrite.fuel", 1_000_000))

    @property
    def strategy(self) -> Strategy:
        name = self.option("strategy", "rewrite.strategy", "leftmost-outermost")
        try:
            return Strategy.named(name, self.seed)
        except ValueError:
            raise UsageError(f"Unknown strategy: {name}") from None

    @property
    def bound(self) -> int:
        return int(self.option("bound", "models.tree.bound", 7))

    def discipline(self, default: str = "planar") -> Discipline:
        constants = self.args.get("constants") or []
        return Discipline.named(self.args.get("discipline") or default, constants, self.args.get("eta"))

    def basis(self, default: Optional[str] = None) -> Basis:
        name = self.args.get("basis") or default
        if name is None:
            raise UsageError("--basis is required")
        return Basis(name)

    def structure_spec(self) -> Dict[str, Any]:
        """Structure description for the model factory from --model and friends"""
        kind = self.args.get("model") or "term"
        if kind == "magma":
            if not self.args.get("magma"):
                raise UsageError("--model magma needs --magma FILE")
            return {"kind": "magma", "file": self.args["magma"]}
        if kind == "tree":
            return {
                "kind": "tree",
                "group": self.option("group", "models.tree.group", "integers"),
                "variant": self.option("variant", "models.tree.variant", "t"),
                "bound": self.bound,
                "alphabet": self.settings.get("models.tree.leaf_alphabet") if self.settings else None,
            }
        spec: Dict[str, Any] = {
            "kind": "term",
            "discipline": self.args.get("discipline") or "planar",
            "constants": self.args.get("constants") or [],
            "eta": self.args.get("eta"),
        }
        candidates = {}
        for item in self.args.get("candidate") or []:
            symbol, sep, text = item.partition("=")
            if not sep or not symbol.strip():
                raise UsageError(f"--candidate expects SYMBOL=TERM, got {item!r}")
            candidates[symbol.strip()] = text.strip()
        if candidates:
            spec["candidates"] = candidates
        return spec


def add_structure_arguments(parser: argparse.ArgumentParser):
    """Options selecting the applicative structure a command works in"""
    parser.add_argument("--model", choices=["term", "tree", "magma"], default=None,
                        help="Structure kind (default: term model of --discipline)")
    parser.add_argument("--candidate", action="append", metavar="SYMBOL=TERM",
                        help="Candidate combinator for the term model (repeatable)")
    parser.add_argument("--magma", metavar="FILE", help="YAML multiplication table")
    parser.add_argument("--variant", choices=["t", "tprime", "tdoubleprime", "te"],
                        help="Tree model variant")
    parser.add_argument("--group", choices=["integers", "free"], help="Ordered group of leaf values")


class PluginResult:
    """
    Standardized result from plugin execution

    ``lines`` is the human-readable body of the report and ``items`` the
    per-check verdicts that go into the JSON report.
    """

    def __init__(self, success: bool, message: str, data: Optional[Dict[str, Any]] = None,
                 verdict: Optional[Verdict] = None, lines: Optional[List[str]] = None,
                 items: Optional[List[Dict[str, Any]]] = None):
        self.success = success
        self.message = message
        self.data = data or {}
        self.verdict = verdict or (Verdict.PASS if success else Verdict.FAIL)
        self.lines = lines or []
        self.items = items or []
        self.timestamp = datetime.now()

    @classmethod
    def error(cls, message: str, **data) -> "PluginResult":
        return cls(False, message, data, Verdict.ERROR)

    def __repr__(self):
        return f"PluginResult(verdict={self.verdict.value}, message='{self.message}')"


class BasePlugin(ABC):
    """
    Base class all plugins must inherit from

    A plugin owns a group of commands. It adds their arguments to the
    command-line parser and executes them.
    """

    def __init__(self, config: Dict[str, Any], logger: logging.Logger):
        """
        Initialize plugin with configuration and logger

        Args:
            config: Plugin-specific configuration dictionary
            logger: Logger instance for this plugin
        """
        self.config = config or {}
        self.logger = logger
        self.status = PluginStatus.UNLOADED

    @abstractmethod
    def get_metadata(self) -> PluginMetadata:
        """Return plugin metadata"""

    @abstractmethod
    def add_arguments(self, command: str, parser: argparse.ArgumentParser):
        """Declare the positional arguments and options of one command"""

    @abstractmethod
    def execute(self, context: CommandContext) -> PluginResult:
        """
        Execute one of the plugin's commands

        Args:
            context: Command execution context

        Returns:
            PluginResult with a verdict
        """

    def initialize(self) -> bool:
        """Load data files or validate resources; False aborts registration"""
        return True

    def cleanup(self):
        """Release resources"""

    def validate_config(self) -> bool:
        """
        Validate plugin configuration against the schema

        Returns:
            True if every required key is present
        """
        metadata = self.get_metadata()
        for key, schema in metadata.config_schema.items():
            if schema.get('required', False) and key not in self.config:
                self.logger.error(f"Required configuration key '{key}' missing")
                return False
        return True

    def health_check(self) -> bool:
        return self.status == PluginStatus.INITIALIZED
