"""
Workbench Exceptions

One hierarchy for every failure the workbench reports. Plugins catch these
and turn them into failed results; the CLI maps them to exit codes.
"""

from typing import Optional


class WorkbenchError(Exception):
    """Base class for all workbench errors"""


class UsageError(WorkbenchError):
    """Bad command-line usage (exit code 3)"""


class ConfigurationError(WorkbenchError):
    """Configuration could not be loaded or is inconsistent"""


class TermSyntaxError(WorkbenchError):
    """Concrete syntax error in a term or combinator expression"""

    def __init__(self, message: str, line: Optional[int] = None, column: Optional[int] = None):
        self.line = line
        self.column = column
        where = f" at line {line}, column {column}" if line is not None else ""
        super().__init__(f"{message}{where}")


class UnknownConstantError(WorkbenchError):
    """A constant symbol not declared by the discipline"""

    def __init__(self, symbol: str):
        self.symbol = symbol
        super().__init__(f"Unknown constant: #{symbol}")


class DisciplineError(WorkbenchError):
    """A discipline was built from inconsistent flags or an unknown name"""


class AbstractionError(WorkbenchError):
    """Precondition of a bracket abstraction violated"""


class TranslationError(WorkbenchError):
    """Input outside the domain of a translation"""


class MissingCombinatorError(WorkbenchError):
    """An axiom or recipe needs a distinguished element that is not installed"""

    def __init__(self, symbol: str, structure: str = ""):
        self.symbol = symbol
        where = f" in {structure}" if structure else ""
        super().__init__(f"No candidate installed for '{symbol}'{where}")


class UnsupportedModeError(WorkbenchError):
    """Axiom-check mode not available for this structure"""


class DuplicateOperationError(WorkbenchError):
    """A unary operation was installed twice"""


class AssemblyError(WorkbenchError):
    """Malformed assembly, map or morphism data"""


class ModelError(WorkbenchError):
    """An element outside the carrier of a model"""
