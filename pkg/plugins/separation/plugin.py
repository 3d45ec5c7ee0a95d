"""
Separation Plugin

Commands:
- separation-suite: refute the candidate combinators of a candidates file
"""

import argparse
from pathlib import Path

from core.separation import REFUTATION_NOTE, load_candidates, separation_suite
from core.plugin_base import BasePlugin, CommandContext, PluginMetadata, PluginResult, Verdict

PROJECT_ROOT = Path(__file__).resolve().parents[2]

STATUS_VERDICTS = {
    "refuted": Verdict.PASS,
    "survives": Verdict.FAIL,
    "unknown": Verdict.UNKNOWN,
    "error": Verdict.ERROR,
}


class SeparationPlugin(BasePlugin):
    """Candidate refutations backing the separation results"""

    def get_metadata(self) -> PluginMetadata:
        return PluginMetadata(
            name="separation",
            version="1.0.0",
            description="Refutes candidate combinators by normalization",
            commands={"separation-suite": "Refute every candidate in a candidates file"},
            config_schema={"candidates_file": {"type": "string", "required": False}},
        )

    def add_arguments(self, command: str, parser: argparse.ArgumentParser):
        parser.add_argument("file", nargs="?", help="Candidates file (default: the shipped one)")

    def execute(self, context: CommandContext) -> PluginResult:
        if context.command != "separation-suite":
            return PluginResult.error(f"Unsupported command: {context.command}")

        name = context.args.get("file") or self.config.get("candidates_file")
        path = None
        if name:
            path = Path(name)
            if not path.is_absolute() and not path.exists():
                path = PROJECT_ROOT / path
        candidates = load_candidates(path)
        results = separation_suite(candidates, context.fuel)

        lines = [str(r) for r in results]
        lines.append(f"note: {REFUTATION_NOTE}")
        verdicts = [STATUS_VERDICTS[r.status] for r in results]
        verdict = Verdict.combine(verdicts)
        refuted = sum(1 for r in results if r.refuted)
        message = (f"{refuted}/{len(results)} candidates refuted" if results
                   else "no candidates listed, nothing to refute")
        return PluginResult(verdict is Verdict.PASS, message,
                            {"note": REFUTATION_NOTE, "bounds": {"fuel": context.fuel}},
                            verdict, lines, [r.to_dict() for r in results])
