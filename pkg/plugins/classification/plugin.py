"""
Classification Plugin

Commands:
- axioms: check combinator laws in a structure
- classify: place a structure in the class hierarchy, relative to its
  installed candidates
"""

import argparse
from pathlib import Path
from typing import Dict, List, Optional

from core.algebra.axioms import Axiom, AxiomVerdict, CheckMode, check_axiom, load_axioms
from core.algebra.classify import MEMBER, UNDECIDED, classify
from core.algebra.structure import ApplicativeStructure
from core.errors import UsageError
from core.models.factory import build_structure, default_mode
from core.plugin_base import (
    BasePlugin, CommandContext, PluginMetadata, PluginResult, Verdict, add_structure_arguments,
)

PROJECT_ROOT = Path(__file__).resolve().parents[2]

AXIOM_VERDICTS = {
    AxiomVerdict.HOLDS: Verdict.PASS,
    AxiomVerdict.FAILS_AT: Verdict.FAIL,
    AxiomVerdict.UNKNOWN: Verdict.UNKNOWN,
}


class ClassificationPlugin(BasePlugin):
    """Axiom checking and classification of applicative structures"""

    def get_metadata(self) -> PluginMetadata:
        return PluginMetadata(
            name="classification",
            version="1.0.0",
            description="Axiom checks and classification along the class hierarchy",
            commands={
                "axioms": "Check combinator laws in a structure",
                "classify": "Classify a structure relative to its candidates",
            },
            config_schema={"tree_samples": {"type": "integer", "default": 20}},
        )

    def add_arguments(self, command: str, parser: argparse.ArgumentParser):
        add_structure_arguments(parser)
        parser.add_argument("--mode", choices=["fresh-constants", "sampled", "exhaustive"],
                            help="Check mode (default: best supported by the structure)")
        parser.add_argument("--samples", type=int, help="Sample size for sampled checks")
        if command == "axioms":
            parser.add_argument("names", nargs="*", help="Axioms to check (default: all applicable)")
        else:
            parser.add_argument("--no-derive", action="store_true",
                                help="Do not install derived candidates between classes")

    def execute(self, context: CommandContext) -> PluginResult:
        spec = context.structure_spec()
        A = build_structure(spec, context.fuel, context.strategy)
        mode = self._mode(context, A, spec)
        axioms = self._axioms(context)
        if context.command == "axioms":
            return self._check_axioms(context, A, mode, axioms)
        if context.command == "classify":
            return self._classify(context, A, mode, axioms)
        return PluginResult.error(f"Unsupported command: {context.command}")

    def _mode(self, context: CommandContext, A: ApplicativeStructure, spec: dict) -> CheckMode:
        if spec["kind"] == "tree":
            default_n = self.config.get("tree_samples", 20)
        else:
            default_n = context.option("samples", "algebra.sample_size", 200)
        n = int(context.args.get("samples") or default_n)
        return default_mode(A, n, context.seed, context.args.get("mode"))

    def _axioms(self, context: CommandContext) -> Dict[str, Axiom]:
        path: Optional[str] = context.option("axioms_file", "algebra.axioms_file")
        if not path:
            return load_axioms()
        p = Path(path)
        return load_axioms(p if p.is_absolute() or p.exists() else PROJECT_ROOT / p)

    def _check_axioms(self, context: CommandContext, A: ApplicativeStructure, mode: CheckMode,
                      axioms: Dict[str, Axiom]) -> PluginResult:
        names: List[str] = list(context.args.get("names") or [])
        unknown = [n for n in names if n not in axioms]
        if unknown:
            raise UsageError(f"Unknown axioms: {', '.join(unknown)}")
        explicit = bool(names)
        names = names or list(axioms)

        lines, items, verdicts, skipped = [], [], [], []
        for name in names:
            ax = axioms[name]
            symbols, ops = ax.requirements()
            installed = all(A.distinguished(s) is not None for s in symbols) and all(A.has_unary(o) for o in ops)
            if not installed and not explicit:
                skipped.append(name)
                continue
            report = check_axiom(A, ax, mode)
            self.logger.debug(str(report))
            lines.append(str(report))
            items.append(report.to_dict())
            verdicts.append(AXIOM_VERDICTS[report.verdict])

        if skipped:
            lines.append(f"not installed: {', '.join(skipped)}")
        verdict = Verdict.combine(verdicts)
        holds = sum(1 for v in verdicts if v is Verdict.PASS)
        message = f"{holds}/{len(verdicts)} axioms hold in {A.name}"
        return PluginResult(verdict is Verdict.PASS, message,
                            {"structure": A.name, "mode": mode.describe(), "skipped": skipped,
                             "bounds": self._bounds(context, A, mode)},
                            verdict, lines, items)

    def _classify(self, context: CommandContext, A: ApplicativeStructure, mode: CheckMode,
                  axioms: Dict[str, Axiom]) -> PluginResult:
        report = classify(A, mode=mode, derive=not context.args.get("no_derive"), axioms=axioms)
        lines = []
        for name, result in report.results.items():
            lines.append(f"{name:<11} {result.status}")
            for axiom_report in result.reports:
                if not axiom_report.holds:
                    lines.append(f"    {axiom_report}")
            if result.missing:
                lines.append(f"    missing: {', '.join(result.missing)}")
        if report.derived:
            lines.append(f"derived: {', '.join(report.derived)}")
        lines.extend(f"note: {note}" for note in report.notes)

        undecided = any(r.status == UNDECIDED for r in report.results.values())
        verdict = Verdict.UNKNOWN if undecided else Verdict.PASS
        classes = report.classes
        message = f"{A.name} is shown in: {', '.join(classes)}" if classes else f"{A.name}: no class shown"
        items = [{"class": name, "verdict": "pass" if r.status == MEMBER else r.status}
                 for name, r in report.results.items()]
        return PluginResult(True, message,
                            {"classification": report.to_dict(), "bounds": self._bounds(context, A, mode)},
                            verdict, lines, items)

    @staticmethod
    def _bounds(context: CommandContext, A: ApplicativeStructure, mode: CheckMode) -> dict:
        bounds = {"fuel": context.fuel, "samples": mode.n}
        if hasattr(A, "bound"):
            bounds["tree_bound"] = A.bound
        return bounds
