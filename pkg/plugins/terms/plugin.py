"""
Terms Plugin

Commands on raw lambda terms:
- parse: parse and validate against a discipline
- normalize: reduce to normal form within the fuel
- eq: decide equality by comparing normal forms
"""

import argparse
from typing import List

from core.calculus.grammar import parse, parse_valid
from core.calculus.rewrite import EqVerdict, FuelExhausted, ReductionRule, equal, normalize
from core.calculus.syntax import free_vars, pretty, term_size, validate
from core.plugin_base import BasePlugin, CommandContext, PluginMetadata, PluginResult, Verdict


class TermsPlugin(BasePlugin):
    """Parse, normalize and compare terms of a discipline"""

    def get_metadata(self) -> PluginMetadata:
        return PluginMetadata(
            name="terms",
            version="1.0.0",
            description="Parsing, validation and normalization of lambda terms",
            commands={
                "parse": "Parse a term and validate it against a discipline",
                "normalize": "Normalize a term within the fuel",
                "eq": "Decide beta(eta) equality of two terms",
            },
        )

    def add_arguments(self, command: str, parser: argparse.ArgumentParser):
        if command == "eq":
            parser.add_argument("left", help="First term")
            parser.add_argument("right", help="Second term")
        else:
            parser.add_argument("term", help="Term in concrete syntax")

    def execute(self, context: CommandContext) -> PluginResult:
        handlers = {"parse": self._parse, "normalize": self._normalize, "eq": self._eq}
        handler = handlers.get(context.command)
        if handler is None:
            return PluginResult.error(f"Unsupported command: {context.command}")
        return handler(context)

    def _parse(self, context: CommandContext) -> PluginResult:
        d = context.discipline()
        t = parse(context.args["term"], d)
        report = validate(t, d)
        lines = [pretty(t),
                 f"size {term_size(t)}, free variables: {', '.join(sorted(free_vars(t))) or 'none'}"]
        lines.extend(f"  violation: {v}" for v in report.violations)
        items = [{"check": "validate", "verdict": "pass" if report.ok else "fail",
                  "violations": [str(v) for v in report.violations]}]
        message = f"valid in {d.describe()}" if report.ok else f"not valid in {d.describe()}"
        return PluginResult(report.ok, message, {"term": pretty(t)}, lines=lines, items=items)

    def _normalize(self, context: CommandContext) -> PluginResult:
        d = context.discipline()
        t = parse_valid(context.args["term"], d)
        lines: List[str] = []

        def trace(index: int, rule: ReductionRule, path):
            lines.append(f"{index:>6}  {rule.value:<8} at {'.'.join(map(str, path)) or '<root>'}")

        fuel = context.fuel
        outcome = normalize(t, d, fuel, context.strategy, trace if context.args.get("trace") else None)
        bounds = {"fuel": fuel}
        if isinstance(outcome, FuelExhausted):
            lines.append(f"partial: {pretty(outcome.partial)}")
            return PluginResult(False, f"no normal form within {fuel} steps",
                                {"partial": pretty(outcome.partial), "steps": outcome.steps, "bounds": bounds},
                                Verdict.UNKNOWN, lines,
                                [{"check": "normalize", "verdict": "unknown", "steps": outcome.steps}])
        lines.append(pretty(outcome.term))
        return PluginResult(True, f"normal form after {outcome.steps} steps",
                            {"normal_form": pretty(outcome.term), "steps": outcome.steps, "bounds": bounds},
                            lines=lines,
                            items=[{"check": "normalize", "verdict": "pass", "steps": outcome.steps}])

    def _eq(self, context: CommandContext) -> PluginResult:
        d = context.discipline()
        left = parse_valid(context.args["left"], d)
        right = parse_valid(context.args["right"], d)
        verdict = equal(left, right, d, context.fuel)
        lines = []
        for label, t in (("left", left), ("right", right)):
            outcome = normalize(t, d, context.fuel, context.strategy)
            shown = pretty(outcome.partial) + " (partial)" if isinstance(outcome, FuelExhausted) else pretty(outcome.term)
            lines.append(f"{label}: {shown}")
        return PluginResult(verdict is EqVerdict.EQUAL, verdict.value, {"bounds": {"fuel": context.fuel}},
                            Verdict.of_eq(verdict), lines,
                            [{"check": "eq", "verdict": verdict.value}])

    def cleanup(self):
        pass
