"""
Tree Models Plugin

Commands:
- tree-eval: evaluate a combinator expression over sets of trees
- te-adjoint: check the adjoint pair between T and T_e and its comonad
"""

import argparse

from core.models.te_adjoint import check_te_adjoint, check_te_comonad, te_adjoint_pair
from core.models.tree_model import TreeModel, tree_model
from core.models.trees import format_tree, make_group, parse_trees
from core.errors import UsageError
from core.plugin_base import BasePlugin, CommandContext, PluginMetadata, PluginResult, Verdict


class TreeModelsPlugin(BasePlugin):
    """Tree-model evaluation and the adjoint-pair checks"""

    def get_metadata(self) -> PluginMetadata:
        return PluginMetadata(
            name="tree_models",
            version="1.0.0",
            description="Sets of trees over an ordered group as applicative structures",
            commands={
                "tree-eval": "Evaluate an expression over tree sets up to the bound",
                "te-adjoint": "Check the adjoint pair between T and T_e",
            },
            config_schema={
                "adjoint_bound": {"type": "integer", "default": 6},
                "adjoint_samples": {"type": "integer", "default": 100},
            },
        )

    def add_arguments(self, command: str, parser: argparse.ArgumentParser):
        parser.add_argument("--group", choices=["integers", "free"], help="Ordered group of leaf values")
        if command == "tree-eval":
            parser.add_argument("expression", help="Expression, e.g. 'B {1 <- 0} {0} {0}'")
            parser.add_argument("--variant", choices=["t", "tprime", "tdoubleprime", "te"],
                                help="Tree model variant")
            parser.add_argument("--equals", metavar="EXPR", help="Compare with another expression")
            parser.add_argument("--member", action="append", metavar="TREE",
                                help="Decide membership of a tree (repeatable)")
        else:
            parser.add_argument("--samples", type=int, help="Sampled finite sets per condition")

    def execute(self, context: CommandContext) -> PluginResult:
        if context.command == "tree-eval":
            return self._tree_eval(context)
        if context.command == "te-adjoint":
            return self._te_adjoint(context)
        return PluginResult.error(f"Unsupported command: {context.command}")

    def _model(self, context: CommandContext) -> TreeModel:
        alphabet = context.settings.get("models.tree.leaf_alphabet") if context.settings else None
        return tree_model(make_group(context.option("group", "models.tree.group", "integers")),
                          context.option("variant", "models.tree.variant", "t"),
                          context.bound,
                          [str(a) for a in alphabet] if alphabet else None)

    def _tree_eval(self, context: CommandContext) -> PluginResult:
        T = self._model(context)
        value = T.evaluate(context.args["expression"])
        lines = [f"{T.name}, bound {T.bound}", f"{value.label} = {T.show(value)}"]
        items, verdicts = [], []

        other_text = context.args.get("equals")
        if other_text:
            other = T.evaluate(other_text)
            eq = T.eq(value, other)
            verdict = Verdict.of_eq(eq)
            item = {"check": "equals", "verdict": verdict.value, "bound": T.bound}
            if verdict is Verdict.FAIL:
                witness = T.disagreement(value, other)
                item["witness"] = format_tree(witness, T.group)
                lines.append(f"differs at {item['witness']}")
            else:
                lines.append(f"agrees with {other.label} up to {T.bound} leaves")
            items.append(item)
            verdicts.append(verdict)

        for text in context.args.get("member") or []:
            parsed = parse_trees(text, T.group)
            if isinstance(parsed, frozenset):
                raise UsageError(f"--member takes a single tree, got {text}")
            inside = value.member(parsed)
            lines.append(f"{format_tree(parsed, T.group)} {'in' if inside else 'not in'} {value.label}")
            items.append({"check": "member", "tree": format_tree(parsed, T.group),
                          "verdict": "pass" if inside else "fail"})
            verdicts.append(Verdict.PASS if inside else Verdict.FAIL)

        verdict = Verdict.combine(verdicts)
        return PluginResult(verdict is Verdict.PASS, f"evaluated in {T.name}",
                            {"members": T.show(value), "bounds": {"tree_bound": T.bound}},
                            verdict, lines, items)

    def _te_adjoint(self, context: CommandContext) -> PluginResult:
        group = make_group(context.option("group", "models.tree.group", "integers"))
        bound = int(context.args.get("bound") or self.config.get("adjoint_bound", 6))
        samples = int(context.args.get("samples") or self.config.get("adjoint_samples", 100))
        pair = te_adjoint_pair(group, bound)

        reports = [check_te_adjoint(pair, samples, context.seed),
                   check_te_comonad(pair, samples, context.seed)]
        lines, items = [], []
        for report in reports:
            lines.append(f"{report.name}: {report.verdict.value}")
            for item in report.items:
                lines.append(f"  {item}")
                items.append(item.to_dict())
        verdict = Verdict.combine([Verdict(r.verdict.value) for r in reports])
        return PluginResult(verdict is Verdict.PASS,
                            f"adjoint pair {pair.T.name} / {pair.Te.name}: {verdict.value}",
                            {"bounds": {"tree_bound": bound, "samples": samples}},
                            verdict, lines, items)
