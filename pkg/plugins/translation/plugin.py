"""
Translation Plugin

Commands:
- abstract: bracket abstraction over a basis, checked against substitution
- compile-tensor: planar tensor terms to the B, I, Ix, L, P, dot basis
- cps: call-by-value CPS image
- ceq: computational equality through the CPS images
- left-inverse: left inverse of a closed planar term
"""

import argparse
from typing import Any

from core.calculus.grammar import parse, parse_valid
from core.calculus.rewrite import EqVerdict
from core.calculus.syntax import Discipline, constants_of, pretty
from core.compile.abstraction import abstract_many
from core.compile.combterm import comb_size, cvars, parse_comb, render
from core.compile.cps import computational_eq, cps_translate
from core.compile.left_inverse import left_inverse
from core.compile.oracle import abstraction_sound, left_inverse_sound, tensor_round_trip
from core.compile.tensor import compile_tensor
from core.errors import UsageError
from core.plugin_base import BasePlugin, CommandContext, PluginMetadata, PluginResult, Verdict


def _term_literal(kind: str, text: str) -> Any:
    if kind != "term":
        raise UsageError("Only [term] literals are allowed in polynomials")
    return parse(text)


def _checked(name: str, result_text: str, verdict: EqVerdict, check: str, data: dict) -> PluginResult:
    lines = [result_text, f"{check}: {verdict.value}"]
    data["result"] = result_text
    return PluginResult(verdict is EqVerdict.EQUAL, f"{name} {check} {verdict.value}", data,
                        Verdict.of_eq(verdict), lines, [{"check": check, "verdict": verdict.value}])


class TranslationPlugin(BasePlugin):
    """Bracket abstraction and the term translations"""

    def get_metadata(self) -> PluginMetadata:
        return PluginMetadata(
            name="translation",
            version="1.0.0",
            description="Bracket abstraction, tensor translation, CPS and left inverses",
            commands={
                "abstract": "Abstract variables from a combinator polynomial",
                "compile-tensor": "Translate a closed planar tensor term into combinators",
                "cps": "Call-by-value CPS translation of an ordinary term",
                "ceq": "Decide computational equality through the CPS images",
                "left-inverse": "Build a left inverse of a closed planar term",
            },
        )

    def add_arguments(self, command: str, parser: argparse.ArgumentParser):
        if command == "abstract":
            parser.add_argument("polynomial", help="Combinator expression; [term] embeds a lambda term")
            parser.add_argument("variables", nargs="+", help="Variables to abstract, outermost first")
            parser.add_argument("--left", action="store_true", help="Left abstraction (bibdi only)")
        elif command == "ceq":
            parser.add_argument("left", help="First ordinary term")
            parser.add_argument("right", help="Second ordinary term")
        else:
            parser.add_argument("term", help="Term in concrete syntax")

    def execute(self, context: CommandContext) -> PluginResult:
        handlers = {
            "abstract": self._abstract,
            "compile-tensor": self._compile_tensor,
            "cps": self._cps,
            "ceq": self._ceq,
            "left-inverse": self._left_inverse,
        }
        handler = handlers.get(context.command)
        if handler is None:
            return PluginResult.error(f"Unsupported command: {context.command}")
        return handler(context)

    def _abstract(self, context: CommandContext) -> PluginResult:
        basis = context.basis()
        m = parse_comb(context.args["polynomial"], _term_literal)
        xs = list(context.args["variables"])
        missing = [x for x in xs if x not in cvars(m)]
        if missing:
            raise UsageError(f"Variables not in the polynomial: {', '.join(missing)}")
        left = bool(context.args.get("left"))
        result = abstract_many(m, xs, basis, left)
        self.logger.debug(f"abstract {xs} over {basis.value}: size {comb_size(result)}")
        verdict = abstraction_sound(m, xs, result, basis, left, context.fuel)
        return _checked("abstraction", render(result), verdict, "substitution check",
                        {"basis": basis.value, "bounds": {"fuel": context.fuel}})

    def _compile_tensor(self, context: CommandContext) -> PluginResult:
        d = Discipline.planar_tensor(context.args.get("constants") or [])
        t = parse_valid(context.args["term"], d)
        result = compile_tensor(t)
        verdict = tensor_round_trip(t, context.fuel)
        return _checked("tensor translation", render(result), verdict, "round trip",
                        {"bounds": {"fuel": context.fuel}})

    def _cps(self, context: CommandContext) -> PluginResult:
        t = parse(context.args["term"])
        image = cps_translate(t)
        return PluginResult(True, "CPS image", {"result": pretty(image)}, lines=[pretty(image)],
                            items=[{"check": "cps", "verdict": "pass"}])

    def _ceq(self, context: CommandContext) -> PluginResult:
        left = parse(context.args["left"])
        right = parse(context.args["right"])
        verdict = computational_eq(left, right, context.fuel)
        lines = [f"left:  {pretty(cps_translate(left))}", f"right: {pretty(cps_translate(right))}"]
        return PluginResult(verdict is EqVerdict.EQUAL, verdict.value, {"bounds": {"fuel": context.fuel}},
                            Verdict.of_eq(verdict), lines, [{"check": "ceq", "verdict": verdict.value}])

    def _left_inverse(self, context: CommandContext) -> PluginResult:
        t = parse(context.args["term"])
        if constants_of(t):
            raise UsageError("left-inverse takes a constant-free term")
        n = left_inverse(t)
        verdict = left_inverse_sound(n, t, context.fuel)
        return _checked("left inverse", pretty(n), verdict, "N M = \\x. x",
                        {"bounds": {"fuel": context.fuel}})

