"""
Realizability Plugin

Commands:
- assembly-suite: run the closed-structure recipes, the declared maps and
  the tensor modesty witness of assembly files
- check-map: check one map declared in an assembly file
"""

import argparse
from pathlib import Path
from typing import Dict, List, Tuple

from core.assemblies.assembly import MapReport, MapVerdict, check_map, tensor_assembly
from core.assemblies.loader import AssemblyFile, load_assembly_file
from core.assemblies.recipes import RealizedMap, closed_structure_suite
from core.errors import UsageError
from core.plugin_base import BasePlugin, CommandContext, PluginMetadata, PluginResult, Verdict

PROJECT_ROOT = Path(__file__).resolve().parents[2]


def _resolve(path: str) -> Path:
    p = Path(path)
    return p if p.is_absolute() or p.exists() else PROJECT_ROOT / p


class RealizabilityPlugin(BasePlugin):
    """Assemblies over applicative structures"""

    def get_metadata(self) -> PluginMetadata:
        return PluginMetadata(
            name="realizability",
            version="1.0.0",
            description="Assemblies, realized maps and the closed-structure recipes",
            commands={
                "assembly-suite": "Run the recipe suite on assembly files",
                "check-map": "Check a map declared in an assembly file",
            },
            config_schema={"assembly_files": {"type": "list", "required": True}},
        )

    def add_arguments(self, command: str, parser: argparse.ArgumentParser):
        if command == "assembly-suite":
            parser.add_argument("files", nargs="*", help="Assembly files (default: the shipped ones)")
        else:
            parser.add_argument("file", help="Assembly file")
            parser.add_argument("map", help="Name of the map to check")

    def execute(self, context: CommandContext) -> PluginResult:
        if context.command == "assembly-suite":
            return self._suite(context)
        if context.command == "check-map":
            return self._check_map(context)
        return PluginResult.error(f"Unsupported command: {context.command}")

    def _cap(self, context: CommandContext) -> int:
        return int(context.option("universe_cap", "assemblies.universe_cap", 500))

    def _suite(self, context: CommandContext) -> PluginResult:
        files = context.args.get("files") or self.config.get("assembly_files", [])
        if not files:
            raise UsageError("No assembly files given")
        lines: List[str] = []
        items: List[dict] = []
        verdicts: List[Verdict] = []
        for name in files:
            loaded = load_assembly_file(_resolve(name), context.fuel)
            lines.append(f"== {loaded.name} over {loaded.structure.name}")
            for section, reports, notes in self._run_file(loaded, self._cap(context)):
                for report in reports:
                    lines.append(f"  [{section}] {report}")
                    entry = report.to_dict()
                    entry["file"] = loaded.name
                    entry["section"] = section
                    items.append(entry)
                    verdicts.append(Verdict(report.verdict.value))
                lines.extend(f"  note: {n}" for n in notes)

        verdict = Verdict.combine(verdicts)
        passed = sum(1 for v in verdicts if v is Verdict.PASS)
        return PluginResult(verdict is Verdict.PASS, f"{passed}/{len(verdicts)} items pass",
                            {"bounds": {"fuel": context.fuel, "universe_cap": self._cap(context)}},
                            verdict, lines, items)

    def _run_file(self, loaded: AssemblyFile, cap: int) -> List[Tuple[str, List[MapReport], List[str]]]:
        sections = []
        if loaded.suite:
            X, Y, Z = (loaded.assemblies[n] for n in loaded.suite)
            suite = closed_structure_suite(loaded.structure, X, Y, Z, self._suite_maps(loaded), cap=cap)
            notes = list(suite.notes) + [f"skipped {s}" for s in suite.skipped]
            sections.append(("suite", suite.items, notes))
        if loaded.maps:
            sections.append(("maps", [check_map(m) for m in loaded.maps.values()], []))
        if loaded.tensor_witness:
            sections.append(("tensor", [self._tensor_witness(loaded)], []))
        self.logger.debug(f"{loaded.name}: {sum(len(s[1]) for s in sections)} items")
        return sections

    @staticmethod
    def _suite_maps(loaded: AssemblyFile) -> Dict[str, RealizedMap]:
        """Declared maps f: X -> Y and g: Y -> Z feed the suite"""
        if not loaded.suite:
            return {}
        X, Y, Z = loaded.suite
        wanted = {"f": (X, Y), "g": (Y, Z)}
        out = {}
        for key, (source, target) in wanted.items():
            m = loaded.maps.get(key)
            if m and m.side == "right" and (m.source.name, m.target.name) == (source, target):
                out[key] = RealizedMap(dict(m.function), m.realizer)
        return out

    @staticmethod
    def _tensor_witness(loaded: AssemblyFile) -> MapReport:
        """Modest X and Y whose tensor is not modest"""
        X, Y = (loaded.assemblies[n] for n in loaded.tensor_witness)
        report = MapReport(f"{X.name} * {Y.name} not modest", MapVerdict.FAIL, checked=1)
        if not (X.modest and Y.modest):
            report.note = "factors are not modest"
            return report
        tensor = tensor_assembly(X, Y, loaded.structure)
        witness = tensor.modesty_witness()
        if witness is None:
            report.note = "tensor is modest"
            return report
        p, q, shared = witness
        report.verdict = MapVerdict.PASS
        report.witness = {"points": f"{p}, {q}", "realizer": loaded.structure.describe(shared)}
        return report

    def _check_map(self, context: CommandContext) -> PluginResult:
        loaded = load_assembly_file(_resolve(context.args["file"]), context.fuel)
        name = context.args["map"]
        if name not in loaded.maps:
            raise UsageError(f"No map {name!r} in {loaded.name}; declared: {', '.join(loaded.maps) or 'none'}")
        report = check_map(loaded.maps[name])
        verdict = Verdict(report.verdict.value)
        return PluginResult(verdict is Verdict.PASS, str(report), {"bounds": {"fuel": context.fuel}},
                            verdict, [str(report)], [report.to_dict()])
