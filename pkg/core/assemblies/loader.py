"""
Assembly Files

Declarative YAML description of a structure, assemblies over it, maps
between them and the suite instance to run.

    structure:
      kind: term              # term | tree | magma
      discipline: planar
      constants: []
      eta: false
      candidates: {}          # symbol: term; defaults to the standard representatives
    assemblies:
      X:
        a: ['\\x. x']
        b: ['\\x. x (\\y. y)']
    maps:
      f: {source: X, target: X, function: {a: a, b: b}, realizer: '\\x. x'}
    suite: {X: X, Y: X, Z: X}
    tensor_witness: {X: X, Y: X}
"""

from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Dict, Optional, Tuple, Union

import yaml

from core.algebra.structure import ApplicativeStructure
from core.assemblies.assembly import Assembly, AssemblyMap
from core.errors import AssemblyError, ConfigurationError, WorkbenchError
from core.logger import get_logger
from core.models.factory import build_structure
from core.models.term_model import TermModel
from core.models.tree_model import TreeModel

logger = get_logger(__name__)


@dataclass
class AssemblyFile:
    name: str
    structure: ApplicativeStructure
    assemblies: Dict[str, Assembly] = field(default_factory=dict)
    maps: Dict[str, AssemblyMap] = field(default_factory=dict)
    suite: Optional[Tuple[str, str, str]] = None
    tensor_witness: Optional[Tuple[str, str]] = None


def _element(A: ApplicativeStructure, source: Any):
    if isinstance(A, (TermModel, TreeModel)):
        return A.element(str(source))
    return str(source)


def load_assembly_file(path: Union[str, Path], fuel: int = 1_000_000) -> AssemblyFile:
    """
    Load structure, assemblies and maps from YAML

    Args:
        path: File path
        fuel: Fuel of the term model

    Returns:
        AssemblyFile

    Raises:
        ConfigurationError: file missing or not YAML
        AssemblyError: inconsistent contents
    """
    path = Path(path)
    if not path.exists():
        raise ConfigurationError(f"Assembly file not found: {path}")
    try:
        with open(path, "r", encoding="utf-8") as f:
            data = yaml.safe_load(f) or {}
    except yaml.YAMLError as e:
        raise ConfigurationError(f"Error parsing {path}: {e}") from e

    spec = dict(data.get("structure") or {})
    if spec.get("file"):
        spec["file"] = str(path.parent / spec["file"])
    try:
        A = build_structure(spec, fuel)
    except WorkbenchError as e:
        raise AssemblyError(f"{path.name}: {e}") from e

    loaded = AssemblyFile(data.get("name", path.stem), A)
    for name, points in (data.get("assemblies") or {}).items():
        realizers = {str(p): [_element(A, r) for r in rs] for p, rs in points.items()}
        loaded.assemblies[name] = Assembly(name, A, realizers)

    for name, spec in (data.get("maps") or {}).items():
        try:
            source = loaded.assemblies[spec["source"]]
            target = loaded.assemblies[spec["target"]]
        except KeyError as e:
            raise AssemblyError(f"Map {name}: unknown assembly {e}") from None
        function = {str(k): str(v) for k, v in spec.get("function", {}).items()}
        side = spec.get("side", "right")
        loaded.maps[name] = AssemblyMap(source, target, function, _element(A, spec["realizer"]), name, side)

    suite = data.get("suite")
    if suite:
        loaded.suite = (suite["X"], suite["Y"], suite["Z"])
    witness = data.get("tensor_witness")
    if witness:
        loaded.tensor_witness = (witness["X"], witness["Y"])

    for names in filter(None, [loaded.suite, loaded.tensor_witness]):
        for n in names:
            if n not in loaded.assemblies:
                raise AssemblyError(f"{path.name}: unknown assembly {n}")
    logger.debug(f"Loaded {len(loaded.assemblies)} assemblies and {len(loaded.maps)} maps from {path}")
    return loaded
