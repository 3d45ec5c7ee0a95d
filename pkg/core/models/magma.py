"""
Finite Magmas

Small applicative structures given by a (possibly partial) multiplication
table, used to exercise the axiom checker exhaustively.

YAML layout:

    name: left-projection
    elements: [a, b]
    table:            # row x, column y: x y
      - [a, a]
      - [b, b]
    combinators:
      I: a
"""

import random
from pathlib import Path
from typing import Dict, List, Mapping, Optional, Sequence, Union

import yaml

from core.algebra.structure import ApplicativeStructure
from core.calculus.rewrite import EqVerdict
from core.errors import ConfigurationError
from core.logger import get_logger

logger = get_logger(__name__)

UNDEFINED = (None, "~", "-", "")


class FiniteMagma(ApplicativeStructure):
    """Elements are names; a missing table entry is an undefined application"""

    def __init__(self, name: str, elements: Sequence[str],
                 table: Mapping[str, Mapping[str, Optional[str]]]):
        super().__init__(name)
        self.elements = list(elements)
        self.table = {x: dict(row) for x, row in table.items()}
        self.total = all(self.table.get(x, {}).get(y) is not None
                         for x in self.elements for y in self.elements)

    def rapp(self, a: str, b: str) -> Optional[str]:
        return self.table.get(a, {}).get(b)

    def eq(self, a: str, b: str) -> EqVerdict:
        return EqVerdict.EQUAL if a == b else EqVerdict.NOT_EQUAL

    def carrier(self) -> List[str]:
        return list(self.elements)

    def sample(self, seed: int, size: int) -> List[str]:
        rng = random.Random(seed)
        return [rng.choice(self.elements) for _ in range(size)] if self.elements else []


def finite_magma(rows: Sequence[Sequence[Optional[str]]], elements: Optional[Sequence[str]] = None,
                 name: str = "magma", combinators: Optional[Mapping[str, str]] = None) -> FiniteMagma:
    """
    Build a magma from a square table

    Args:
        rows: rows[i][j] is elements[i] applied to elements[j]; None is undefined
        elements: Element names (defaults to "0", "1", ...)
        name: Structure name
        combinators: Symbol to element name

    Returns:
        FiniteMagma

    Raises:
        ConfigurationError: table not square or entries outside the carrier
    """
    elements = list(elements) if elements is not None else [str(i) for i in range(len(rows))]
    if len(rows) != len(elements) or any(len(row) != len(elements) for row in rows):
        raise ConfigurationError(f"Magma {name}: table must be {len(elements)}x{len(elements)}")

    table: Dict[str, Dict[str, Optional[str]]] = {}
    for x, row in zip(elements, rows):
        table[x] = {}
        for y, entry in zip(elements, row):
            if entry in UNDEFINED:
                table[x][y] = None
                continue
            entry = str(entry)
            if entry not in elements:
                raise ConfigurationError(f"Magma {name}: {x} {y} = {entry} is not an element")
            table[x][y] = entry

    magma = FiniteMagma(name, elements, table)
    for symbol, elem in (combinators or {}).items():
        if str(elem) not in elements:
            raise ConfigurationError(f"Magma {name}: combinator {symbol} = {elem} is not an element")
        magma.install(symbol, str(elem))
    logger.debug(f"Built magma {name} with {len(elements)} elements (total={magma.total})")
    return magma


def load_magma(path: Union[str, Path]) -> FiniteMagma:
    """Load a magma from a YAML file"""
    path = Path(path)
    if not path.exists():
        raise ConfigurationError(f"Magma file not found: {path}")
    try:
        with open(path, "r", encoding="utf-8") as f:
            data = yaml.safe_load(f) or {}
    except yaml.YAMLError as e:
        raise ConfigurationError(f"Error parsing {path}: {e}") from e

    elements = [str(x) for x in data.get("elements", [])]
    rows = [[None if v is None else str(v) for v in row] for row in data.get("table", [])]
    return finite_magma(rows, elements, data.get("name", path.stem), data.get("combinators"))
