"""
Applicative Structures

The interface every model implements: (partial) right application, left
application for two-sided structures, distinguished elements, unary
operations, equality verdicts and sampling. Views layer derived
combinators over a structure without touching it.
"""

from abc import ABC, abstractmethod
from typing import Any, Callable, Dict, List, Optional

from core.calculus.rewrite import EqVerdict
from core.errors import DuplicateOperationError, UnsupportedModeError

Elem = Any
UnaryFn = Callable[[Elem], Optional[Elem]]


class ApplicativeStructure(ABC):
    """
    A carrier with application, distinguished elements and unary operations

    Subclasses implement ``rapp`` and ``eq``. Two-sided structures also
    implement ``lapp``; term models provide ``fresh_constants`` and finite
    structures ``carrier``.
    """

    total: bool = True
    two_sided: bool = False
    # an undefined application is a definite fact (False: it may only mean fuel ran out)
    undefined_is_exact: bool = True

    def __init__(self, name: str):
        self.name = name
        self._distinguished: Dict[str, Elem] = {}
        self._unary: Dict[str, UnaryFn] = {}
        self.open_questions: List[str] = []

    @abstractmethod
    def rapp(self, a: Elem, b: Elem) -> Optional[Elem]:
        """Right application ``a b``; None when undefined"""

    def lapp(self, a: Elem, f: Elem) -> Optional[Elem]:
        """Left application ``a <@ f``"""
        raise UnsupportedModeError(f"{self.name} has no left application")

    @abstractmethod
    def eq(self, a: Elem, b: Elem) -> EqVerdict:
        """Equality of two defined elements"""

    def includes(self, a: Elem, b: Elem) -> EqVerdict:
        """Whether a is below b; equality unless elements are sets"""
        return self.eq(a, b)

    def kleene_eq(self, a: Optional[Elem], b: Optional[Elem]) -> EqVerdict:
        """Equality of possibly undefined results"""
        if a is None or b is None:
            if not self.undefined_is_exact:
                return EqVerdict.UNKNOWN
            return EqVerdict.EQUAL if a is None and b is None else EqVerdict.NOT_EQUAL
        return self.eq(a, b)

    # ------------------------------------------------------------------
    # Distinguished elements and unary operations
    # ------------------------------------------------------------------

    def distinguished(self, symbol: str) -> Optional[Elem]:
        return self._distinguished.get(symbol)

    def install(self, symbol: str, elem: Elem):
        self._distinguished[symbol] = elem

    def installed_symbols(self) -> List[str]:
        return sorted(self._distinguished)

    def install_unary(self, op: str, constructor: UnaryFn):
        """
        Register a unary operation

        Raises:
            DuplicateOperationError: op already installed
        """
        if op in self._unary:
            raise DuplicateOperationError(f"Unary operation '{op}' already installed in {self.name}")
        self._unary[op] = constructor

    def has_unary(self, op: str) -> bool:
        return op in self._unary

    def unary(self, op: str, a: Elem) -> Optional[Elem]:
        return self._unary[op](a)

    def installed_unary(self) -> List[str]:
        return sorted(self._unary)

    # ------------------------------------------------------------------
    # Elements
    # ------------------------------------------------------------------

    def sample(self, seed: int, size: int) -> List[Elem]:
        raise UnsupportedModeError(f"{self.name} cannot sample elements")

    def fresh_constants(self, n: int) -> Optional[List[Elem]]:
        """Generic elements for a universally valid check (term models only)"""
        return None

    def carrier(self) -> Optional[List[Elem]]:
        """All elements, for finite structures"""
        return None

    def describe(self, a: Optional[Elem]) -> str:
        return "undefined" if a is None else str(a)

    def __repr__(self):
        return f"{type(self).__name__}({self.name!r})"


class DerivedView(ApplicativeStructure):
    """
    A structure seen through extra distinguished elements and operations

    Lookups fall back to the base structure. With ``flip_left`` the view is
    two-sided, left application being right application with the arguments
    swapped.
    """

    def __init__(self, base: ApplicativeStructure, flip_left: bool = False, name: Optional[str] = None):
        super().__init__(name or base.name)
        self.base = base
        self.flip_left = flip_left
        self.total = base.total
        self.two_sided = base.two_sided or flip_left
        self.undefined_is_exact = base.undefined_is_exact
        self.open_questions = list(base.open_questions)

    def rapp(self, a, b):
        return self.base.rapp(a, b)

    def lapp(self, a, f):
        if self.flip_left:
            return self.base.rapp(f, a)
        return self.base.lapp(a, f)

    def eq(self, a, b):
        return self.base.eq(a, b)

    def includes(self, a, b):
        return self.base.includes(a, b)

    def distinguished(self, symbol):
        own = self._distinguished.get(symbol)
        return own if own is not None else self.base.distinguished(symbol)

    def installed_symbols(self):
        return sorted(set(self._distinguished) | set(self.base.installed_symbols()))

    def install_unary(self, op, constructor):
        if self.base.has_unary(op):
            raise DuplicateOperationError(f"Unary operation '{op}' already installed in {self.name}")
        super().install_unary(op, constructor)

    def has_unary(self, op):
        return op in self._unary or self.base.has_unary(op)

    def unary(self, op, a):
        if op in self._unary:
            return self._unary[op](a)
        return self.base.unary(op, a)

    def installed_unary(self):
        return sorted(set(self._unary) | set(self.base.installed_unary()))

    def sample(self, seed, size):
        return self.base.sample(seed, size)

    def fresh_constants(self, n):
        return self.base.fresh_constants(n)

    def carrier(self):
        return self.base.carrier()

    def describe(self, a):
        return self.base.describe(a)


def bi_view(base: ApplicativeStructure) -> DerivedView:
    """
    Read a one-sided structure two-sidedly

    Left application flips right application and both daggers are the
    identity.
    """
    view = DerivedView(base, flip_left=True)
    view.install_unary("dagr", lambda a: a)
    view.install_unary("dagl", lambda a: a)
    return view
