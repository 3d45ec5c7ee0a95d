"""
Term Models

Closed, discipline-valid terms in normal form as an applicative structure.
Application normalizes; equality is alpha-equivalence of normal forms.
"""

from typing import Iterable, List, Optional, Union

from core.algebra.structure import ApplicativeStructure
from core.calculus.generators import random_term
from core.calculus.grammar import parse
from core.calculus.rewrite import EqVerdict, Normal, Strategy, normalize
from core.calculus.syntax import (
    Const, Discipline, LApp, RAbs, RApp, Term, Var, alpha_eq, alpha_key, constants_of, is_closed,
    pretty, validate,
)
from core.compile.representatives import UNARY_CONSTRUCTORS, representative
from core.errors import DisciplineError, UnsupportedModeError
from core.logger import get_logger

logger = get_logger(__name__)

LP_OPEN_QUESTION = ("Whether L_P is a BIILP-algebra is open: no L and P candidates are known "
                    "and none is refuted here.")

ONE_SIDED_UNARY = ("dot", "circ")
TWO_SIDED_UNARY = ("dagr", "dagl")

# Sampling uses a smaller fuel so a divergent sample costs little
SAMPLE_FUEL = 10_000


def model_name(d: Discipline) -> str:
    """Conventional name of the term model of a discipline"""
    if d.name == "planar":
        if d.constants:
            return "L'_Pc" if d.eta else "L_Pc"
        return "L_P+eta" if d.eta else "L_P"
    names = {"planar-tensor": "L_tensor", "biplanar": "L_B", "linear": "L_lin", "ordinary": "L_ord"}
    base = names.get(d.name, f"L[{d.describe()}]")
    if d.constants and d.name in names:
        base += "c"
    return base


class TermModel(ApplicativeStructure):
    """
    Term model of a discipline

    Elements are closed valid normal forms. Under the ordinary discipline
    normalization may run out of fuel, so an undefined application only
    means Unknown.
    """

    def __init__(self, d: Discipline, fuel: int = 1_000_000, strategy: Strategy = Strategy(),
                 name: Optional[str] = None, sample_depth: int = 4):
        super().__init__(name or model_name(d))
        self.discipline = d
        self.fuel = fuel
        self.strategy = strategy
        self.sample_depth = sample_depth
        self.two_sided = d.allow_left_ops
        self.undefined_is_exact = d.strongly_normalizing
        self._eta_generics = not (d.constants or d.allow_left_ops or d.allow_tensor or d.eta)
        if d.name == "planar" and not d.constants and not d.eta:
            self.open_questions.append(LP_OPEN_QUESTION)

    def _nf(self, t: Term, fuel: Optional[int] = None) -> Optional[Term]:
        outcome = normalize(t, self.discipline, fuel or self.fuel, self.strategy)
        return outcome.term if isinstance(outcome, Normal) else None

    def rapp(self, a: Term, b: Term) -> Optional[Term]:
        return self._nf(RApp(a, b))

    def lapp(self, a: Term, f: Term) -> Optional[Term]:
        if not self.two_sided:
            raise UnsupportedModeError(f"{self.name} has no left application")
        return self._nf(LApp(a, f))

    def eq(self, a: Term, b: Term) -> EqVerdict:
        return EqVerdict.EQUAL if alpha_eq(a, b) else EqVerdict.NOT_EQUAL

    # ------------------------------------------------------------------
    # Elements
    # ------------------------------------------------------------------

    def element(self, source: Union[str, Term]) -> Term:
        """
        Turn text or a term into an element

        Args:
            source: Concrete syntax or a Term

        Returns:
            Normal form of the term

        Raises:
            DisciplineError: the term is open or not valid in the discipline
            UnsupportedModeError: normalization ran out of fuel
        """
        t = parse(source, self.discipline) if isinstance(source, str) else source
        if not is_closed(t):
            raise DisciplineError(f"{pretty(t)} is not closed")
        unknown = constants_of(t) - self.discipline.constants
        if unknown:
            raise DisciplineError(f"{pretty(t)} uses undeclared constants: {', '.join(sorted(unknown))}")
        report = validate(t, self.discipline)
        if not report.ok:
            details = "; ".join(str(v) for v in report.violations)
            raise DisciplineError(f"{pretty(t)} is not valid in {self.discipline.describe()}: {details}")
        nf = self._nf(t)
        if nf is None:
            raise UnsupportedModeError(f"No normal form for {pretty(t)} within fuel {self.fuel}")
        return nf

    def install_candidate(self, symbol: str, source: Union[str, Term]) -> Term:
        """Validate a candidate combinator and install it"""
        elem = self.element(source)
        self.install(symbol, elem)
        logger.debug(f"{self.name}: {symbol} := {pretty(elem)}")
        return elem

    def install_representatives(self, symbols: Iterable[str]) -> List[str]:
        """
        Install the standard representative of each symbol that is valid here

        Returns:
            Symbols whose representative was rejected by the discipline
        """
        rejected = []
        for symbol in symbols:
            try:
                self.install_candidate(symbol, representative(symbol))
            except DisciplineError as e:
                logger.debug(f"{self.name}: representative of {symbol} rejected: {e}")
                rejected.append(symbol)
        return rejected

    def install_default_unary(self):
        """Install the unary operations that make sense in this discipline"""
        ops = TWO_SIDED_UNARY if self.two_sided else ONE_SIDED_UNARY
        for op in ops:
            if not self.has_unary(op):
                build = UNARY_CONSTRUCTORS[op]
                self.install_unary(op, lambda a, build=build: self._nf(build(a)))

    def fresh_constants(self, n: int) -> List[Term]:
        """
        Generic elements for a fresh-constant check

        In a constant-free planar model without eta every closed element is
        an abstraction, so the generic element is the eta-expanded
        ``\\u. #g u``. Elsewhere plain fresh constants are used.
        """
        taken = self.discipline.constants
        names = []
        i = 0
        while len(names) < n:
            name = f"g{i}"
            if name not in taken:
                names.append(name)
            i += 1
        if self._eta_generics:
            return [RAbs("u", RApp(Const(name), Var("u"))) for name in names]
        return [Const(name) for name in names]

    def sample(self, seed: int, size: int) -> List[Term]:
        seen = set()
        out: List[Term] = []
        attempt = 0
        while len(out) < size and attempt < size * 5:
            t = random_term(self.discipline, seed * 100_003 + attempt, self.sample_depth)
            attempt += 1
            nf = self._nf(t, min(self.fuel, SAMPLE_FUEL))
            if nf is None:
                continue
            key = alpha_key(nf)
            if key not in seen:
                seen.add(key)
                out.append(nf)
        logger.debug(f"{self.name}: sampled {len(out)} elements in {attempt} attempts (seed {seed})")
        return out

    def describe(self, a: Optional[Term]) -> str:
        return "undefined" if a is None else pretty(a)


def term_model(d: Discipline, fuel: int = 1_000_000, strategy: Strategy = Strategy(),
               unary: bool = True) -> TermModel:
    """
    Build the term model of a discipline

    Args:
        d: Discipline
        fuel: Step limit for every application
        strategy: Reduction strategy
        unary: Install the default unary operations

    Returns:
        TermModel with no candidates installed
    """
    model = TermModel(d, fuel, strategy)
    if unary:
        model.install_default_unary()
    logger.debug(f"Built term model {model.name} for {d.describe()}")
    return model
