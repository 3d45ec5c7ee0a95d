"""
Acceptance Sweeps

Runs the randomized acceptance checks at full size. The unit tests run
the same checks with reduced counts.

Every sweep is seeded, so a failure is reproduced by its seed.

Usage:
    python scripts/run_acceptance.py
    python scripts/run_acceptance.py --only abstraction tensor
    python scripts/run_acceptance.py --scale 0.1 --seed 7
"""

import argparse
import sys
import time
from pathlib import Path
from typing import Callable, Dict, List, Tuple

# Paths
PROJECT_ROOT = Path(__file__).parent.parent.absolute()
sys.path.insert(0, str(PROJECT_ROOT))

from core.algebra.axioms import AxiomVerdict, CheckMode, check_axiom, load_axioms
from core.assemblies.assembly import MapVerdict
from core.calculus.generators import (
    random_closed_normal_planar, random_evaluation_context, random_term, random_value,
)
from core.calculus.rewrite import EqVerdict, Normal, Strategy, normalize
from core.calculus.syntax import Discipline, RAbs, RApp, Var, alpha_eq, free_vars, substitute
from core.compile.abstraction import abstract
from core.compile.combterm import Basis, Sym, interpret
from core.compile.cps import computational_eq
from core.compile.derived import derive_c_from_t
from core.compile.left_inverse import left_inverse
from core.compile.oracle import abstraction_sound, left_inverse_sound, random_polynomial, tensor_round_trip
from core.logger import setup_logging
from core.models.factory import build_structure
from core.models.te_adjoint import check_te_adjoint, check_te_comonad, te_adjoint_pair
from core.models.tree_model import tree_model
from core.models.trees import make_group
import main as workbench

# (passed, failed, unknown)
Tally = Tuple[int, int, int]


def _tally(verdicts: List[EqVerdict]) -> Tally:
    return (verdicts.count(EqVerdict.EQUAL), verdicts.count(EqVerdict.NOT_EQUAL),
            verdicts.count(EqVerdict.UNKNOWN))


def sweep_abstraction(n: int, seed: int) -> Tally:
    """Each procedure against substitution on random polynomials"""
    verdicts = []
    for basis in Basis:
        for i in range(n):
            m = random_polynomial(basis, seed * 1_000_003 + i, depth=8)
            verdicts.append(abstraction_sound(m, ["x"], abstract(m, "x", basis), basis))
    return _tally(verdicts)


def sweep_tensor(n: int, seed: int) -> Tally:
    d = Discipline.planar_tensor()
    return _tally([tensor_round_trip(random_term(d, seed + i, depth=7)) for i in range(n)])


def sweep_representatives(n: int, seed: int) -> Tally:
    """Standard representatives pass their laws with fresh constants"""
    axioms = load_axioms()
    checks = [
        ({"kind": "term", "discipline": "planar"}, ["B", "I", "dot", "Ix"]),
        ({"kind": "term", "discipline": "planar", "constants": ["c"], "eta": True}, ["Ix"]),
        ({"kind": "term", "discipline": "planar-tensor"}, ["L", "Ix"]),
        ({"kind": "term", "discipline": "biplanar"}, ["Br", "Bl", "Dr", "Dl", "Ir", "Il", "dagr", "dagl"]),
    ]
    verdicts = []
    for spec, names in checks:
        A = build_structure(spec)
        mode = CheckMode.fresh_constants(min(n, 50), seed)
        for name in names:
            report = check_axiom(A, axioms[name], mode)
            verdicts.append({AxiomVerdict.HOLDS: EqVerdict.EQUAL, AxiomVerdict.FAILS_AT: EqVerdict.NOT_EQUAL,
                             AxiomVerdict.UNKNOWN: EqVerdict.UNKNOWN}[report.verdict])
    A = build_structure({"kind": "term", "discipline": "linear",
                         "candidates": {"T": r"\x y. y x", "I": r"\x. x", "B": r"\x y z. x (y z)"}})
    A.install("C", interpret(derive_c_from_t(Sym("T")), A))
    verdicts.append(EqVerdict.EQUAL if check_axiom(A, axioms["C"], CheckMode.fresh_constants()).holds
                    else EqVerdict.NOT_EQUAL)
    return _tally(verdicts)


def sweep_tree_laws(n: int, seed: int) -> Tally:
    """Bounded agreement of the planar laws in T over the integers"""
    axioms = load_axioms()
    T = tree_model(make_group("integers"), "t", 7)
    verdicts = []
    for name in ["B", "I", "Ix", "L", "dot"]:
        report = check_axiom(T, axioms[name], CheckMode.sampled(n, seed))
        verdicts.append(EqVerdict.EQUAL if report.holds else
                        EqVerdict.UNKNOWN if report.verdict is AxiomVerdict.UNKNOWN else EqVerdict.NOT_EQUAL)
    return _tally(verdicts)


def sweep_te_adjoint(n: int, seed: int) -> Tally:
    pair = te_adjoint_pair(make_group("integers"), 6)
    verdicts = []
    for report in (check_te_adjoint(pair, n, seed), check_te_comonad(pair, n, seed)):
        verdicts.append({MapVerdict.PASS: EqVerdict.EQUAL, MapVerdict.FAIL: EqVerdict.NOT_EQUAL,
                         MapVerdict.UNKNOWN: EqVerdict.UNKNOWN}[report.verdict])
    return _tally(verdicts)


def sweep_cps(n: int, seed: int) -> Tally:
    """The three computational axioms, n instances each"""
    d = Discipline.ordinary()
    verdicts = []
    for i in range(n):
        s = seed * 10_007 + i
        body = random_term(d, s, depth=3, context=["x"])
        value = random_value(s + 1, depth=2)
        verdicts.append(computational_eq(RApp(RAbs("x", body), value), substitute(body, "x", value)))

        v = random_value(s + 2, depth=2)
        x = "x" if "x" not in free_vars(v) else "x_eta"
        verdicts.append(computational_eq(RAbs(x, RApp(v, Var(x))), v))

        ctx = random_evaluation_context(s + 3, depth=2)
        m = random_term(d, s + 4, depth=2)
        verdicts.append(computational_eq(RApp(RAbs("y", ctx.plug(Var("y"))), m), ctx.plug(m)))
    return _tally(verdicts)


def sweep_left_inverse(n: int, seed: int) -> Tally:
    verdicts = []
    for i in range(n):
        m = random_closed_normal_planar(seed + i, depth=5)
        verdicts.append(left_inverse_sound(left_inverse(m), m))
    return _tally(verdicts)


def sweep_confluence(n: int, seed: int) -> Tally:
    """Three strategies agree on planar and bi-planar normal forms"""
    verdicts = []
    for d in (Discipline.planar(), Discipline.biplanar()):
        for i in range(n // 2):
            t = random_term(d, seed + i, depth=6)
            outcomes = [normalize(t, d, 10_000, Strategy.named(name, seed + i))
                        for name in ("leftmost-outermost", "rightmost-innermost", "random")]
            if not all(isinstance(o, Normal) for o in outcomes):
                verdicts.append(EqVerdict.UNKNOWN)
                continue
            same = all(alpha_eq(o.term, outcomes[0].term) for o in outcomes)
            verdicts.append(EqVerdict.EQUAL if same else EqVerdict.NOT_EQUAL)
    return _tally(verdicts)


def sweep_cli(command: str) -> Callable[[int, int], Tally]:
    def run(n: int, seed: int) -> Tally:
        code = workbench.main([command, "--seed", str(seed)])
        return (int(code == 0), int(code == 1), int(code >= 2))
    return run


SWEEPS: Dict[str, Tuple[Callable[[int, int], Tally], int]] = {
    "abstraction": (sweep_abstraction, 1000),
    "tensor": (sweep_tensor, 300),
    "representatives": (sweep_representatives, 50),
    "tree-laws": (sweep_tree_laws, 100),
    "te-adjoint": (sweep_te_adjoint, 100),
    "cps": (sweep_cps, 200),
    "left-inverse": (sweep_left_inverse, 100),
    "confluence": (sweep_confluence, 1000),
    "assembly-suite": (sweep_cli("assembly-suite"), 1),
    "separation-suite": (sweep_cli("separation-suite"), 1),
}


def main():
    parser = argparse.ArgumentParser(description="Run the acceptance sweeps")
    parser.add_argument("--only", nargs="+", choices=list(SWEEPS), help="Sweeps to run")
    parser.add_argument("--seed", type=int, default=0, help="Base seed")
    parser.add_argument("--scale", type=float, default=1.0, help="Multiply every count")
    parser.add_argument("--verbose", action="store_true", help="Debug logging")
    args = parser.parse_args()

    setup_logging(log_level="DEBUG" if args.verbose else "WARNING", app_name="acceptance")

    failed_sweeps = []
    for name in args.only or list(SWEEPS):
        sweep, count = SWEEPS[name]
        n = max(1, int(count * args.scale))
        start = time.time()
        passed, failed, unknown = sweep(n, args.seed)
        elapsed = time.time() - start
        total = passed + failed + unknown
        status = "OK" if failed == 0 else "FAILED"
        print(f"[{status}] {name:<17} {passed}/{total} pass, {failed} fail, "
              f"{unknown} unknown ({elapsed:.1f}s)")
        if failed:
            failed_sweeps.append(name)

    if failed_sweeps:
        print(f"\nFailed sweeps: {', '.join(failed_sweeps)}")
        sys.exit(1)
    print("\nAll sweeps passed")


if __name__ == "__main__":
    main()
