#!/usr/bin/env python3
"""Full exact-identity verification sweep with timing.

Runs the identity suites (structure constants, representation homomorphism,
metric, so(4) bridge), the three realization soundness sweeps, and the model
rewrite identities, printing one line per suite.
"""

import sys
import time
from fractions import Fraction

from q2rep import linalg
from q2rep.algebra import GENERATORS
from q2rep.cli import _suite_results
from q2rep.diffop import realization_basis_id, realization_matrix
from q2rep.models import SPHALERON_MODELS, Model, ModelSpec, expression_matrix, raw_matrix
from q2rep.rep import rep_matrix

P_MAX = int(sys.argv[1]) if len(sys.argv) > 1 else 8
P_VALUES = list(range(1, P_MAX + 1))


def timed(label, fn):
    t0 = time.time()
    ok = fn()
    print(f"{label:44s} {'pass' if ok else 'FAIL':4s} {time.time() - t0:6.2f}s")
    return ok


def realizations_ok():
    for p in P_VALUES:
        for which in (1, 2, 3):
            basis = realization_basis_id(which)
            for g in GENERATORS:
                if not linalg.equal(realization_matrix(which, g, p), rep_matrix(g, basis, p)):
                    return False
    return True


def rewrites_ok():
    k2 = Fraction(1, 2)
    for p in P_VALUES[: min(P_MAX, 4)]:
        for model in SPHALERON_MODELS:
            spec = ModelSpec(model, p, {"k2": k2})
            if not linalg.equal(expression_matrix(spec), raw_matrix(spec)):
                return False
    for p in P_VALUES:
        for spec in (
            ModelSpec(Model.MOSZKOWSKI, p, {"c": Fraction(2, 3), "V": Fraction(1, 7)}),
            ModelSpec(Model.JAYNES_CUMMINGS, p, {"omega": Fraction(1), "g": Fraction(1, 5)}),
        ):
            if not linalg.equal(expression_matrix(spec), raw_matrix(spec)):
                return False
    return True


def main() -> int:
    print(f"verification sweep, p = 1..{P_MAX}")
    all_ok = True
    t0 = time.time()
    results = _suite_results(P_VALUES)
    for name, count, fail in results:
        ok = fail is None
        all_ok &= ok
        print(f"{name:44s} {'pass' if ok else 'FAIL':4s} {count:6d} checks")
    all_ok &= timed("realization soundness (1, 2, 3)", realizations_ok)
    all_ok &= timed("model rewrite identities", rewrites_ok)
    print(f"total {time.time() - t0:.2f}s")
    return 0 if all_ok else 1


if __name__ == "__main__":
    sys.exit(main())
