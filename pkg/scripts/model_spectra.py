#!/usr/bin/env python3
"""Spectrum tables for the three models over a p sweep.

Prints the Moszkowski and Jaynes-Cummings spectra with their closed forms,
and the four sphaleron sector spectra (mode eigenvalues lam = -eig(Delta)).
"""

import sys
from fractions import Fraction

from q2rep.cli import spectrum_payload
from q2rep.models import Model, ModelSpec

P_MAX = int(sys.argv[1]) if len(sys.argv) > 1 else 4


def show(payload: dict) -> None:
    print(f"\n{payload['model']}  p={payload['p']}  params={payload['params']}")
    if "note" in payload:
        print(f"  note: {payload['note']}")
    for e in payload["eigenvalues"]:
        label = e["label"] or "-"
        exact = e["exact"] or "-"
        print(f"  {label:6s} block {e['block']:2d}  {exact:30s} {e['float']: .12g}")


def main() -> int:
    for p in range(1, P_MAX + 1):
        show(spectrum_payload(ModelSpec(Model.MOSZKOWSKI, p, {"c": Fraction(1, 2), "V": Fraction(1)})))
        show(spectrum_payload(ModelSpec(Model.JAYNES_CUMMINGS, p, {"omega": Fraction(1), "g": Fraction(1, 10)})))
        for model in (Model.SPHALERON_43, Model.SPHALERON_44, Model.SPHALERON_50, Model.SPHALERON_51):
            show(spectrum_payload(ModelSpec(model, p, {"k2": Fraction(1, 2)})))
    return 0


if __name__ == "__main__":
    sys.exit(main())
