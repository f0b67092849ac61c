"""Scalar curvature of FKM level hypersurfaces across levels.

Prints the Gauss-equation value n(n-1) + H^2 - |A|^2 next to n^2 - 4n for a
grid of levels.  For multiplicities (1, 1) the two agree at every level; for
other multiplicities the value moves with the level.
"""

import argparse
import json

import numpy as np

from isopar import FkmPolynomial, build_clifford_system, curvature_report


def parse_pair(text):
    m, k = (int(t) for t in text.split(","))
    return m, k


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--systems", nargs="+", type=parse_pair, default=[(1, 3), (2, 2), (3, 2), (4, 2)], help="m,k pairs")
    ap.add_argument("--levels", type=int, default=9, help="number of levels in (-1, 1)")
    ap.add_argument("--samples", type=int, default=10)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--json", action="store_true", help="emit JSON lines instead of a table")
    args = ap.parse_args()

    levels = np.linspace(-0.9, 0.9, args.levels)
    for m, k in args.systems:
        F = FkmPolynomial(build_clifford_system(m, k))
        if not args.json:
            print(f"FKM({m},{k})  n={F.n}  multiplicities={F.mult_pair}  n^2-4n={F.n**2 - 4 * F.n}")
        for c in levels:
            r = curvature_report(F, float(c), args.samples, args.seed)
            if args.json:
                print(json.dumps({"m": m, "k": k, **r.to_dict()}))
            else:
                print(f"  c={c:+.3f}  scal={r.scal:14.6f}  delta={r.scal_delta:+14.6f}  spread={r.spread:.1e}")


if __name__ == "__main__":
    main()
