"""Verify the Cartan-Munzner identities for every FKM polynomial up to a given size."""

import argparse
import time

from isopar import FkmPolynomial, build_clifford_system, enumerate_fkm, verify_cartan_munzner
from isopar.fkm import DegenerateMultiplicity


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-dim", type=int, default=32)
    ap.add_argument("--samples", type=int, default=200)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--exact", action="store_true", help="also run the integer-point check (small systems only)")
    args = ap.parse_args()

    failures = 0
    for e in enumerate_fkm(args.max_dim):
        t0 = time.perf_counter()
        try:
            F = FkmPolynomial(build_clifford_system(e.m, e.k))
        except DegenerateMultiplicity:
            continue
        rep = verify_cartan_munzner(F, sample_count=args.samples, seed=args.seed, exact=args.exact and F.N <= 16)
        failures += not rep.passed
        print(
            f"FKM({e.m},{e.k}) N={F.N:<4} grad {rep.grad_norm_residual:.1e}  lap {rep.laplacian_residual:.1e}  "
            f"range [{rep.range_min:+.4f}, {rep.range_max:+.4f}]  {'ok' if rep.passed else 'FAIL'}  {time.perf_counter() - t0:.2f}s"
        )
    raise SystemExit(1 if failures else 0)


if __name__ == "__main__":
    main()
