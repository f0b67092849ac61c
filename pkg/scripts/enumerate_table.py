"""Table of FKM multiplicity pairs with their admissibility cases and Stolz verdicts."""

import argparse
import collections

from isopar import enumerate_fkm, stolz, theorem_a


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-dim", type=int, default=64, help="largest ambient sphere dimension n + 1")
    args = ap.parse_args()

    sources = collections.defaultdict(list)
    for e in enumerate_fkm(args.max_dim):
        sources[e.triple].append(f"FKM({e.m},{e.k})")

    print(f"{'n':>4} {'m+':>4} {'m-':>4}  {'cases':<20} {'stolz(HS)':<22} sources")
    for triple in sorted(sources, key=lambda t: (t.n, t.m_plus, t.m_minus)):
        verdict = theorem_a(triple)
        cases = ",".join(sorted(c.value for c in verdict.cases)) or "-"
        hi, lo = max(triple.m_plus, triple.m_minus), min(triple.m_plus, triple.m_minus)
        hs = "-"
        if 2 <= lo < hi:
            sv = stolz(hi, lo, "HomotopySphere")
            hs = f"{sv.admissible} ({sv.reason.value})"
        print(f"{triple.n:>4} {triple.m_plus:>4} {triple.m_minus:>4}  {cases:<20} {hs:<22} {' '.join(sources[triple])}")


if __name__ == "__main__":
    main()
