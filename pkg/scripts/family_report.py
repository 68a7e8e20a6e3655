"""Tabulate how often each family closed form agrees with its oracle.

    python scripts/family_report.py --r-max 6 [--e 1,2] [--j-max 2] [--examples 3]

For every family key up to ``--r-max`` the degree, genus and Delta closed
forms are compared with Pieri (degree, Delta) and K-theory (genus).  The
table splits keys into partition and non-partition tuples, since only the
former index actual family members.
"""

from __future__ import annotations

import argparse
import time
from collections import Counter, defaultdict

from incidence_scrolls.families import Family, family_invariants, family_keys


def keys(r_max: int, es: tuple[int, ...], j_max: int):
    for fam in (Family.E0, Family.ENOT0):
        for r in range(1, r_max + 1):
            yield from family_keys(fam, r)
    for r in range(1, r_max + 1):
        for e in es:
            for j in range(1 - e, j_max + 1):
                yield from family_keys(Family.EGE1, r, e, j)


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--r-max", type=int, default=6)
    ap.add_argument("--e", default="1,2", help="EGE1 values of e")
    ap.add_argument("--j-max", type=int, default=2)
    ap.add_argument("--examples", type=int, default=3, help="failing tuples shown per row")
    args = ap.parse_args()
    es = tuple(int(x) for x in args.e.split(","))

    t0 = time.perf_counter()
    totals = Counter()
    misses = Counter()
    examples = defaultdict(list)
    for key in keys(args.r_max, es, args.j_max):
        res = family_invariants(key, strict=False)
        group = (key.family.value, "partition" if key.is_partition else "non-partition")
        totals[group] += 1
        for check, what in zip(res.checks[1:], ("degree", "genus", "Delta")):
            if not check.passed:
                misses[group + (what,)] += 1
                if len(examples[group + (what,)]) < args.examples:
                    examples[group + (what,)].append(f"{key.label()}: {check.lhs} vs {check.rhs}")

    print(f"{'family':<6} {'tuples':<14} {'count':>6} {'degree':>7} {'genus':>7} {'Delta':>7}")
    for group in sorted(totals):
        row = [misses[group + (w,)] for w in ("degree", "genus", "Delta")]
        print(f"{group[0]:<6} {group[1]:<14} {totals[group]:>6} {row[0]:>7} {row[1]:>7} {row[2]:>7}")
    print()
    for k in sorted(examples):
        print(f"{' / '.join(k)}:")
        for line in examples[k]:
            print(f"  {line}")
    print(f"\n{sum(totals.values())} keys in {time.perf_counter() - t0:.1f}s")


if __name__ == "__main__":
    main()
