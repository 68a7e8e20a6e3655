"""Print the fundamental scroll table with every value recomputed by an oracle.

    python scripts/fundamental_table.py [--n-max 10] [--pieri-max 8]

Columns: closed-form degree (Catalan), Pieri degree, closed-form genus,
K-theory genus, minimal directrix degree and its Schubert count.
"""

from __future__ import annotations

import argparse
import time

from incidence_scrolls.incidence import directrix_intersection, fundamental_base, fundamental_invariants
from incidence_scrolls.ktheory import ktheory_genus
from incidence_scrolls.schubert import curve_class_degree


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n-max", type=int, default=10)
    ap.add_argument("--pieri-max", type=int, default=8, help="largest n recomputed by the oracles")
    args = ap.parse_args()

    print(f"{'n':>3} {'d':>7} {'Pieri':>7} {'g':>7} {'K-th':>7} {'dir':>6} {'count':>6}")
    for n in range(3, args.n_max + 1):
        t0 = time.perf_counter()
        inv = fundamental_invariants(n)
        if n <= args.pieri_max:
            base = fundamental_base(n)
            cols = (curve_class_degree(base), ktheory_genus(base), directrix_intersection(n))
        else:
            cols = ("-", "-", "-")
        ms = (time.perf_counter() - t0) * 1000
        print(
            f"{n:>3} {inv.degree:>7} {cols[0]:>7} {inv.genus:>7} {cols[1]:>7}"
            f" {inv.min_directrix_degree:>6} {cols[2]:>6}  {ms:.1f} ms"
        )


if __name__ == "__main__":
    main()
