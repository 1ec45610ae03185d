"""Print nu_n tables for the torus-knot families with staircase models.

    python scripts/nu_tables.py --n-min -6 --n-max 3
"""

import argparse

from cfknu.builders import torus
from cfknu.invariants import profile


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n-min", type=int, default=-6)
    ap.add_argument("--n-max", type=int, default=3)
    ap.add_argument("--max-q", type=int, default=13, help="largest odd q for T(2,q)")
    ap.add_argument("--max-p", type=int, default=7, help="largest p for T(p,p+1)")
    args = ap.parse_args()

    knots = [torus(2, q) for q in range(3, args.max_q + 1, 2)]
    knots += [torus(p, p + 1) for p in range(3, args.max_p + 1)]
    ns = list(range(args.n_min, args.n_max + 1))
    print("knot\ttau\tnu+\tnu+'\t" + "\t".join(f"n={n}" for n in ns))
    for k in knots:
        p = profile(k, args.n_min, args.n_max)
        vals = p.values()
        print(f"{k.name}\t{p.tau}\t{p.nu_plus}\t{p.nu_plus_prime}\t" + "\t".join(str(vals[n]) for n in ns))


if __name__ == "__main__":
    main()
