"""Compare nu_n of connected sums (tensor products) with the sums of the summands' values.

Prints, for seeded random pairs from the model corpus, the profile of K#L next
to nu_n(K) + nu_n(L), and flags where sub/superadditivity fails.

    python scripts/connected_sums.py --pairs 10 --seed 1
"""

import argparse

from cfknu.complex import tensor
from cfknu.corpus import tensor_pairs
from cfknu.invariants import profile


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--pairs", type=int, default=6)
    ap.add_argument("--seed", type=int, default=20170612)
    ap.add_argument("--n", type=int, default=4, help="report n in [-N, N]")
    args = ap.parse_args()

    ns = range(-args.n, args.n + 1)
    for a, b in tensor_pairs(args.seed, args.pairs):
        pa, pb, pab = (profile(x, -args.n, args.n) for x in (a, b, tensor(a, b)))
        print(f"# {a.name} # {b.name}  (nu+' {pab.nu_plus_prime} vs {pa.nu_plus_prime + pb.nu_plus_prime})")
        for n in ns:
            lhs = pab.entries[n].value
            rhs = pa.entries[n].value + pb.entries[n].value
            # positive n: is nu_n subadditive? negative n: superadditive?
            holds = lhs <= rhs if n > 0 else lhs >= rhs if n < 0 else lhs == rhs
            print(f"{n}\t{lhs}\t{rhs}\t{'ok' if holds else 'FAILS'}")


if __name__ == "__main__":
    main()
