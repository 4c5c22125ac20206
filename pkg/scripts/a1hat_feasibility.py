"""Size of the exhaustive A1hat comparison and how far the oracle gets into it.

Prints the number of admissible bodies per length, then runs the comparison at
increasing depth with the generator budget and reports verified/unverified
counts and timings.
"""

import argparse
import time

from cy2stab.suites import _a1hat_subtree_size, check_automaton_vs_oracle_a1hat


def main() -> None:
    p = argparse.ArgumentParser()
    p.add_argument("--max-index", type=int, default=4)
    p.add_argument("--depth", type=int, default=5)
    p.add_argument("--run-to", type=int, default=3, help="largest depth to actually run")
    p.add_argument("--budget", type=int, default=4000)
    args = p.parse_args()
    idx = range(-args.max_index, args.max_index + 1)
    for d in range(1, args.depth + 1):
        n = 1 + sum(1 + _a1hat_subtree_size(a, d - 1, idx) for a in idx)
        print(f"bodies of length <= {d}: {n} per start")
    for d in range(1, args.run_to + 1):
        t = time.time()
        r = check_automaton_vs_oracle_a1hat(depth=d, max_index=args.max_index, n_random=0, budget=args.budget)
        print(f"depth {d}: {r.line()}  ({time.time() - t:.1f}s)", flush=True)


if __name__ == "__main__":
    main()
