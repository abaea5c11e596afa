#!/usr/bin/env python3
"""Round-trip demonstration: draw random graphs, build implementing
elections, recompute the multi-crossing graph and report voter counts.

Usage: python3 scripts/round_trip_demo.py [--trials T] [--max-vertices V]
                                          [--seed S]
"""
import argparse
import random
import time

from multicrossing import implement_general, multicrossing_graph
from multicrossing.generate import random_graph


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--trials", type=int, default=50)
    parser.add_argument("--max-vertices", type=int, default=60)
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()

    rng = random.Random(args.seed)
    start = time.monotonic()
    worst_ratio = 0.0
    for trial in range(args.trials):
        v = rng.randint(1, args.max_vertices)
        p = rng.choice([0.1, 0.3, 0.5, 0.7, 0.9])
        g = random_graph(v, p, rng=rng)
        result = implement_general(g)
        assert multicrossing_graph(result.election) == g, "round trip failed"
        bound = 2 * v + 1
        ratio = result.voters_used / bound
        worst_ratio = max(worst_ratio, ratio)
        print(f"trial {trial:3d}: |V|={v:3d} |E|={len(g.edges):4d} "
              f"voters={result.voters_used:3d} (bound {bound})")
    elapsed = time.monotonic() - start
    print(f"\n{args.trials} round trips in {elapsed:.2f}s; "
          f"worst voters/bound ratio {worst_ratio:.2f}")


if __name__ == "__main__":
    main()
