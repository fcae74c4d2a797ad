"""The ladder graph at growing N: a topological filter on Path(E) with no
base of ideals. Prints each check and the largest ideal inside a few base sets."""

import argparse

from gisemi.graph import Path, enumerate_paths, ladder
from gisemi.topology import CofiniteFilter, ladder_example_suite, largest_ideal_inside


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--n", nargs="+", type=int, default=[2, 3, 4, 6])
    ap.add_argument("--max-removed", type=int, default=2)
    args = ap.parse_args()

    for N in args.n:
        rep = ladder_example_suite(N, args.max_removed)
        print(f"ladder:{N}  {rep.status}")
        for c in rep.checks:
            print(f"  {c.name:<36} {c.status}" + (f"  {c.witness}" if c.witness else ""))
        g = ladder(N)
        window = enumerate_paths(g, 1)
        for drop in ([], ["1"], ["2", "3"]):
            outside = frozenset([Path(v) for v in drop] + [p for p in window if not p.is_vertex])
            kept = largest_ideal_inside(CofiniteFilter(outside), g).within(window)
            print(f"  F = E0 minus {drop or '{}'}: largest ideal {sorted(p.start for p in kept)}")


if __name__ == "__main__":
    main()
