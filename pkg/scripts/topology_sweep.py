"""Run the topology suites over a grid of truncations and report timings.

    python scripts/topology_sweep.py --graph ladder:4 --trunc 3 4 5
"""

import argparse
from dataclasses import replace

from gisemi.graph import builtin
from gisemi.suites import SuiteConfig, topology_suites


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--graph", default="g1")
    ap.add_argument("--trunc", nargs="+", type=int, default=[3, 4, 5])
    ap.add_argument("--max-excluded", type=int, default=SuiteConfig.max_excluded)
    args = ap.parse_args()

    g = builtin(args.graph)
    for t in args.trunc:
        cfg = replace(SuiteConfig(), trunc=t, max_excluded=args.max_excluded)
        for r in topology_suites(g, cfg):
            extra = f"  first failure: {r.failures[0]}" if r.failures else ""
            print(f"trunc={t}  {r.name:<10} {r.status}  {r.seconds:6.2f}s{extra}")


if __name__ == "__main__":
    main()
