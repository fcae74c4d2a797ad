"""Sweep the embedding check over graphs and bounds and print a table.

    python scripts/embedding_sweep.py --graphs g1 rose:2 rose:3 ladder:4 --bounds 1 2 3
"""

import argparse
import json

from gisemi.embedding import default_spec, verify_embedding
from gisemi.graph import builtin
from gisemi.suites import SuiteConfig


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--graphs", nargs="+", default=["g1", "rose:2", "ladder:4"])
    ap.add_argument("--bounds", nargs="+", type=int, default=[1, 2, SuiteConfig.max_len])
    ap.add_argument("--json", action="store_true")
    args = ap.parse_args()

    rows = []
    for name in args.graphs:
        spec = default_spec(builtin(name))
        for bound in args.bounds:
            rows.append(verify_embedding(spec, bound).to_dict())
    if args.json:
        print(json.dumps(rows, indent=2))
        return
    print(f"{'graph':<10} {'bound':>5} {'elements':>8} {'pairs':>9} {'c1':>7} {'c2':>7} {'c3':>7} {'c4':>8} {'secs':>6}  status")
    for r in rows:
        h = r["case_histogram"]
        print(f"{r['graph']:<10} {r['bound']:>5} {r['elements']:>8} {r['pairs_checked']:>9} "
              f"{h['1']:>7} {h['2']:>7} {h['3']:>7} {h['4']:>8} {r['seconds']:>6.2f}  {r['status']}")


if __name__ == "__main__":
    main()
