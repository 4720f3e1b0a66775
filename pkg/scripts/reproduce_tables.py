#!/usr/bin/env python3
"""Recompute the min-n tables for B*[g] sets and stream them as CSV.

Examples:
    python scripts/reproduce_tables.py --which R --max-k 10 --g-max 7
    python scripts/reproduce_tables.py --which C --max-k 9 --g-max 6 --out c_table.csv
"""
import argparse
import sys
import time

sys.path.insert(0, "src")

from bstar.search import SearchProblem, min_n  # noqa: E402


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--which", choices=["C", "R"], required=True,
                    help="C: modular min-n table, R: integer min-n table")
    ap.add_argument("--max-k", type=int, default=9)
    ap.add_argument("--g-min", type=int, default=2)
    ap.add_argument("--g-max", type=int, default=6)
    ap.add_argument("--out", default=None, help="also append rows to this file")
    args = ap.parse_args()

    kind = "modular" if args.which == "C" else "integer"
    sink = open(args.out, "w") if args.out else None
    header = "kind,g,k,min_n,exhaustive,witness,nodes,seconds"
    print(header)
    if sink:
        sink.write(header + "\n")
    for g in range(args.g_min, args.g_max + 1):
        start_n = 1
        k0 = 3 if g == 2 else g + 1
        for k in range(k0, args.max_k + 1):
            t0 = time.time()
            problem = SearchProblem(kind, g, k, start_n, 8 * k * k // g + 16)
            res = min_n(problem)
            if res.min_n is None:
                break
            row = ",".join([
                kind, str(g), str(k), str(res.min_n), str(res.exhaustive),
                " ".join(map(str, res.witness.elements)),
                str(res.nodes_explored), f"{time.time() - t0:.2f}",
            ])
            print(row, flush=True)
            if sink:
                sink.write(row + "\n")
                sink.flush()
            start_n = res.min_n
    if sink:
        sink.close()
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
