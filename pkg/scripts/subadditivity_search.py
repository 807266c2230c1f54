"""Search random pairs (L1, L2) for vcd(W_{L1*L2}) < vcd(W_L1) + vcd(W_L2).

Runs the search serially and with a process pool and confirms the two
canonical reports are byte-identical before printing a summary.

    python3 scripts/subadditivity_search.py --max-vertices 8 --trials 500 --seed 7 --workers 4
"""

import argparse
import time

from raagcat.config import SearchConfig, add_arguments, from_namespace
from raagcat.verify import search_subadditive


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    add_arguments(parser, SearchConfig)
    parser.add_argument("--out", default=None, help="write the canonical report here")
    args = parser.parse_args()
    cfg = from_namespace(SearchConfig, args)

    start = time.perf_counter()
    serial = search_subadditive(cfg.max_vertices, cfg.trials, cfg.seed, workers=1, budget=cfg.budget)
    t_serial = time.perf_counter() - start
    start = time.perf_counter()
    parallel = search_subadditive(
        cfg.max_vertices, cfg.trials, cfg.seed, workers=max(2, cfg.workers), budget=cfg.budget
    )
    t_parallel = time.perf_counter() - start

    same = serial.canonical() == parallel.canonical()
    print(f"serial {t_serial:.1f}s, parallel {t_parallel:.1f}s, identical reports: {same}")
    print(f"tested {serial.tested}, skipped {len(serial.skipped)}, witnesses {len(serial.witnesses)}")
    print("gap histogram:", serial.to_dict()["sum_gap_histogram"])
    for w in serial.witnesses:
        print(f"trial {w['trial']}: vcd(join) = {w['vcd_join']} < {w['vcd1']} + {w['vcd2']}")
        print("  L1:", w["L1"].replace("\n", " | "))
        print("  L2:", w["L2"].replace("\n", " | "))
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(serial.canonical() + "\n")
    if not same:
        raise SystemExit(1)


if __name__ == "__main__":
    main()
