"""Flip counts and timings of the flip-until-Delaunay loop on random point sets.

    python scripts/random_delaunay.py --sizes 10 50 100 --per-size 5
"""

import argparse
import csv
import random
import statistics
import sys
import time
from dataclasses import asdict, dataclass, fields

from flipdelaunay.builder import initial_triangulation, random_point_set
from flipdelaunay.engine import delaunay, total_lifted_volume
from flipdelaunay.verify import delaunay_oracle


@dataclass
class Config:
    sizes: tuple = (4, 10, 25, 50, 100)
    per_size: int = 5
    seed: int = 0
    recheck: bool = False
    oracle: bool = True
    csv: str = ""


def run_one(n, seed, cfg):
    ps = random_point_set(random.Random(seed), n)
    start = time.perf_counter()
    t = initial_triangulation(ps)
    built = time.perf_counter()
    out, trace = delaunay(t, recheck=cfg.recheck)
    done = time.perf_counter()
    drop = total_lifted_volume(t) - total_lifted_volume(out)
    ok = delaunay_oracle(out).passed if cfg.oracle else None
    return {"n": n, "seed": seed, "flips": trace.flip_count, "cap": 10 * (n + 3) ** 2,
            "build_s": round(built - start, 4), "flip_s": round(done - built, 4),
            "measure_drop": float(drop), "oracle": ok}


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    defaults = Config()
    parser.add_argument("--sizes", type=int, nargs="+", default=list(defaults.sizes))
    parser.add_argument("--per-size", type=int, default=defaults.per_size)
    parser.add_argument("--seed", type=int, default=defaults.seed)
    parser.add_argument("--recheck", action="store_true", help="re-certify after every flip")
    parser.add_argument("--no-oracle", dest="oracle", action="store_false")
    parser.add_argument("--csv", default="", help="also write every row to this file")
    args = parser.parse_args(argv)
    cfg = Config(**{f.name: getattr(args, f.name) for f in fields(Config)})
    cfg.sizes = tuple(cfg.sizes)

    rows = []
    print(f"{'n':>5} {'runs':>4} {'flips mean':>10} {'max':>5} {'cap':>7} {'flip s':>8} oracle")
    for n in cfg.sizes:
        batch = [run_one(n, cfg.seed * 100_000 + 1000 * n + i, cfg) for i in range(cfg.per_size)]
        rows += batch
        flips = [r["flips"] for r in batch]
        oracle = "-" if not cfg.oracle else ("pass" if all(r["oracle"] for r in batch) else "FAIL")
        print(f"{n:>5} {len(batch):>4} {statistics.mean(flips):>10.1f} {max(flips):>5} "
              f"{batch[0]['cap']:>7} {statistics.mean(r['flip_s'] for r in batch):>8.3f} {oracle}")
    if cfg.csv:
        with open(cfg.csv, "w", newline="") as fh:
            writer = csv.DictWriter(fh, fieldnames=list(rows[0]))
            writer.writeheader()
            writer.writerows(rows)
        print(f"wrote {len(rows)} rows to {cfg.csv}", file=sys.stderr)
    print("config", asdict(cfg), file=sys.stderr)
    return 0 if all(r["oracle"] is not False for r in rows) else 1


if __name__ == "__main__":
    sys.exit(main())
