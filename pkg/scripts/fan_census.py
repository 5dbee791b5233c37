"""Count smooth complete fans by number of rays and gamma bound.

Also reports how many are del Pezzo (-K ample) and how many admit some
nonempty boundary D with -(K + D) ample.

    python scripts/fan_census.py --max-rays 9 --gamma-bound 6
"""
import argparse

from toricpairs.classify import classify_pairs
from toricpairs.fan import enumerate_fans, from_gamma_sequence


def main():
    p = argparse.ArgumentParser()
    p.add_argument("--max-rays", type=int, default=8)
    p.add_argument("--gamma-bound", type=int, default=6)
    args = p.parse_args()

    print(f"{'n':>3} {'fans':>6} {'del Pezzo':>10} {'log dP (D != 0)':>16}")
    for n in range(3, args.max_rays + 1):
        keys = enumerate_fans(n, args.gamma_bound)
        dp = log_dp = 0
        for k in keys:
            records = classify_pairs(from_gamma_sequence(k))
            dp += records[0].ample
            log_dp += any(r.ample for r in records[1:])
        print(f"{n:>3} {len(keys):>6} {dp:>10} {log_dp:>16}")
    print(f"(gamma bound {args.gamma_bound})")


if __name__ == "__main__":
    main()
