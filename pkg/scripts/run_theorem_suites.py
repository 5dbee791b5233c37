"""Run all verification suites and write their JSON reports.

    python scripts/run_theorem_suites.py --out reports/ --r-max 40 --gamma-bound 6
"""
import argparse
import json
import time
from pathlib import Path

from toricpairs.classify import verify_theorem_1, verify_theorem_2, verify_theorem_3, verify_volumes


def main():
    p = argparse.ArgumentParser()
    p.add_argument("--out", type=Path, default=Path("reports"))
    p.add_argument("--r-max", type=int, default=20)
    p.add_argument("--rays", default="5,6,7")
    p.add_argument("--gamma-bound", type=int, default=6)
    p.add_argument("--samples", type=int, default=1000)
    args = p.parse_args()
    args.out.mkdir(parents=True, exist_ok=True)

    suites = {
        "t2": lambda: verify_theorem_2(),
        "t3": lambda: verify_theorem_3(args.r_max),
        "t1": lambda: verify_theorem_1([int(n) for n in args.rays.split(",")], args.gamma_bound),
        "volumes": lambda: verify_volumes(args.samples),
    }
    status = 0
    for name, run in suites.items():
        t0 = time.perf_counter()
        report = run()
        elapsed = time.perf_counter() - t0
        doc = report.to_document()
        doc["seconds"] = round(elapsed, 3)
        (args.out / f"{name}.json").write_text(json.dumps(doc, indent=2) + "\n")
        print("\n".join(report.summary_lines()) + f"\n  time: {elapsed:.3f} s")
        status |= not report.passed
    raise SystemExit(status)


if __name__ == "__main__":
    main()
