#!/usr/bin/env python3
"""Seeded invariance sweep over both invariants, with a JSON report.

This is the long-form experiment behind the acceptance suite: 500 random
surface diagrams (<= 8 crossings, genus <= 2) for the determinant invariant
and 500 random Gauss codes for the hierarchy invariant, every enumerable
move instance checked, parity/type axioms included.

    python scripts/run_verify.py --out verify_report.json
"""

import argparse
import json
import sys
import time
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from knotparity.moves import verify_invariance


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--trials", type=int, default=500)
    ap.add_argument("--max-crossings", type=int, default=8)
    ap.add_argument("--genus", type=int, default=2)
    ap.add_argument("--seed", type=int, default=20240801)
    ap.add_argument("--out", default=None)
    args = ap.parse_args()

    reports = []
    for kind in ("s", "nprime"):
        t0 = time.time()
        rep = verify_invariance(
            seed=args.seed + (0 if kind == "s" else 1),
            trials=args.trials,
            max_crossings=args.max_crossings,
            genus=args.genus,
            invariant=kind,
        )
        elapsed = time.time() - t0
        print(rep.render())
        print(f"elapsed: {elapsed:.1f}s")
        data = rep.to_json()
        data["elapsed_seconds"] = round(elapsed, 2)
        reports.append(data)
    if args.out:
        Path(args.out).write_text(json.dumps(reports, indent=2))
        print(f"report written to {args.out}")
    return 0 if all(r["ok"] for r in reports) else 2


if __name__ == "__main__":
    raise SystemExit(main())
