"""Run every acceptance criterion, print one line each and write the JSON reports.

    python3 scripts/run_acceptance.py [--only LABEL ...] [--out DIR]
"""

import argparse
import json
import time
from pathlib import Path

from cy2stab.acceptance import CRITERIA


def main() -> None:
    p = argparse.ArgumentParser()
    p.add_argument("--only", nargs="*", default=None)
    p.add_argument("--out", default="results")
    args = p.parse_args()
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    summary = {}
    for c in CRITERIA:
        if args.only and c.label not in args.only:
            continue
        t = time.time()
        r = c.run()
        (out / f"{c.label}.json").write_text(r.to_json())
        summary[c.label] = {"passed": r.passed, "seconds": round(time.time() - t, 1)}
        print(f"{c.label}: {r.line()}", flush=True)
    (out / "summary.json").write_text(json.dumps(summary, indent=1))


if __name__ == "__main__":
    main()
