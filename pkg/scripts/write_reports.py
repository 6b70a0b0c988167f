"""Write the witness, confirmation and lemma-suite reports as JSON files.

Running this twice (with any --workers) should give byte-identical files.
"""

import argparse
import time
from pathlib import Path

from pathwheel import reports


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--out", type=Path, default=Path("reports"))
    ap.add_argument("--workers", type=int, default=1)
    ap.add_argument("--exhaustive-order", type=int, default=7)
    ap.add_argument("--random-count", type=int, default=1000)
    ap.add_argument("--seed", type=int, default=1)
    args = ap.parse_args()

    args.out.mkdir(parents=True, exist_ok=True)
    jobs = {
        "witness.json": lambda: reports.witness_report(workers=args.workers),
        "confirm.json": lambda: reports.confirm_report(workers=args.workers),
        "lemmas.json": lambda: reports.lemma_report(
            reports.LemmaConfig(args.exhaustive_order, args.random_count, args.seed), args.workers
        ),
    }
    for name, job in jobs.items():
        start = time.perf_counter()
        text = reports.dumps(job())
        (args.out / name).write_text(text + "\n")
        print(f"{name}: {time.perf_counter() - start:.1f}s")


if __name__ == "__main__":
    main()
