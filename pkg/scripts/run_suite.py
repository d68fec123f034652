"""Run the replication suite and write every record to a JSON file.

    python3 scripts/run_suite.py [--selector all] [--jobs 4] [--out certificates.json]
"""

import argparse
import logging
import time

from sturmcert import cert


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--selector", default="all", choices=cert.SELECTORS)
    ap.add_argument("--jobs", type=int, default=1)
    ap.add_argument("--out", default="certificates.json")
    args = ap.parse_args()
    logging.basicConfig(level=logging.INFO, format="%(message)s")

    t0 = time.perf_counter()
    records = cert.run_suite(args.selector, cert.SuiteConfig(jobs=args.jobs))
    for r in records:
        print(r.summary())
    cert.emit_certificates(records, args.out)
    bad = cert.unexpected_failures(records)
    print(f"{len(records)} records in {time.perf_counter() - t0:.1f}s -> {args.out}")
    if bad:
        print("unexpected failures:", ", ".join(bad))
        raise SystemExit(3)


if __name__ == "__main__":
    main()
