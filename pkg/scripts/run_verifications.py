#!/usr/bin/env python3
"""Run every verification suite at desk scale and print the reports.

Writes JSON reports next to this script unless --out-dir is given.
Set BN_LOCUS_THREADS to parallelize across genus values.
"""
import argparse
import json
import pathlib
import sys
import time

from bnlocus import sweep


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--out-dir", default=None)
    args = parser.parse_args()

    suites = [
        ("boundary_gap_f", lambda: sweep.verify_prop_4_11(3, 30, 12)),
        ("boundary_gap_t", lambda: sweep.verify_teixidor_gap(3, 30, 12)),
        ("inclusions", lambda: sweep.verify_inclusions(4, 20, 8)),
        ("sigma", lambda: sweep.verify_sigma(4, 20, 8)),
        ("oracle", lambda: sweep.verify_oracle(6, 5)),
    ]
    reports = []
    all_ok = True
    for name, runner in suites:
        t0 = time.monotonic()
        rep = runner()
        elapsed = time.monotonic() - t0
        print(f"{rep.summary()}  [{elapsed:.1f}s]")
        reports.append(rep)
        all_ok &= rep.passed

    if args.out_dir:
        out_dir = pathlib.Path(args.out_dir)
        out_dir.mkdir(parents=True, exist_ok=True)
        for rep in reports:
            path = out_dir / f"report_{rep.suite}.json"
            path.write_text(json.dumps(rep.to_json_dict(), indent=2) + "\n")
        print(f"wrote {len(reports)} reports to {out_dir}")
    return 0 if all_ok else 2


if __name__ == "__main__":
    sys.exit(main())
