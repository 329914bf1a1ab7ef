#!/usr/bin/env python3
"""Regenerate the standard comparison figures (genus 10, 12, 13).

Each figure overlays the assembled existence region and the parallelogram
region on the pentagon frame with the expected-dimension curve; output is
byte-deterministic SVG.
"""
import argparse
import pathlib
import sys

from bnlocus.plotting import PlotSpec, write_plot
from bnlocus.regions import parse_region_id


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--out-dir", default="figures")
    parser.add_argument("--genera", default="10,12,13")
    parser.add_argument("--regions", default="bmno,teixidor")
    args = parser.parse_args()

    out_dir = pathlib.Path(args.out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    regions = tuple(parse_region_id(tok) for tok in args.regions.split(",") if tok.strip())
    for g in (int(x) for x in args.genera.split(",")):
        path = out_dir / f"regions_genus{g}.svg"
        write_plot(PlotSpec(genus=g, regions=regions, out_path=str(path)))
        print(f"wrote {path}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
