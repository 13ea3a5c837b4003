#!/usr/bin/env python3
"""Regenerate data/knot_table.csv from the KnotInfo database.

Selects every prime alternating knot with 3..9 crossings, converts the
KnotInfo PD notation to the compact PD[X[...],...] form and copies the
hyperbolic volume (blank for non-hyperbolic knots).

    pip install database_knotinfo
    python3 tools/scripts/build_knot_table.py > data/knot_table.csv
    build/tools/reduce_table data/knot_table.csv data/knot_table.csv

Some KnotInfo diagrams admit a flype that merges two twist regions; the
second step replaces those with twist-reduced diagrams of the same knot.
"""

import ast
import csv
import sys

from database_knotinfo import link_list
from importlib.metadata import version


def compact_pd(pd_text):
    crossings = ast.literal_eval(pd_text)  # KnotInfo stores a Python-style nested list
    return "PD[" + ",".join("X[" + ",".join(str(a) for a in x) + "]"
                            for x in crossings) + "]"


def main():
    source = "KnotInfo via database_knotinfo " + version("database_knotinfo")
    writer = csv.writer(sys.stdout, lineterminator="\n")
    writer.writerow(["name", "crossings", "pd", "volume", "provenance"])
    for knot in link_list()[1:]:
        try:
            crossings = int(knot["crossing_number"])
        except (KeyError, ValueError):
            continue
        if crossings < 3 or crossings > 9 or knot["alternating"] != "Y":
            continue
        volume = knot["volume"].strip()
        if volume in ("", "0"):
            volume = ""
        writer.writerow([knot["name"], crossings, compact_pd(knot["pd_notation"]),
                         volume, source])


if __name__ == "__main__":
    main()
