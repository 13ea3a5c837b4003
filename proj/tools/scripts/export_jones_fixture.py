#!/usr/bin/env python3
"""Write tests/data/knotinfo_jones.csv: published Jones polynomials V(t) of the
knots in data/knot_table.csv, as `name,exponent:coefficient;...`."""

import csv
import sys

import sympy
from database_knotinfo import link_list


def main():
    names = {row["name"] for row in csv.DictReader(open("data/knot_table.csv"))}
    t = sympy.Symbol("t")
    out = csv.writer(sys.stdout, lineterminator="\n")
    out.writerow(["name", "jones_t"])
    for knot in link_list()[1:]:
        if knot["name"] not in names:
            continue
        expr = sympy.sympify(knot["jones_polynomial"].replace("^", "**"), locals={"t": t})
        terms = sympy.Poly(sympy.expand(expr * t**40), t).terms()
        pairs = sorted((m[0] - 40, int(c)) for m, c in terms)
        out.writerow([knot["name"], ";".join(f"{e}:{c}" for e, c in pairs)])


if __name__ == "__main__":
    main()
