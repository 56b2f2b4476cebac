#!/usr/bin/env python3
"""Derive the benchmark CSVs from raw source files.

Usage:
  prepare_datasets.py abalone9-18        abalone.data          data/abalone9-18.csv
  prepare_datasets.py yeast4             yeast.data            data/yeast4.csv
  prepare_datasets.py winequality-red-4  winequality-red.csv   data/winequality-red-4.csv

Raw sources are the UCI files (abalone.data, yeast.data, winequality-red.csv).
Minority rows get the label "positive", the rest "negative".
"""

import csv
import sys

ABALONE_HEADER = [
    "sex", "length", "diameter", "height", "whole_weight",
    "shucked_weight", "viscera_weight", "shell_weight",
]
SEX_CODE = {"M": "0", "F": "1", "I": "2"}
YEAST_HEADER = ["mcg", "gvh", "alm", "mit", "erl", "pox", "vac", "nuc"]


def abalone9_18(src):
    rows = []
    with open(src, newline="") as fh:
        for rec in csv.reader(fh):
            if not rec:
                continue
            rings = int(rec[-1])
            if rings not in (9, 18):
                continue
            label = "positive" if rings == 18 else "negative"
            rows.append([SEX_CODE[rec[0]]] + rec[1:-1] + [label])
    return ABALONE_HEADER + ["label"], rows


def yeast4(src):
    rows = []
    with open(src) as fh:
        for line in fh:
            rec = line.split()
            if not rec:
                continue
            label = "positive" if rec[-1] == "ME2" else "negative"
            rows.append(rec[1:-1] + [label])
    return YEAST_HEADER + ["label"], rows


def winequality_red_4(src):
    rows = []
    with open(src, newline="") as fh:
        reader = csv.reader(fh)
        header = [h.replace(" ", "_") for h in next(reader)][:-1]
        for rec in reader:
            if not rec:
                continue
            label = "positive" if int(rec[-1]) == 4 else "negative"
            rows.append(rec[:-1] + [label])
    return header + ["label"], rows


RECIPES = {
    "abalone9-18": abalone9_18,
    "yeast4": yeast4,
    "winequality-red-4": winequality_red_4,
}


def main(argv):
    if len(argv) != 4 or argv[1] not in RECIPES:
        print(__doc__, file=sys.stderr)
        return 1
    header, rows = RECIPES[argv[1]](argv[2])
    pos = sum(1 for r in rows if r[-1] == "positive")
    with open(argv[3], "w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(header)
        w.writerows(rows)
    print(f"{argv[3]}: {len(rows)} rows, {pos} positive / {len(rows) - pos} negative")
    return 0


if __name__ == "__main__":
    sys.exit(main(sys.argv))
