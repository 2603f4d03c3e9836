#!/usr/bin/env python3
"""Convert the UCI agaricus-lepiota table to a FIMI transaction file.

Every (column, value) pair becomes one item. Ids are assigned from 1 in
column order, values sorted within a column, so the output is stable.
"""

import argparse
import csv
import sys


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("table", help="agaricus-lepiota.data")
    parser.add_argument("output", help="FIMI file to write")
    args = parser.parse_args()

    with open(args.table, newline="") as f:
        rows = [row for row in csv.reader(f) if row]

    width = len(rows[0])
    if any(len(row) != width for row in rows):
        print("rows have differing column counts", file=sys.stderr)
        return 1

    ids = {}
    for column in range(width):
        for value in sorted({row[column] for row in rows}):
            ids[(column, value)] = len(ids) + 1

    with open(args.output, "w", newline="\n") as out:
        for row in rows:
            out.write(" ".join(str(ids[(c, v)]) for c, v in enumerate(row)) + "\n")

    print(f"{len(rows)} transactions, {len(ids)} items", file=sys.stderr)
    return 0


if __name__ == "__main__":
    sys.exit(main())
