"""Survey every shipped sector catalog: rebuild each recorded
intermediate lattice, verify the enumeration bijection, and tabulate the
counting data (minimal/maximal nodes, second-commutant dimension,
distinct sectors, automorphisms, wall and counting checks).

Usage:
    python3 scripts/lattice_survey.py [--dot OUTDIR]
"""

import argparse
import os
import sys

sys.path.insert(0, os.path.join(os.path.dirname(__file__), "..", "src"))

from fusionlat import ghj
from fusionlat.poset import dot_poset

CASES = (("A", 4), ("A", 6), ("A", 8),
         ("D", 4), ("D", 6), ("D", 8), ("D", 10), ("D", 16),
         ("E6", None), ("E7", None), ("E8", None))


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--dot", metavar="OUTDIR",
                        help="also write one Hasse-diagram DOT file per "
                             "recorded lattice")
    args = parser.parse_args(argv)
    if args.dot:
        os.makedirs(args.dot, exist_ok=True)

    header = ("case", "target", "nodes", "covers", "min", "max",
              "dim", "distinct", "auto", "wall", "violated")
    print(("%-6s %-14s" + " %7s" * 9) % header)
    violations = []
    for case, k in CASES:
        cat = ghj.load_catalog(case, k)
        tag = "%s_%s" % (cat.case, cat.k)
        for row in ghj.survey(cat):
            wall = row["wall"]
            gag = row["gag"]
            print(("%-6s %-14s" + " %7s" * 9)
                  % (tag, row["target"], row["nodes"], row["covers"],
                     row["minimal"], row["maximal"], wall["dim"],
                     gag["distinct"], gag["automorphisms"],
                     "ok" if wall["ok"] else "FAIL",
                     "yes" if gag["violated"] else "-"))
            if gag["violated"]:
                violations.append((tag, row["target"]))
            if args.dot:
                result = ghj.build_lattice(cat, row["target"])
                labels = {node: "[%s, %s]" % tuple(node)
                          for node in result.nodes}
                name = "%s_%s.dot" % (tag, row["target"].replace("/", "-")
                                      .replace(" ", "_").replace("'", "p"))
                path = os.path.join(args.dot, name)
                with open(path, "w") as handle:
                    handle.write(dot_poset(result.poset, title=name,
                                           labels=labels))

    print()
    print("counting violations:", violations or "none")
    return 0


if __name__ == "__main__":
    sys.exit(main())
