#!/usr/bin/env python3
"""Regenerate the bundled sector-catalog fixtures.

Every catalog is rebuilt from the fusion/nimrep primitives (dimensions
from Perron-Frobenius data, never from quoted decimals), passed through
the internal consistency checks, and written to src/fusionlat/data/.
Run after touching catbuild.py.
"""

import os
import sys

sys.path.insert(0, os.path.join(os.path.dirname(__file__), "..", "src"))

from fusionlat import catbuild  # noqa: E402


def main():
    target = os.path.join(os.path.dirname(__file__), "..",
                          "src", "fusionlat", "data")
    paths = catbuild.write_all(os.path.abspath(target))
    for path in paths:
        print("wrote", os.path.relpath(path))
    return 0


if __name__ == "__main__":
    sys.exit(main())
