#!/usr/bin/env python3
"""Run the full verification battery and write report.json.

Thin wrapper over the CLI; any extra arguments are passed through, e.g.

    python scripts/run_checks.py --prime 10007 --seed 1 --trials 1
"""

import sys

from exactgeom.cli import main

if __name__ == "__main__":
    argv = ["all", "--out", "report.json", *sys.argv[1:]]
    sys.exit(main(argv))
