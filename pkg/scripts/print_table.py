"""Print the supercommutator table of all root vectors, e.g. as LaTeX.

    python scripts/print_table.py 2 3 --format latex > table.tex
"""

import argparse
import sys

from uqglmn.cli import run

p = argparse.ArgumentParser()
p.add_argument("M", type=int)
p.add_argument("N", type=int)
p.add_argument("--format", choices=("text", "json", "latex"), default="text")
a = p.parse_args()
sys.exit(run(["--M", str(a.M), "--N", str(a.N), "--format", a.format, "table"]))
