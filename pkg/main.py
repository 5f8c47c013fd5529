"""
Main entry point.

    python main.py build sub3-circle --out data/spaces/sub3-circle.json
    python main.py invariants data/spaces/sub3-circle.json
    python main.py pi1 data/spaces/trefoil-complement.json --simplify
    python main.py knot --variant clifford --samples 8
    python main.py report --json
"""

import sys

from dotenv import load_dotenv

load_dotenv()

from cli.commands import main  # noqa: E402

if __name__ == "__main__":
    sys.exit(main())
