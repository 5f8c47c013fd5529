#!/usr/bin/env python3
"""
Write every named space to data/spaces/<name>.json.
Uses the same serializers as `main.py build`.
"""

import sys
import argparse
from pathlib import Path

# Project root (parent of scripts/spaces/)
PROJECT_ROOT = Path(__file__).resolve().parent.parent.parent
sys.path.insert(0, str(PROJECT_ROOT))

from core.complex.delta_complex import DeltaComplex, require_valid  # noqa: E402
from core.complex.serialization import complex_to_json  # noqa: E402
from core.groups.presentation import presentation_to_json  # noqa: E402
from core.spaces.builders import SpaceName, build_space  # noqa: E402
from core.utils.helpers import write_json  # noqa: E402


def spaces_dir() -> Path:
    return PROJECT_ROOT / "data" / "spaces"


def write_space(name: SpaceName, out_dir: Path) -> Path:
    space = build_space(name)
    if isinstance(space, DeltaComplex):
        require_valid(space, "build")
        doc = complex_to_json(space)
    else:
        doc = presentation_to_json(space)
    return write_json(out_dir / f"{name.value}.json", doc)


def cmd_list(_args):
    print("Spaces:")
    for name in SpaceName:
        print(f"  {name.value}")


def cmd_build(args):
    out_dir = Path(args.out_dir) if args.out_dir else spaces_dir()
    if args.name:
        try:
            names = [SpaceName(args.name)]
        except ValueError:
            print(f"[ERROR] Unknown space: {args.name}", file=sys.stderr)
            sys.exit(2)
    else:
        names = list(SpaceName)

    for name in names:
        path = write_space(name, out_dir)
        print(f"[BUILD] {name.value} -> {path}")
    print(f"Done. Wrote {len(names)} space(s).")


def main():
    parser = argparse.ArgumentParser(description="Build the named spaces as JSON documents")
    sub = parser.add_subparsers(dest="command", required=True)

    sub.add_parser("list", help="List the named spaces")

    build_p = sub.add_parser("build", help="Write one space or all of them")
    build_p.add_argument("name", nargs="?", help="Space to build (default: all)")
    build_p.add_argument("--out-dir", help="Output directory (default: data/spaces)")

    args = parser.parse_args()
    if args.command == "list":
        cmd_list(args)
    elif args.command == "build":
        cmd_build(args)


if __name__ == "__main__":
    main()
