#!/usr/bin/env python3
"""Build (or rebuild) the compiled library and the `random` utility."""

import argparse
import os
import subprocess
import sys

REPO = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))
NATIVE = os.path.join(REPO, "native")


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--clean", action="store_true", help="remove build outputs first")
    parser.add_argument("target", nargs="?", default="all",
                        help="make target (default: all)")
    args = parser.parse_args()
    if args.clean:
        subprocess.run(["make", "-C", NATIVE, "clean"], check=True)
    return subprocess.run(["make", "-C", NATIVE, args.target]).returncode


if __name__ == "__main__":
    sys.exit(main())
