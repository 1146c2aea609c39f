#!/usr/bin/env python3
"""Produce golden streams for foreign-binding parity checks.

For every generator kind this writes 20 binary streams of 1000 raw outputs
through the `crand generate` code path, plus a manifest mapping each file
to its kind and user seed words. Bindings replay the seeds through the
shared library and must match the files bit for bit.
"""

import argparse
import json
import os
import sys

REPO = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))
sys.path.insert(0, os.path.join(REPO, "src"))

from crand import cli, core  # noqa: E402

SEEDS_PER_KIND = 20
STREAM_LEN = 1000


def seeds_for(kind, index):
    token = 0x601D ^ (core.KIND_ID[kind.name] << 8) ^ index
    while True:
        words = core.seed_expand(token, kind.seed_words)
        try:
            core.new_state(kind, words)
            return words
        except core.DegenerateSeed:
            token += 1


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("outdir", nargs="?",
                        default=os.path.join(REPO, "crandom", "tests", "golden"))
    args = parser.parse_args()
    os.makedirs(args.outdir, exist_ok=True)

    manifest = []
    for kind in core.KINDS:
        for i in range(SEEDS_PER_KIND):
            words = seeds_for(kind, i)
            fname = f"{kind.name}_{i:02d}.bin"
            path = os.path.join(args.outdir, fname)
            status = cli.main([
                "generate", "--gen", kind.name,
                "--seed", *map(str, words),
                "--count", str(STREAM_LEN),
                "--format", "binary", "--out", path,
            ])
            if status != 0:
                print(f"generate failed for {kind.name} seed {words}", file=sys.stderr)
                return status
            manifest.append({"kind": kind.name, "seed": words, "file": fname,
                             "count": STREAM_LEN})

    with open(os.path.join(args.outdir, "manifest.json"), "w") as fh:
        json.dump(manifest, fh, indent=1)
    print(f"wrote {len(manifest)} golden streams to {args.outdir}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
