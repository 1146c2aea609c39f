"""crand: stream generators to text or raw binary and run quick diagnostics.

Subcommands:
  generate  print or dump a sequence (binary mode is a headerless
            little-endian stream, suitable for piping into external
            randomness batteries)
  acf       autocorrelation coefficients of normalized draws, CSV
  lag       (x_i, x_{i+k}) pairs of normalized draws, CSV
  bench     mean/stddev fill timings of the compiled library

Exit codes: 0 ok, 1 usage error, 2 runtime failure. A run without an
explicit seed draws one from system entropy, expands it and echoes the
seed words on stderr so the stream can be reproduced; the CRAND_SEED
environment variable injects seed words the same way --seed does.
"""

from __future__ import annotations

import argparse
import os
import struct
import sys
from dataclasses import dataclass

from crand import analysis, core

CHUNK = 1 << 16

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_RUNTIME = 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse exits with status 2 on bad flags; this CLI reserves 2 for
    # runtime failures, so route parse errors through UsageError instead
    def error(self, message):
        raise UsageError(message)


@dataclass
class CliRequest:
    subcommand: str
    gen: str = "xorshift128plus"
    seed: list[int] | None = None
    count: int = 0
    out_type: str = "int"
    format: str = "text"
    out_path: str | None = None
    lag: int = 1
    max_lag: int = 50
    reps: int = 7
    gens: list[str] | None = None  # bench only


def _parse_words(text: str) -> list[int]:
    parts = text.replace(",", " ").split()
    if not parts:
        raise UsageError("empty seed")
    try:
        return [int(p, 0) for p in parts]
    except ValueError as exc:
        raise UsageError(f"bad seed word: {exc}") from exc


def _lookup_kind(name: str) -> core.GeneratorKind:
    kind = core.KIND_BY_NAME.get(name)
    if kind is None:
        known = ", ".join(sorted(core.KIND_BY_NAME))
        raise UsageError(f"unknown generator '{name}' (known: {known})")
    return kind


def _resolve_seed(req: CliRequest, kind: core.GeneratorKind):
    """User seed words for this run, echoing auto-chosen ones to stderr."""
    words = req.seed
    if words is None:
        env = os.environ.get("CRAND_SEED")
        if env:
            words = _parse_words(env)
    if words is not None:
        try:
            return core.new_state(kind, words)
        except (core.WrongSeedCount, core.DegenerateSeed) as exc:
            raise UsageError(str(exc)) from exc
    while True:
        entropy = int.from_bytes(os.urandom(8), "little")
        words = core.seed_expand(entropy, kind.seed_words)
        try:
            state = core.new_state(kind, words)
        except core.DegenerateSeed:
            continue
        print("seed:", " ".join(str(w) for w in words), file=sys.stderr)
        return state


def _open_out(req: CliRequest, binary: bool):
    if req.out_path:
        return open(req.out_path, "wb" if binary else "w"), True
    return (sys.stdout.buffer if binary else sys.stdout), False


def _unit_draws(state, n):
    values, _ = core.fill(state, n)
    bits = state.kind.output_bits
    return [core.normalize(v, bits) for v in values]


def run_generate(req: CliRequest) -> int:
    kind = _lookup_kind(req.gen)
    if req.count < 0:
        raise UsageError("count must be >= 0")
    state = _resolve_seed(req, kind)
    binary = req.format == "binary"
    out, owned = _open_out(req, binary)
    bits = kind.output_bits
    try:
        remaining = req.count
        while remaining > 0:
            n = min(remaining, CHUNK)
            values, state = core.fill(state, n)
            if req.out_type == "float":
                units = [core.normalize(v, bits) for v in values]
                if binary:
                    out.write(struct.pack(f"<{n}d", *units))
                else:
                    out.write("".join(f"{u!r}\n" for u in units))
            else:
                if binary:
                    out.write(struct.pack(f"<{n}Q", *values))
                else:
                    out.write("".join(f"{v}\n" for v in values))
            remaining -= n
        out.flush()
    finally:
        if owned:
            out.close()
    return EXIT_OK


def run_acf(req: CliRequest) -> int:
    kind = _lookup_kind(req.gen)
    if req.max_lag < 1:
        raise UsageError("max lag must be >= 1")
    if req.count < req.max_lag + 2:
        raise UsageError(f"count must be at least max_lag + 2 = {req.max_lag + 2}")
    state = _resolve_seed(req, kind)
    try:
        series = analysis.acf(_unit_draws(state, req.count), req.max_lag)
    except (analysis.TooShort, analysis.ZeroVariance) as exc:
        raise UsageError(str(exc)) from exc
    out, owned = _open_out(req, binary=False)
    try:
        out.write("lag,acf\n")
        for k, r in enumerate(series.values, start=1):
            out.write(f"{k},{float(r)!r}\n")
        out.flush()
    finally:
        if owned:
            out.close()
    return EXIT_OK


def run_lag(req: CliRequest) -> int:
    kind = _lookup_kind(req.gen)
    if req.lag < 0:
        raise UsageError("lag must be >= 0")
    if req.count <= req.lag:
        raise UsageError("count must exceed the lag")
    state = _resolve_seed(req, kind)
    pairs = analysis.lag_pairs(_unit_draws(state, req.count), req.lag)
    out, owned = _open_out(req, binary=False)
    try:
        for a, b in pairs:
            out.write(f"{float(a)!r},{float(b)!r}\n")
        out.flush()
    finally:
        if owned:
            out.close()
    return EXIT_OK


def run_bench(req: CliRequest) -> int:
    if req.reps < 2:
        raise UsageError("reps must be >= 2 for a standard deviation")
    if req.count < 1:
        raise UsageError("count must be >= 1")
    names = list(req.gens or core.KIND_BY_NAME)
    for name in names:
        _lookup_kind(name)
    # mt19937_64 is the reference point every comparison is made against
    if "mt19937_64" not in names:
        names.append("mt19937_64")
    out, owned = _open_out(req, binary=False)
    try:
        out.write("kind,n,reps,mean_us,stddev_us,checksum\n")
        for name in names:
            report = analysis.bench_throughput(name, n=req.count, reps=req.reps)
            out.write(
                f"{report.kind},{report.n},{report.reps},"
                f"{report.mean_us:.3f},{report.stddev_us:.3f},{report.checksum}\n"
            )
        out.flush()
    finally:
        if owned:
            out.close()
    return EXIT_OK


def build_parser() -> _Parser:
    parser = _Parser(prog="crand", description=__doc__,
                     formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = parser.add_subparsers(dest="subcommand", required=True)

    def common(p, count_default=None):
        p.add_argument("--gen", default="xorshift128plus",
                       help="generator name (default xorshift128plus)")
        p.add_argument("--seed", nargs="+", default=None, metavar="WORD",
                       help="seed words; omitted = drawn from system entropy")
        p.add_argument("--count", type=int, default=count_default, required=count_default is None,
                       help="number of draws")
        p.add_argument("--out", dest="out_path", default=None,
                       help="output file (default stdout)")

    g = sub.add_parser("generate", help="emit a sequence")
    common(g)
    g.add_argument("--type", dest="out_type", choices=("int", "float"), default="int")
    g.add_argument("--format", choices=("text", "binary"), default="text")

    a = sub.add_parser("acf", help="autocorrelation CSV")
    common(a)
    a.add_argument("--max-lag", dest="max_lag", type=int, default=50)

    l = sub.add_parser("lag", help="lag-pair CSV")
    common(l)
    l.add_argument("--lag", type=int, default=1)

    b = sub.add_parser("bench", help="fill timing report")
    b.add_argument("--gen", dest="gens", action="append", default=None,
                   help="generator to time (repeatable; default: all)")
    b.add_argument("--count", type=int, default=10_000, help="fill size per rep")
    b.add_argument("--reps", type=int, default=7, help="timed runs per generator")
    b.add_argument("--out", dest="out_path", default=None)

    return parser


_RUNNERS = {
    "generate": run_generate,
    "acf": run_acf,
    "lag": run_lag,
    "bench": run_bench,
}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        ns = parser.parse_args(argv)
        fields = {f: getattr(ns, f) for f in vars(ns) if f in CliRequest.__annotations__}
        if fields.get("seed") is not None:
            fields["seed"] = [int(w, 0) for w in fields["seed"]]
        req = CliRequest(**fields)
        return _RUNNERS[req.subcommand](req)
    except UsageError as exc:
        print(f"crand: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ValueError as exc:
        print(f"crand: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except BrokenPipeError:
        return EXIT_OK
    except (OSError, MemoryError, core.CrandError) as exc:
        print(f"crand: {exc}", file=sys.stderr)
        return EXIT_RUNTIME


if __name__ == "__main__":
    sys.exit(main())
