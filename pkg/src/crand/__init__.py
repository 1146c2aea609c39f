"""crand: fast pseudorandom generators with a C ABI, CLI and diagnostics."""

from crand.core import (
    KIND_BY_NAME,
    KIND_ID,
    KINDS,
    CrandError,
    DegenerateSeed,
    GeneratorKind,
    GeneratorState,
    OutputWord,
    WrongSeedCount,
    fill,
    new_state,
    normalize,
    required_seed_words,
    seed_expand,
)

__all__ = [
    "KIND_BY_NAME",
    "KIND_ID",
    "KINDS",
    "CrandError",
    "DegenerateSeed",
    "GeneratorKind",
    "GeneratorState",
    "OutputWord",
    "WrongSeedCount",
    "fill",
    "new_state",
    "normalize",
    "required_seed_words",
    "seed_expand",
]

__version__ = "0.1.0"
