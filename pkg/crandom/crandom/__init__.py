"""crandom: ctypes wrapper around the libcrand shared library.

The compiled library does all generation; this module only loads it,
declares call signatures once, and maintains each generator's state array
between calls.

    import crandom
    gen = crandom.Random('xorshift+')
    gen.set_seed([233, 43])
    r = gen.generate(size=10)              # numpy array of uint64
    r = gen.generate(size=10, type=float)  # numpy array in [0, 1)
    r = gen(size=10)                       # objects are callable
    gen.set_iterator(10, int)
    for value in gen:
        ...

The library file is resolved from CRAND_LIB_PATH if set, otherwise from
this module's own directory (libcrand.so / .dylib / .dll by platform).
Set CRAND_IMPORT_SMOKE=1 to exercise the three demonstration calls at
import time.
"""

from __future__ import annotations

import ctypes
import os
import sys
import threading
from ctypes import c_double, c_int32, c_int64, c_size_t, c_uint64

import numpy as np

__all__ = [
    "Random",
    "load_library",
    "uint64_var",
    "change_var",
    "avg_value",
    "GENERATORS",
    "CrandomError",
    "LibraryNotFound",
    "SymbolMissing",
    "UnknownGenerator",
    "WrongSeedCount",
    "DegenerateSeed",
    "NullArgument",
]

_OK = 0
_BAD_KIND = 1
_BAD_SEED = 2
_NULL_ARGUMENT = 3

_SYMBOLS = (
    "crand_kind_count",
    "crand_seed_words",
    "crand_state_words",
    "crand_init",
    "crand_fill",
    "crand_fill_unit",
    "uint64_var",
    "change_var",
    "avg_value",
)

# canonical name -> stable kind id; aliases map onto canonical names
GENERATORS = {
    "xorshift32": 0,
    "xorshift64": 1,
    "xorshift128": 2,
    "xorshift128plus": 3,
    "pcg32": 4,
    "kiss": 5,
    "splitmix64": 6,
    "mt19937_64": 7,
}

ALIASES = {
    "xorshift+": "xorshift128plus",
    "xorshift128+": "xorshift128plus",
}


class CrandomError(Exception):
    """Base for all errors raised by this module."""


class LibraryNotFound(CrandomError):
    """No loadable library file at any of the attempted paths."""


class SymbolMissing(CrandomError):
    """The library loaded but lacks a required symbol."""


class UnknownGenerator(CrandomError):
    """Requested name is not in the generator table."""


class WrongSeedCount(CrandomError):
    """Seed list has the wrong length for the generator."""


class DegenerateSeed(CrandomError):
    """The library rejected the seed (e.g. all-zero xorshift state)."""


class NullArgument(CrandomError):
    """A required buffer was missing."""


_lock = threading.Lock()
_lib = None


def _library_filename() -> str:
    if sys.platform.startswith("win"):
        return "libcrand.dll"
    if sys.platform == "darwin":
        return "libcrand.dylib"
    return "libcrand.so"


def _declare(lib: ctypes.CDLL) -> ctypes.CDLL:
    u64p = ctypes.POINTER(c_uint64)
    f64p = ctypes.POINTER(c_double)
    i64p = ctypes.POINTER(c_int64)
    signatures = {
        "crand_kind_count": ([], c_int32),
        "crand_seed_words": ([c_int32], c_int32),
        "crand_state_words": ([c_int32], c_int32),
        "crand_init": ([c_int32, u64p, c_int32, u64p, c_int32], c_int32),
        "crand_fill": ([c_int32, u64p, c_int32, u64p, c_uint64], c_int32),
        "crand_fill_unit": ([c_int32, u64p, c_int32, f64p, c_uint64], c_int32),
        "uint64_var": ([c_uint64], c_uint64),
        "change_var": ([f64p], None),
        "avg_value": ([i64p, c_size_t], c_double),
    }
    for name in _SYMBOLS:
        try:
            fn = getattr(lib, name)
        except AttributeError:
            raise SymbolMissing(f"library lacks required symbol '{name}'") from None
        argtypes, restype = signatures[name]
        fn.argtypes = argtypes
        fn.restype = restype
    return lib


def load_library(reload: bool = False) -> ctypes.CDLL:
    """Load the shared library once, declaring every symbol's types.

    `reload` drops the cached handle and resolves the path again (useful
    after changing CRAND_LIB_PATH).
    """
    global _lib
    if _lib is not None and not reload:
        return _lib
    with _lock:
        if _lib is not None and not reload:
            return _lib
        attempted = []
        override = os.environ.get("CRAND_LIB_PATH")
        if override:
            attempted.append(override)
        module_dir = os.path.dirname(os.path.realpath(__file__))
        attempted.append(os.path.join(module_dir, _library_filename()))
        for path in attempted:
            if os.path.exists(path):
                try:
                    lib = ctypes.CDLL(os.path.abspath(path))
                except OSError as exc:
                    raise LibraryNotFound(f"cannot load {path}: {exc}") from exc
                _lib = _declare(lib)
                return _lib
        raise LibraryNotFound(
            "no library file found; attempted: " + ", ".join(attempted)
        )


def _raise_for_status(status: int, context: str) -> None:
    if status == _OK:
        return
    if status == _BAD_KIND:
        raise UnknownGenerator(f"{context}: library rejected the kind id")
    if status == _BAD_SEED:
        raise DegenerateSeed(f"{context}: library rejected the seed/state")
    if status == _NULL_ARGUMENT:
        raise NullArgument(f"{context}: missing buffer")
    raise CrandomError(f"{context}: unknown status {status}")


class Random:
    """One pseudorandom generator with its state held in `seed`.

    `seed` is the library's state word array, copied back verbatim after
    every generation call, so it always continues the sequence. Passing it
    to `set_seed(..., state=True)` on a fresh object resumes exactly.
    """

    def __init__(self, name: str):
        canonical = ALIASES.get(name, name)
        if canonical not in GENERATORS:
            known = sorted(set(GENERATORS) | set(ALIASES))
            raise UnknownGenerator(f"unknown generator '{name}'; known: {', '.join(known)}")
        self._lib = load_library()
        self.name = canonical
        self._kind = GENERATORS[canonical]
        self._seed_len = int(self._lib.crand_seed_words(self._kind))
        self._state_len = int(self._lib.crand_state_words(self._kind))
        self.seed = None  # state words once seeded
        self.autoseed = None  # last entropy words chosen by set_seed()
        self._iter_budget = None
        self._iter_type = int

    # -- seeding ----------------------------------------------------------

    def set_seed(self, seed=None, state: bool = False) -> None:
        """Initialize the generator state.

        With no argument, draws the required number of words from system
        entropy (recorded in `autoseed`). With a list of user seed words,
        builds the state through the library (pcg32 takes (initstate,
        initseq); mt19937_64 expands its single word). With state=True the
        words are adopted verbatim as a state array, which is how a saved
        `seed` attribute resumes a sequence.
        """
        if seed is None:
            while True:
                words = [
                    int.from_bytes(os.urandom(8), "little")
                    for _ in range(self._seed_len)
                ]
                try:
                    self._init_from_user_words(words)
                except DegenerateSeed:
                    continue
                self.autoseed = list(words)
                return
        words = [int(w) for w in seed]
        if state:
            self._adopt_state(words)
        else:
            self._init_from_user_words(words)

    def _init_from_user_words(self, words) -> None:
        if len(words) != self._seed_len:
            raise WrongSeedCount(
                f"{self.name} takes {self._seed_len} seed word(s), got {len(words)}"
            )
        seed_arr = (c_uint64 * self._seed_len)(*words)
        state_arr = (c_uint64 * self._state_len)()
        status = self._lib.crand_init(
            self._kind, seed_arr, self._seed_len, state_arr, self._state_len
        )
        _raise_for_status(status, f"set_seed({self.name})")
        self.seed = list(state_arr)

    def _adopt_state(self, words) -> None:
        if len(words) != self._state_len:
            raise WrongSeedCount(
                f"{self.name} state is {self._state_len} word(s), got {len(words)}"
            )
        state_arr = (c_uint64 * self._state_len)(*words)
        # a zero-length fill validates the state without advancing it
        status = self._lib.crand_fill(self._kind, state_arr, self._state_len, None, 0)
        _raise_for_status(status, f"set_seed({self.name}, state=True)")
        self.seed = list(state_arr)

    # -- generation -------------------------------------------------------

    def generate(self, size, type=int):
        """Array of `size` draws: raw words for int, [0, 1) floats for float.

        The returned numpy array wraps the natively filled buffer without
        copying. The `seed` attribute is updated to the continuation state.
        """
        if size < 0:
            raise ValueError("size must be >= 0")
        if type not in (int, float):
            raise ValueError("type must be int or float")
        if self.seed is None:
            self.set_seed()
        state_arr = (c_uint64 * self._state_len)(*self.seed)
        if type is int:
            out = (c_uint64 * size)()
            status = self._lib.crand_fill(
                self._kind, state_arr, self._state_len, out, size
            )
        else:
            out = (c_double * size)()
            status = self._lib.crand_fill_unit(
                self._kind, state_arr, self._state_len, out, size
            )
        _raise_for_status(status, f"generate({self.name})")
        self.seed = list(state_arr)
        if size == 0:
            return np.empty(0, dtype=np.uint64 if type is int else np.float64)
        return np.ctypeslib.as_array(out)

    __call__ = generate

    # -- iterator mode ----------------------------------------------------

    def set_iterator(self, count: int, type=int) -> None:
        """Arrange for the next loop over this object to yield `count` draws."""
        if count < 0:
            raise ValueError("count must be >= 0")
        if type not in (int, float):
            raise ValueError("type must be int or float")
        self._iter_budget = count
        self._iter_type = type

    def __iter__(self):
        return self

    def __next__(self):
        if not self._iter_budget:
            self._iter_budget = None
            raise StopIteration
        self._iter_budget -= 1
        value = self.generate(1, self._iter_type)[0]
        return int(value) if self._iter_type is int else float(value)


# ---------------------------------------------------------------------------
# demonstration wrappers for the three boundary call patterns

def uint64_var(value: int = 0) -> int:
    """By-value call: returns the library's fixed 2^63 - 1 constant."""
    return int(load_library().uint64_var(value))


def change_var(value: float = 1.0) -> float:
    """By-reference call: the library overwrites the variable with 2.0."""
    x = ctypes.c_double(value)
    load_library().change_var(ctypes.byref(x))
    return x.value


def avg_value(l: list) -> float:
    """avg_value wrapper"""
    lib = load_library()
    A = (ctypes.c_longlong * len(l))(*l)
    n = ctypes.c_size_t(len(l))
    return lib.avg_value(ctypes.cast(A, ctypes.POINTER(c_int64)), n)


def _import_smoke() -> None:
    if uint64_var(0) != 9223372036854775807:
        raise RuntimeError("uint64_var smoke call failed")
    if change_var(1.0) != 2.0:
        raise RuntimeError("change_var smoke call failed")
    if avg_value([1, 2, 3]) != 2.0:
        raise RuntimeError("avg_value smoke call failed")


if os.environ.get("CRAND_IMPORT_SMOKE") == "1":
    _import_smoke()
