"""Loader and thin wrappers for the compiled libcrand shared library.

Resolution order: the CRAND_LIB_PATH environment variable, then the
repository build tree (native/lib/shared). If sources are present but the
library is not built yet, `load` builds it with make once.

Argument and return types for every exported symbol are declared a single
time at load; loading is idempotent and safe under concurrent first use.
"""

from __future__ import annotations

import ctypes
import os
import subprocess
import sys
import threading
from ctypes import c_double, c_int32, c_int64, c_size_t, c_uint64

import numpy as np

from crand.core import KIND_BY_NAME, KIND_ID, CrandError

OK = 0
BAD_KIND = 1
BAD_SEED = 2
NULL_ARGUMENT = 3

_STATUS_NAMES = {OK: "OK", BAD_KIND: "BadKind", BAD_SEED: "BadSeed",
                 NULL_ARGUMENT: "NullArgument"}

EXPORTED_SYMBOLS = (
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

_NATIVE_DIR = os.path.join(os.path.dirname(os.path.dirname(
    os.path.dirname(os.path.abspath(__file__)))), "native")

_lock = threading.Lock()
_lib = None


class NativeLibraryError(CrandError):
    """The shared library could not be located, built or loaded."""


class AbiStatusError(CrandError):
    """A library entrypoint returned a non-OK status."""

    def __init__(self, status: int, context: str = ""):
        self.status = status
        name = _STATUS_NAMES.get(status, str(status))
        super().__init__(f"{context + ': ' if context else ''}status {name}")


def shared_library_name() -> str:
    if sys.platform.startswith("win"):
        return "libcrand.dll"
    if sys.platform == "darwin":
        return "libcrand.dylib"
    return "libcrand.so"


def shared_library_path() -> str:
    override = os.environ.get("CRAND_LIB_PATH")
    if override:
        return override
    return os.path.join(_NATIVE_DIR, "lib", "shared", shared_library_name())


def ensure_built() -> str:
    """Build the library with make if it is missing; return its path."""
    path = shared_library_path()
    if os.path.exists(path):
        return path
    if os.environ.get("CRAND_LIB_PATH"):
        raise NativeLibraryError(f"CRAND_LIB_PATH points at a missing file: {path}")
    if not os.path.exists(os.path.join(_NATIVE_DIR, "Makefile")):
        raise NativeLibraryError(
            f"no library at {path} and no build tree at {_NATIVE_DIR}")
    result = subprocess.run(
        ["make", "-C", _NATIVE_DIR, "lib"], capture_output=True, text=True)
    if result.returncode != 0:
        raise NativeLibraryError(f"make failed:\n{result.stderr}")
    if not os.path.exists(path):
        raise NativeLibraryError(f"build finished but {path} is missing")
    return path


def _declare(lib: ctypes.CDLL) -> ctypes.CDLL:
    u64p = ctypes.POINTER(c_uint64)
    f64p = ctypes.POINTER(c_double)
    i64p = ctypes.POINTER(c_int64)

    lib.crand_kind_count.argtypes = []
    lib.crand_kind_count.restype = c_int32
    lib.crand_seed_words.argtypes = [c_int32]
    lib.crand_seed_words.restype = c_int32
    lib.crand_state_words.argtypes = [c_int32]
    lib.crand_state_words.restype = c_int32
    lib.crand_init.argtypes = [c_int32, u64p, c_int32, u64p, c_int32]
    lib.crand_init.restype = c_int32
    lib.crand_fill.argtypes = [c_int32, u64p, c_int32, u64p, c_uint64]
    lib.crand_fill.restype = c_int32
    lib.crand_fill_unit.argtypes = [c_int32, u64p, c_int32, f64p, c_uint64]
    lib.crand_fill_unit.restype = c_int32
    lib.uint64_var.argtypes = [c_uint64]
    lib.uint64_var.restype = c_uint64
    lib.change_var.argtypes = [f64p]
    lib.change_var.restype = None
    lib.avg_value.argtypes = [i64p, c_size_t]
    lib.avg_value.restype = c_double
    return lib


def load() -> ctypes.CDLL:
    """Load (building if needed) and declare the library once per process."""
    global _lib
    if _lib is not None:
        return _lib
    with _lock:
        if _lib is None:
            path = ensure_built()
            try:
                lib = ctypes.CDLL(path)
            except OSError as exc:
                raise NativeLibraryError(f"cannot load {path}: {exc}") from exc
            _lib = _declare(lib)
    return _lib


def check_status(status: int, context: str = "") -> None:
    if status != OK:
        raise AbiStatusError(status, context)


# ---------------------------------------------------------------------------
# convenience wrappers over the raw entrypoints

def init_state(lib: ctypes.CDLL, name: str, user_words) -> list[int]:
    kind_id = KIND_ID[name]
    seed = (c_uint64 * len(user_words))(*user_words)
    state = (c_uint64 * KIND_BY_NAME[name].state_words)()
    check_status(
        lib.crand_init(kind_id, seed, len(seed), state, len(state)),
        f"crand_init({name})",
    )
    return list(state)


def fill(lib: ctypes.CDLL, name: str, state_words, n: int):
    """Raw outputs plus the successor state words."""
    kind_id = KIND_ID[name]
    state = (c_uint64 * len(state_words))(*state_words)
    out = (c_uint64 * n)()
    check_status(
        lib.crand_fill(kind_id, state, len(state), out, n),
        f"crand_fill({name})",
    )
    return np.ctypeslib.as_array(out), list(state)


def fill_unit(lib: ctypes.CDLL, name: str, state_words, n: int):
    """Normalized outputs in [0, 1) plus the successor state words."""
    kind_id = KIND_ID[name]
    state = (c_uint64 * len(state_words))(*state_words)
    out = (c_double * n)()
    check_status(
        lib.crand_fill_unit(kind_id, state, len(state), out, n),
        f"crand_fill_unit({name})",
    )
    return np.ctypeslib.as_array(out), list(state)
