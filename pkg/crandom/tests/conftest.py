"""Test setup: a built library in the module directory and golden streams.

The binding is exercised strictly through its external surfaces: the
shared library (built from the sibling native/ tree if missing) and golden
files produced by the primary CLI.
"""

import os
import shutil
import subprocess
import sys

import pytest

HERE = os.path.dirname(os.path.abspath(__file__))
PKG_DIR = os.path.dirname(HERE)  # crandom project root
REPO = os.path.dirname(PKG_DIR)
MODULE_DIR = os.path.join(PKG_DIR, "crandom")
GOLDEN_DIR = os.path.join(HERE, "golden")

sys.path.insert(0, PKG_DIR)


def _module_lib_path():
    name = "libcrand.dll" if sys.platform.startswith("win") else (
        "libcrand.dylib" if sys.platform == "darwin" else "libcrand.so")
    return os.path.join(MODULE_DIR, name)


def pytest_configure(config):
    lib = _module_lib_path()
    if not os.path.exists(lib):
        built = os.path.join(REPO, "native", "lib", "shared", os.path.basename(lib))
        if not os.path.exists(built):
            subprocess.run(
                ["make", "-C", os.path.join(REPO, "native"), "lib"], check=True
            )
        shutil.copy2(built, lib)
    if not os.path.exists(os.path.join(GOLDEN_DIR, "manifest.json")):
        subprocess.run(
            [sys.executable, os.path.join(REPO, "scripts", "make_goldens.py"),
             GOLDEN_DIR],
            check=True,
        )


@pytest.fixture(autouse=True)
def clean_lib_env(monkeypatch):
    """Default resolution is the module directory; tests opt into overrides."""
    monkeypatch.delenv("CRAND_LIB_PATH", raising=False)


@pytest.fixture(scope="session")
def golden_manifest():
    import json

    with open(os.path.join(GOLDEN_DIR, "manifest.json")) as fh:
        return json.load(fh)
