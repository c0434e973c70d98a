"""Build script: compiles the optional elimination backend.

The package is pure Python plus one optional extension module,
hada._speedups, generated from src/hada/_speedups.pyx.  The build
prefers Cython when it is importable and otherwise falls back to the
shipped _speedups.c; if no C compiler is available the extension is
skipped and the package installs with the pure backend only.

    python setup.py build_ext --inplace    # compile in a source tree
"""

import os
from pathlib import Path

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext

# setuptools requires /-separated paths relative to this file
PYX = "src/hada/_speedups.pyx"
C = "src/hada/_speedups.c"


def extension_sources():
    if os.environ.get("HADA_NO_EXT"):
        return None
    try:
        from Cython.Build import cythonize
    except ImportError:
        cythonize = None
    if cythonize is not None and Path(PYX).exists():
        return cythonize(
            [Extension("hada._speedups", [PYX])],
            compiler_directives={"language_level": "3"},
        )
    if Path(C).exists():
        return [Extension("hada._speedups", [C])]
    return None


class optional_build_ext(build_ext):
    """Skip the extension instead of failing the whole install."""

    def run(self):
        try:
            super().run()
        except Exception as exc:  # compiler missing or broken
            self._warn(exc)

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:
            self._warn(exc)

    @staticmethod
    def _warn(exc):
        print(
            f"warning: building hada._speedups failed ({exc}); "
            "falling back to the pure Python backend"
        )


kwargs = {}
sources = extension_sources()
if sources:
    kwargs["ext_modules"] = sources
    kwargs["cmdclass"] = {"build_ext": optional_build_ext}

setup(**kwargs)
