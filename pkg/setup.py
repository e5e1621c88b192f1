"""Build script for the optional compiled scan kernels.

The package is fully functional without the extension: the pure-Python
kernels are selected automatically at import time when the compiled module
is missing (no compiler, no Cython, or TRAJSUM_NO_EXT=1 during the build).
"""

import os

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class OptionalBuildExt(build_ext):
    """Treat extension build failures as a soft degradation, not an error."""

    def run(self):
        try:
            super().run()
        except Exception as exc:  # missing toolchain
            print(f"WARNING: compiled kernels skipped ({exc}); "
                  "the pure-Python fallback will be used")

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:
            print(f"WARNING: building {ext.name} failed ({exc}); "
                  "the pure-Python fallback will be used")


extensions = []
if os.environ.get("TRAJSUM_NO_EXT") != "1":
    try:
        from Cython.Build import cythonize

        extensions = cythonize(
            [
                Extension(
                    "trajsum._kernels._cscan",
                    ["src/trajsum/_kernels/_cscan.pyx"],
                    extra_compile_args=["-O3"],
                )
            ],
            compiler_directives={"language_level": "3"},
        )
    except ImportError:
        print("WARNING: Cython not available; using pure-Python kernels")

setup(ext_modules=extensions, cmdclass={"build_ext": OptionalBuildExt})
