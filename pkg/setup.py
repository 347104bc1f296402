"""Build script: compiles the optional fast kernel.

The package works without the extension (a pure-Python kernel is selected at
import time), so any failure here downgrades to a warning instead of aborting
the install.
"""

import sys

from setuptools import setup
from setuptools.command.build_ext import build_ext


class optional_build_ext(build_ext):
    """Build the extension if possible; fall back to pure Python otherwise."""

    def run(self):
        try:
            super().run()
        except Exception as exc:  # missing compiler, broken toolchain, ...
            self._skip(exc)

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:
            self._skip(exc)

    @staticmethod
    def _skip(exc):
        print(f"warning: compiled kernel not built ({exc}); "
              "falling back to the pure-Python kernel", file=sys.stderr)


try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        ["src/zclrp/_kernels/_fast.pyx"],
        language_level=3,
    )
except ImportError:
    print("warning: Cython not available; building without the compiled kernel",
          file=sys.stderr)
    ext_modules = []

setup(ext_modules=ext_modules, cmdclass={"build_ext": optional_build_ext})
