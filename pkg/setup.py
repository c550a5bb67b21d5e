"""Build script: compiles the optional Cython kernel.

The package is pure Python except for genjacobi._ckernel, a compiled twin of
genjacobi._pykernel.  If Cython or a C compiler is unavailable the extension
is skipped and the package falls back to the pure kernel at import time.
"""
import sys

from setuptools import Extension, setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [Extension("genjacobi._ckernel", ["src/genjacobi/_ckernel.pyx"])],
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    print("Cython not found; building without the compiled kernel", file=sys.stderr)

setup(ext_modules=ext_modules)
