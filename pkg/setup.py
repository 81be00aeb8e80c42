"""Build script for the optional compiled kernels.

The package is pure Python by default; when Cython and a C compiler are
available, `matchforce._core._speedups` is built and picked up at import
time.  Set MATCHFORCE_NO_EXT=1 to skip the extension entirely.

    pip install -e .                      # builds the extension if possible
    python setup.py build_ext --inplace   # compile into the source tree
"""

import os

from setuptools import setup

ext_modules = []
if not os.environ.get("MATCHFORCE_NO_EXT"):
    try:
        from Cython.Build import cythonize
        from setuptools import Extension

        ext_modules = cythonize(
            [
                Extension(
                    "matchforce._core._speedups",
                    ["src/matchforce/_core/_speedups.pyx"],
                    extra_compile_args=["-O3"],
                    optional=True,
                )
            ],
            compiler_directives={
                "language_level": "3",
                "boundscheck": False,
                "wraparound": False,
                "cdivision": True,
            },
        )
    except ImportError:
        ext_modules = []

setup(ext_modules=ext_modules)
