"""Build script: compiles the optional Cython core.

The package is fully functional without the extension (a pure-Python
twin is selected at import time); the build therefore tolerates a
missing compiler instead of failing the whole install.
"""

import sys

from setuptools import setup

try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        ["src/chaoskit/_core.pyx"],
        compiler_directives={
            "language_level": 3,
            "boundscheck": False,
            "wraparound": False,
            "cdivision": True,
        },
    )
except Exception as exc:  # pragma: no cover - degraded build path
    print(f"chaoskit: skipping compiled core ({exc!r}); "
          "pure-Python fallback will be used", file=sys.stderr)
    ext_modules = []

setup(ext_modules=ext_modules)
