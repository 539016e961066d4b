"""Build script: compiles the optional Cython kernel extension.

The extension is marked optional; if compilation is impossible the package
installs anyway and `hypercolor.kernels` falls back to the pure-Python
implementation at import time.  Set HYPERCOLOR_PURE=1 to skip compilation
entirely.
"""

import os

from setuptools import Extension, setup

ext_modules = []
if os.environ.get("HYPERCOLOR_PURE") != "1":
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [
                Extension(
                    "hypercolor._kernels",
                    sources=["src/hypercolor/_kernels.pyx"],
                    optional=True,
                )
            ],
            compiler_directives={"language_level": "3"},
        )
    except ImportError:
        ext_modules = []

setup(ext_modules=ext_modules)
