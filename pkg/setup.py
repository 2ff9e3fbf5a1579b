"""Build script: compiles the optional Cython kernel module.

The package works without the extension (a pure-Python fallback is
selected at import time), so the build is tolerant: no Cython, or a
failing C compiler, still yields a usable install.

Set EISDIM_NO_EXT=1 to skip the extension entirely.
"""

import os

from setuptools import Extension, setup

ext_modules = []
if not os.environ.get("EISDIM_NO_EXT"):
    try:
        from Cython.Build import cythonize
    except ImportError:
        cythonize = None
    if cythonize is not None:
        ext = Extension(
            "eisdim._kernels_cy",
            ["src/eisdim/_kernels_cy.pyx"],
            optional=True,
        )
        ext_modules = cythonize([ext], language_level="3")

setup(ext_modules=ext_modules)
