"""Build script for the optional compiled scan kernels.

The package works without the extension (a NumPy fallback is selected at
import time), so a missing Cython toolchain degrades the build instead of
failing it.
"""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [
            Extension(
                "apform._kernels.cscan",
                ["src/apform/_kernels/cscan.pyx"],
                language="c++",
            )
        ],
        language_level=3,
    )
except ImportError:
    ext_modules = []

setup(ext_modules=ext_modules)
