"""Build script for the optional compiled Birkhoff-sum kernel.

The package works without the extension (a numpy fallback is selected at
import time), so any build failure here degrades gracefully to pure Python.
"""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [
            Extension(
                "friedzeta._kernels._birkhoff",
                ["src/friedzeta/_kernels/_birkhoff.pyx"],
                extra_compile_args=["-O3"],
            )
        ],
        language_level=3,
    )
except ImportError:
    ext_modules = []

setup(ext_modules=ext_modules)
