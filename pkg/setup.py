"""Build script: compiles the optional fast kernels.

The package works without the extension (a pure-Python twin of every kernel
ships in cliquefold/_kernels_py.py); the compiled module just makes the
exhaustive searches fast enough to be pleasant.
"""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [Extension("cliquefold._kernels", ["src/cliquefold/_kernels.pyx"])],
        language_level="3",
    )
except ImportError:
    # No Cython available: install pure-Python only.
    ext_modules = []

setup(ext_modules=ext_modules)
