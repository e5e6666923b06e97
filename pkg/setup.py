"""Build script: compiles the optional Cython kernel extension.

The package works without the extension (pure-Python kernels are selected at
import time), so any failure here is non-fatal by design: install with
``pip install -e . --no-build-isolation`` to get the compiled kernels.
"""

from setuptools import setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        ["src/quadrob/_ckernels.pyx"],
        compiler_directives={"language_level": 3},
    )
except Exception as exc:  # Cython or a C compiler is missing: pure fallback
    print(f"quadrob: building without compiled kernels ({exc})")

setup(ext_modules=ext_modules)
