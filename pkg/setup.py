"""Build script: compiles the optional Cython kernel.

The package works without the extension (the pure-Python twin in
``leibniz_lab._kernel.pure`` is selected at import time), so any failure
to cythonize or compile only costs speed, not functionality.
"""

from setuptools import setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        ["src/leibniz_lab/_kernel/_speedups.pyx"],
        language_level=3,
    )
except Exception as exc:  # pragma: no cover - build-environment dependent
    print(f"leibniz-lab: skipping compiled kernel ({exc}); pure-Python fallback will be used")

setup(ext_modules=ext_modules)
