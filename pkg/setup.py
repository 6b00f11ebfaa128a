"""Build script: compiles the optional Euler-Maclaurin kernel extension.

The package is fully functional without the extension (a pure-Python
backend is selected at import time), so a failed compile must not abort
the install.
"""

from setuptools import Extension, setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [
            Extension(
                "zrc._kernel._em",
                ["src/zrc/_kernel/_em.pyx"],
                optional=True,
            )
        ],
        language_level="3",
    )
except Exception:
    ext_modules = []

setup(ext_modules=ext_modules)
