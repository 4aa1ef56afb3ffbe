"""Build glue for the optional compiled term kernel.

The package is pure Python plus one Cython module; if the extension cannot
be built the install still succeeds and the runtime falls back to the
Python kernel.
"""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize

    extensions = cythonize(
        [Extension("grothpoly._termkernel_c", ["src/grothpoly/_termkernel_c.pyx"])],
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    extensions = []

setup(ext_modules=extensions)
