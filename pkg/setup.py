"""Build script: compiles the optional kernel extension when Cython and a
C compiler are available.  The package is fully functional without it; the
pure-Python kernels are selected at import time as a fallback."""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize

    extensions = cythonize(
        [
            Extension(
                "fractree._kernels",
                sources=["src/fractree/_kernels.pyx"],
                optional=True,
            )
        ],
        compiler_directives={
            "language_level": "3",
            "boundscheck": False,
            "wraparound": False,
        },
    )
except ImportError:
    extensions = []

setup(ext_modules=extensions)
