"""Build script: compiles the optional Cython sweep kernel.

The package works without the extension (a vectorized numpy backend is
selected at import time); the build therefore tolerates a missing Cython
or a failing C compiler instead of aborting the install.
"""

import warnings

from setuptools import setup
from setuptools.command.build_ext import build_ext


class OptionalBuildExt(build_ext):
    """build_ext that degrades to a warning when compilation fails."""

    def run(self):
        try:
            super().run()
        except Exception as exc:  # compiler missing, etc.
            warnings.warn(f"C extension build skipped ({exc}); "
                          "hjsafe will use the pure-Python kernel")

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:
            warnings.warn(f"building {ext.name} failed ({exc}); "
                          "hjsafe will use the pure-Python kernel")


def make_ext_list():
    try:
        import numpy
        from setuptools import Extension
        from Cython.Build import cythonize
    except ImportError:
        warnings.warn("Cython/numpy unavailable at build time; "
                      "skipping the compiled sweep kernel")
        return []
    ext = Extension(
        "hjsafe._kernels._cysweep",
        sources=["src/hjsafe/_kernels/_cysweep.pyx"],
        include_dirs=[numpy.get_include()],
        define_macros=[("NPY_NO_DEPRECATED_API", "NPY_1_7_API_VERSION")],
    )
    return cythonize([ext], language_level=3)


setup(
    ext_modules=make_ext_list(),
    cmdclass={"build_ext": OptionalBuildExt},
)
