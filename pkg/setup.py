"""Build script: compiles the optional normal-form speedups.

The compiled extension is a strict accelerator; if Cython or a C
compiler is unavailable the build falls through to the pure-Python
kernels (selected automatically at import time).
"""

import warnings

from setuptools import setup
from setuptools.command.build_ext import build_ext


def extensions():
    try:
        from Cython.Build import cythonize
    except ImportError:
        warnings.warn("Cython not available; building without the compiled kernels")
        return []
    from setuptools import Extension

    return cythonize(
        [Extension("ordroots._speedups", ["src/ordroots/_speedups.pyx"])],
        compiler_directives={"language_level": "3"},
    )


class optional_build_ext(build_ext):
    """Never fail the install over the accelerator."""

    def run(self):
        try:
            super().run()
        except Exception as e:  # compiler missing, etc.
            warnings.warn(f"skipping compiled kernels: {e}")

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as e:
            warnings.warn(f"skipping compiled kernel {ext.name}: {e}")


setup(
    ext_modules=extensions(),
    cmdclass={"build_ext": optional_build_ext},
)
