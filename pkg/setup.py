"""Build script for the optional compiled census kernels.

The package works without the extension: census falls back to the pure
Python kernels in i3free._kernels_py when i3free._kernels is absent.
"""
from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    ext_modules = []
else:
    ext_modules = cythonize(
        [
            Extension(
                "i3free._kernels",
                ["src/i3free/_kernels.pyx"],
                extra_compile_args=["-O3"],
            )
        ],
        compiler_directives={"language_level": "3"},
    )

setup(ext_modules=ext_modules)
