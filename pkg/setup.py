"""Build hook for the optional compiled search kernel.

The package is pure Python plus one Cython extension for the cover-search
inner loop; when Cython (or a C compiler) is unavailable the build proceeds
without it and the equivalent pure kernel is used at runtime.
"""

from setuptools import setup

try:
    from Cython.Build import cythonize
    ext_modules = cythonize(
        ["src/geocover/_kernel.pyx"],
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    ext_modules = []

setup(ext_modules=ext_modules)
