import os

from setuptools import Extension, setup

# The compiled kernels are an accelerator, not a requirement: the package
# falls back to the pure-Python implementations in twistcomm._kernels.pure
# when the extension is absent.  Set TWISTCOMM_NO_EXT=1 to skip the build.
ext_modules = []
if not os.environ.get("TWISTCOMM_NO_EXT"):
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [
                Extension(
                    "twistcomm._kernels._core",
                    ["src/twistcomm/_kernels/_core.pyx"],
                )
            ],
            compiler_directives={
                "language_level": "3",
                "boundscheck": False,
                "wraparound": False,
                "cdivision": True,
            },
        )
    except ImportError:
        ext_modules = []

setup(ext_modules=ext_modules)
