"""Build script for the compiled geometry kernels.

The extension is optional: set CAGEOPT_SKIP_EXT=1 (or install without a C
toolchain/Cython) and the package falls back to the pure-numpy kernels at
import time.
"""

import os

from setuptools import Extension, setup

ext_modules = []
if os.environ.get("CAGEOPT_SKIP_EXT", "") not in ("1", "true", "yes"):
    try:
        import numpy as np
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [
                Extension(
                    "cageopt.kernels._core",
                    ["src/cageopt/kernels/_core.pyx"],
                    include_dirs=[np.get_include()],
                    extra_compile_args=["-O3"],
                    define_macros=[("NPY_NO_DEPRECATED_API", "NPY_1_7_API_VERSION")],
                )
            ],
            language_level="3",
        )
    except ImportError:
        ext_modules = []

setup(ext_modules=ext_modules)
