"""Build script for the optional compiled enumeration kernels.

The package is pure Python except for ncpseq._kernels, a Cython twin of
ncpseq._kernels_py.  If Cython (or a C compiler) is unavailable the
extension is skipped and the package falls back to the pure kernels at
import time, so installation never hard-fails on the toolchain.
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
                "ncpseq._kernels",
                ["src/ncpseq/_kernels.pyx"],
                extra_compile_args=["-O3"],
            )
        ],
        compiler_directives={"language_level": "3"},
    )

setup(ext_modules=ext_modules)
