"""Build script for the compiled row-reduction kernel.

The extension is optional: if Cython or a C compiler is missing the
package still installs and falls back to the pure-Python kernel at
import time (see shift_lab.kernels).
"""

from setuptools import Extension, setup

ext_modules = []
try:
    from Cython.Build import cythonize
    import numpy as np

    ext_modules = cythonize(
        [
            Extension(
                "shift_lab._rowred",
                sources=["src/shift_lab/_rowred.pyx"],
                include_dirs=[np.get_include()],
                extra_compile_args=["-O3"],
                define_macros=[("NPY_NO_DEPRECATED_API", "NPY_1_7_API_VERSION")],
            )
        ],
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    pass

setup(ext_modules=ext_modules)
