"""Build script: compiles the optional Cython propagation kernel.

The package works without the extension (a pure-numpy fallback is selected
at import time), so any failure here is non-fatal.
"""

from setuptools import setup

ext_modules = []
try:
    import numpy as np
    from Cython.Build import cythonize
    from setuptools.extension import Extension

    ext_modules = cythonize(
        [
            Extension(
                "qubosc._kernels._rk4_cy",
                ["src/qubosc/_kernels/_rk4_cy.pyx"],
                include_dirs=[np.get_include()],
                define_macros=[("NPY_NO_DEPRECATED_API", "NPY_1_7_API_VERSION")],
                optional=True,
            )
        ],
        language_level="3",
    )
except ImportError:
    pass

setup(ext_modules=ext_modules)
