"""Build script for the optional Cython sampling kernel.

The package works without the compiled extension (a pure-Python kernel is
selected at import time), so the extension is marked optional: a missing
compiler degrades performance, not functionality.
"""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
    import numpy as np
except ImportError:
    ext_modules = []
else:
    ext_modules = cythonize(
        [
            Extension(
                "pubineq.topics._gibbs",
                ["src/pubineq/topics/_gibbs.pyx"],
                include_dirs=[np.get_include()],
                extra_compile_args=["-O3"],
                optional=True,
            )
        ],
        language_level=3,
    )

setup(ext_modules=ext_modules)
