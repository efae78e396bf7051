"""Build script for the optional compiled kernels.

The package works without them: ``extremal_betti.kernels`` falls back to the
pure-Python implementations when the extension is missing.
"""

import os

from setuptools import setup

ext_modules = []
if not os.environ.get("EXTREMAL_BETTI_NO_EXT"):
    try:
        from Cython.Build import cythonize
        from setuptools import Extension
    except ImportError:
        pass
    else:
        ext_modules = cythonize(
            [
                Extension(
                    "extremal_betti._ckernels",
                    ["src/extremal_betti/_ckernels.pyx"],
                    extra_compile_args=["-O3"],
                )
            ],
            compiler_directives={"language_level": "3"},
        )

setup(ext_modules=ext_modules)
