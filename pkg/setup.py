"""Build shim for the optional compiled kernel extension.

The package is fully functional without the extension; segrank._kernels
falls back to the pure-Python implementations at import time.
"""

from setuptools import Extension, setup

ext_modules = []
try:
    import numpy
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [
            Extension(
                "segrank._kernels._ckernels",
                ["src/segrank/_kernels/_ckernels.pyx"],
                include_dirs=[numpy.get_include()],
                optional=True,
            )
        ],
        language_level=3,
    )
except ImportError:
    pass

setup(ext_modules=ext_modules)
