"""Build script.

The compiled core is optional: when Cython and a C compiler are available
the extension fct._fastcore is built, otherwise the package falls back to
the pure Python kernels in fct._purecore at import time.
"""
import os

from setuptools import setup

ext_modules = []
try:
    from Cython.Build import cythonize
    from setuptools import Extension

    if os.path.exists("src/fct/_fastcore.pyx"):
        ext = Extension("fct._fastcore", ["src/fct/_fastcore.pyx"], optional=True)
        ext_modules = cythonize([ext], language_level="3")
except ImportError:
    pass

setup(ext_modules=ext_modules)
