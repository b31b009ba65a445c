"""Build script: compiles the optional Cython kernel.

The package works without the extension (a pure-Python kernel is selected
at import time), so the extension is marked optional and any build failure
degrades gracefully to the fallback.
"""

from setuptools import Extension, setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext = Extension("dyckmax._band", ["src/dyckmax/_band.pyx"], optional=True)
    ext_modules = cythonize([ext], language_level="3")
except ImportError:
    pass

setup(ext_modules=ext_modules)
