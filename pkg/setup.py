import os

from setuptools import Extension, setup

PYX = os.path.join("src", "transitgeo", "_kernel.pyx")

try:
    from Cython.Build import cythonize
except ImportError:
    cythonize = None

if cythonize is not None and os.path.exists(PYX):
    ext_modules = cythonize(
        [Extension("transitgeo._kernel", [PYX], extra_compile_args=["-O2"])],
        compiler_directives={"language_level": "3"},
    )
else:
    # Pure-Python fallback kernel is used when the extension is absent.
    ext_modules = []

setup(ext_modules=ext_modules)
