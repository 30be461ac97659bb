import os

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize

    USE_CYTHON = True
except ImportError:
    USE_CYTHON = False

EXT_NAME = "uclab._kernels._ckernels"
SOURCE = os.path.join("src", "uclab", "_kernels", "_ckernels")

if os.environ.get("UCLAB_NO_EXTENSION"):
    ext_modules = []
elif USE_CYTHON:
    ext_modules = cythonize(
        [Extension(EXT_NAME, [SOURCE + ".pyx"], extra_compile_args=["-O3"])],
        compiler_directives={"language_level": "3"},
    )
elif os.path.exists(SOURCE + ".c"):
    ext_modules = [Extension(EXT_NAME, [SOURCE + ".c"], extra_compile_args=["-O3"])]
else:
    ext_modules = []

setup(ext_modules=ext_modules)
