from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    # no Cython: the package runs on szl._pykernels
    ext_modules = []
else:
    ext_modules = cythonize(
        [Extension("szl._ckernels", ["src/szl/_ckernels.pyx"], optional=True, extra_compile_args=["-O3"])],
        compiler_directives={
            "language_level": "3",
            "boundscheck": False,
            "wraparound": False,
            "cdivision": True,
        },
    )

setup(ext_modules=ext_modules)
