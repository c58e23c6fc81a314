from setuptools import setup

try:
    from Cython.Build import cythonize
except ImportError:
    # no Cython: the pure-Python kernels are used
    ext_modules = []
else:
    ext_modules = cythonize(
        ["src/pathham/_ckernels.pyx"],
        compiler_directives={"language_level": "3"},
    )

setup(ext_modules=ext_modules)
