"""Build hook for the optional compiled kernels.

Without Cython (or a C compiler) the package installs pure Python and
``permtab._accel`` falls back to ``permtab._pykernels``.
"""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    ext_modules = []
else:
    ext_modules = cythonize(
        [Extension("permtab._kernels", ["src/permtab/_kernels.pyx"], extra_compile_args=["-O3"], optional=True)],
        compiler_directives={"language_level": "3"},
    )

setup(ext_modules=ext_modules)
