from setuptools import Extension, setup
from Cython.Build import cythonize

ext_modules = [
    Extension(
        "moore57._sweep_kernel",
        ["src/moore57/_sweep_kernel.pyx"],
        extra_compile_args=["-O2"],
    )
]

setup(ext_modules=cythonize(ext_modules, compiler_directives={"language_level": "3"}))
