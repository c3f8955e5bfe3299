from setuptools import Extension, setup
from Cython.Build import cythonize

# -ffp-contract=off keeps the compiled kernels bit-identical to the numpy
# fallback: no fused multiply-adds, plain IEEE-754 double ops in source order.
extensions = [
    Extension(
        "tricomplex._kernels",
        ["src/tricomplex/_kernels.pyx"],
        extra_compile_args=["-O3", "-ffp-contract=off"],
    )
]

setup(ext_modules=cythonize(extensions, language_level=3))
