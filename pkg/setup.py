from setuptools import Extension, setup

# The compiled kernel is an accelerator: the package falls back to the pure
# Python twin at import time if the extension is unavailable.
# -ffp-contract=off is required: the error-free transforms (two_sum/two_prod)
# rely on individually rounded multiplies and adds, which FMA contraction
# would silently merge.
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [
            Extension(
                "mlsemigroup._ddcore_cy",
                ["src/mlsemigroup/_ddcore_cy.pyx"],
                extra_compile_args=["-O2", "-ffp-contract=off"],
            )
        ],
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    ext_modules = []

setup(ext_modules=ext_modules)
