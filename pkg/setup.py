from setuptools import Extension, setup

try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [
            Extension(
                "locball._kernel._ratkern",
                ["src/locball/_kernel/_ratkern.pyx"],
            )
        ],
        language_level=3,
    )
except ImportError:
    # No Cython at build time: install pure-Python only, the fractions
    # fallback is selected at import.
    ext_modules = []

setup(ext_modules=ext_modules)
