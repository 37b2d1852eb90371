"""Build hook for the optional compiled Viterbi kernel.

The package works without the extension (a NumPy fallback is selected at
import time), so any build failure here degrades to the pure-Python wheel.
"""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [
            Extension(
                "nerkit._kernel._viterbi",
                ["src/nerkit/_kernel/_viterbi.pyx"],
            )
        ],
        language_level="3",
    )
except ImportError:
    ext_modules = []

setup(ext_modules=ext_modules)
