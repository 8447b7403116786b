"""Build script with an optional compiled elimination kernel.

The package is pure Python unless Cython and a C compiler are both
available, in which case the mod-p elimination kernel is compiled.
A failed extension build must never fail the install: the runtime
falls back to the vectorized numpy implementation.
"""

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class optional_build_ext(build_ext):
    """build_ext that downgrades compiler failures to a warning."""

    def run(self):
        try:
            super().run()
        except Exception as exc:  # compiler or toolchain missing
            print(f"warning: skipping compiled kernel ({exc!r}); "
                  "pure-Python backend will be used")

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:
            print(f"warning: could not build {ext.name} ({exc!r}); "
                  "pure-Python backend will be used")


extensions = []
try:
    from Cython.Build import cythonize

    extensions = cythonize(
        [
            Extension(
                "geoline.exactnum._elim",
                ["src/geoline/exactnum/_elim.pyx"],
                extra_compile_args=["-O3"],
            )
        ],
        compiler_directives={
            "language_level": "3",
            "boundscheck": False,
            "wraparound": False,
        },
    )
except ImportError:
    print("Cython not available; installing with the pure-Python backend")

setup(
    ext_modules=extensions,
    cmdclass={"build_ext": optional_build_ext},
)
