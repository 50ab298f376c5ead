"""Build script for the optional compiled kernel.

The package works without it; ``tropgeom._kernels`` falls back to the
pure-Python implementation when the extension is missing.
"""

from setuptools import setup
from setuptools.command.build_ext import build_ext


class OptionalBuildExt(build_ext):
    def run(self):
        try:
            super().run()
        except Exception as exc:  # noqa: BLE001
            print(f"warning: compiled kernel not built ({exc}); using pure Python")

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:  # noqa: BLE001
            print(f"warning: failed to build {ext.name} ({exc}); using pure Python")


def _extensions():
    try:
        import numpy
        from Cython.Build import cythonize
    except ImportError:
        return []
    from setuptools import Extension

    ext = Extension(
        "tropgeom._kernels._ckernel",
        ["src/tropgeom/_kernels/_ckernel.pyx"],
        include_dirs=[numpy.get_include()],
        define_macros=[("NPY_NO_DEPRECATED_API", "NPY_1_7_API_VERSION")],
    )
    return cythonize(
        [ext],
        compiler_directives=dict(
            language_level="3",
            boundscheck=False,
            wraparound=False,
        ),
    )


setup(ext_modules=_extensions(), cmdclass={"build_ext": OptionalBuildExt})
