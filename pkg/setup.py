"""Build script: compiles the histogram kernel extension when a toolchain is
available, otherwise installs the pure-Python package unchanged (the kernel
dispatcher falls back at import time)."""

import os
import sys

from setuptools import setup
from setuptools.errors import CCompilerError, ExecError, PlatformError


def extensions():
    from Cython.Build import cythonize
    from setuptools import Extension

    return cythonize(
        [Extension("declutter._histcore", ["src/declutter/_histcore.pyx"])],
        language_level=3,
    )


def run(with_ext: bool):
    kwargs = {}
    if with_ext:
        import numpy

        ext_modules = extensions()
        for ext in ext_modules:
            ext.include_dirs.append(numpy.get_include())
            ext.extra_compile_args = ["-O3"]
        kwargs["ext_modules"] = ext_modules
    setup(**kwargs)


if os.environ.get("DECLUTTER_PURE"):
    run(with_ext=False)
else:
    try:
        run(with_ext=True)
    except (CCompilerError, ExecError, PlatformError, ImportError, SystemExit) as exc:
        sys.stderr.write(f"warning: extension build failed ({exc}); "
                         "installing pure-Python fallback\n")
        run(with_ext=False)
