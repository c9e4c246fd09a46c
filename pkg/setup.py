"""Build the optional compiled enumeration kernel.

If Cython or a C compiler is unavailable the package still installs and
falls back to ``selfdual._enum_py`` at import time.
"""

import os
import platform

from setuptools import setup

ext_modules = []
if not os.environ.get("SELFDUAL_NO_EXT"):
    try:
        import numpy as np
        from Cython.Build import cythonize
        from setuptools import Extension
    except ImportError:
        pass
    else:
        extra = ["-O3"]
        if platform.machine().lower() in ("x86_64", "amd64"):
            extra.append("-mpopcnt")
        ext_modules = cythonize(
            [
                Extension(
                    "selfdual._enum",
                    ["src/selfdual/_enum.pyx"],
                    include_dirs=[np.get_include()],
                    extra_compile_args=extra,
                    define_macros=[("NPY_NO_DEPRECATED_API", "NPY_1_7_API_VERSION")],
                )
            ],
            compiler_directives={"language_level": "3"},
        )

setup(ext_modules=ext_modules)
