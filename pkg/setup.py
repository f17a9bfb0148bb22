import os

from setuptools import Extension, setup

ext_modules = []
if not os.environ.get("SUBBIRKHOFF_NO_EXT"):
    try:
        from Cython.Build import cythonize
    except ImportError:
        pass
    else:
        ext_modules = cythonize(
            [Extension("subbirkhoff._ckernels", ["src/subbirkhoff/_ckernels.pyx"],
                       extra_compile_args=["-O3"])],
            compiler_directives={"language_level": "3", "boundscheck": False,
                                 "wraparound": False},
        )

setup(ext_modules=ext_modules)
