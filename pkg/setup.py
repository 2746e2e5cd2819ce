"""Build hook for the compiled defect-scan kernel.

The extension is optional: when Cython (or a C compiler) is unavailable the
package falls back to the pure-numpy kernel at import time.
"""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    ext_modules = []
else:
    ext_modules = cythonize(
        [Extension("feqlab._defect_cy", ["src/feqlab/_defect_cy.pyx"])],
        compiler_directives={"language_level": 3},
    )

setup(ext_modules=ext_modules)
