import glob
import os

from pybind11.setup_helpers import Pybind11Extension, build_ext
from setuptools import setup

here = os.path.dirname(os.path.abspath(__file__))

ext = Pybind11Extension(
    "gamechrom._core",
    sorted(glob.glob("src/*.cpp")) + ["bindings/module.cpp"],
    include_dirs=["include", "vendor"],
    cxx_std=20,
    define_macros=[("GAMECHROM_DATA_DIR", '"%s"' % os.path.join(here, "data"))],
)

setup(ext_modules=[ext], cmdclass={"build_ext": build_ext})
