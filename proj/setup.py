import subprocess
import sys
from pathlib import Path

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class CMakeExtension(Extension):
    def __init__(self, name):
        super().__init__(name, sources=[])


class CMakeBuild(build_ext):
    def build_extension(self, ext):
        source = Path(__file__).parent.resolve()
        build_dir = Path(self.build_temp).resolve()
        build_dir.mkdir(parents=True, exist_ok=True)
        subprocess.run(
            ["cmake", str(source), "-DCMAKE_BUILD_TYPE=Release",
             f"-DPython_EXECUTABLE={sys.executable}"],
            cwd=build_dir, check=True)
        subprocess.run(["cmake", "--build", ".", "--target", "_core"],
                       cwd=build_dir, check=True)
        built = next((build_dir / "python" / "prowras").glob("_core*"))
        out = Path(self.get_ext_fullpath(ext.name)).resolve()
        out.parent.mkdir(parents=True, exist_ok=True)
        self.copy_file(str(built), str(out))


setup(
    packages=["prowras"],
    package_dir={"prowras": "python/prowras"},
    ext_modules=[CMakeExtension("prowras._core")],
    cmdclass={"build_ext": CMakeBuild},
)
